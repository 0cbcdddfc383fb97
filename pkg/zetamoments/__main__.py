from zetamoments.cli import run

run()
