# The MIT License (MIT)
# Copyright © 2025 Zetamoments

# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the “Software”), to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software,
# and to permit persons to whom the Software is furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all copies or substantial portions of
# the Software.

# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
# THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

import os
import sys
import json
import time
import argparse
from math import gcd
from typing import Any, Dict, List, Optional, Sequence
from loguru import logger
import zetamoments
import zetamoments.utils.constants as CONST
from zetamoments.numquad import a_deriv_numeric
from zetamoments.reports import (
    REPORT_SCHEMA,
    TABLE_SCHEMA,
    TAIL_CALIBRATION_NOTE,
    RunReport,
    validate_document,
)
from zetamoments.suites import (
    RAMANUJAN_POINTS,
    RECIPROCITY_PAIRS,
    verify_aderiv,
    verify_identities,
    verify_moments,
    verify_ramanujan,
    verify_reciprocity,
)
from zetamoments.tables import (
    AD_COLUMNS,
    MOMENT_COLUMNS,
    aderiv_row,
    moment_rows,
    render_rows,
    table_document,
    tnj_columns,
    tnj_markdown,
    tnj_rows,
)
from zetamoments.utils.config import (
    add_logging_args,
    add_output_args,
    add_quad_args,
    add_tol_arg,
    env_default,
    load_environment,
    quad_config,
)
from zetamoments.utils.logging import setup_logging

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

RECORD_COLUMNS = {
    "moments": ["N", "closed_decimal", "quadrature_decimal", "abs_err", "rel_err", "tol", "pass"],
    "residual": ["name", "params", "expected", "observed", "residual", "tol", "pass"],
}


def build_parser() -> argparse.ArgumentParser:
    load_environment()

    common = argparse.ArgumentParser(add_help=False)
    add_output_args(common)
    add_logging_args(common)
    quad = argparse.ArgumentParser(add_help=False)
    add_quad_args(quad)

    parser = argparse.ArgumentParser(
        prog="zetamoments",
        description="Closed forms and quadrature checks for weighted moments of |Gamma zeta|^2 "
        "on the critical line.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {zetamoments.__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    tnj = sub.add_parser("tnj", parents=[common], help="Table of the integers T(l, j).")
    tnj.add_argument("--max-l", type=int, default=env_default("MAX_L", 8, int))

    moments = sub.add_parser("moments", parents=[common], help="Closed forms and values of M_k.")
    moments.add_argument("--max-n", type=int, default=env_default("MAX_N", 6, int))

    aderiv = sub.add_parser("aderiv", parents=[common, quad], help="Closed form of A^(k)(1).")
    aderiv.add_argument("--k", type=int, default=2)
    aderiv.add_argument("--numeric", action="store_true", help="Also integrate numerically.")

    verify = sub.add_parser("verify", help="Run a verification suite.")
    suites = verify.add_subparsers(dest="which", required=True)

    v_moments = suites.add_parser("moments", parents=[common, quad])
    v_moments.add_argument("--max-n", type=int, default=6)
    add_tol_arg(v_moments, CONST.DEFAULT_TOL)

    v_aderiv = suites.add_parser("aderiv", parents=[common, quad])
    v_aderiv.add_argument("--max-k", type=int, default=CONST.MAX_NUMERIC_K)
    add_tol_arg(v_aderiv, CONST.DEFAULT_IDENTITY_TOL)

    v_ram = suites.add_parser("ramanujan", parents=[common, quad])
    v_ram.add_argument("--v", type=float, action="append", dest="v_points")
    add_tol_arg(v_ram, CONST.DEFAULT_IDENTITY_TOL)

    v_rec = suites.add_parser("reciprocity", parents=[common, quad])
    v_rec.add_argument("--h", type=int, action="append", dest="h_values")
    v_rec.add_argument("--k", type=int, action="append", dest="k_values")
    add_tol_arg(v_rec, CONST.DEFAULT_IDENTITY_TOL)

    v_ident = suites.add_parser("identities", parents=[common])
    v_ident.add_argument("--seed", type=int, default=env_default("SEED", 0, int))
    return parser


def check_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    """Range checks that argparse cannot express; violations exit with code 2."""
    if args.digits < 1 or args.digits > CONST.MAX_EVAL_DIGITS:
        parser.error(f"--digits must be in [1, {CONST.MAX_EVAL_DIGITS}]")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    match args.command:
        case "tnj":
            if not 2 <= args.max_l <= CONST.MAX_TNJ_ROWS:
                parser.error(f"--max-l must be in [2, {CONST.MAX_TNJ_ROWS}]")
        case "moments":
            if not 0 <= args.max_n <= CONST.MAX_MOMENT_N:
                parser.error(f"--max-n must be in [0, {CONST.MAX_MOMENT_N}]")
        case "aderiv":
            limit = CONST.MAX_NUMERIC_K if args.numeric else CONST.MAX_SYMBOLIC_K
            if not 0 <= args.k <= limit:
                parser.error(f"--k must be in [0, {limit}]")
        case "verify":
            _check_verify_args(parser, args)


def _check_verify_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    match args.which:
        case "moments":
            if not 0 <= args.max_n <= CONST.MAX_QUADRATURE_N:
                parser.error(f"--max-n must be in [0, {CONST.MAX_QUADRATURE_N}]")
        case "aderiv":
            if not 0 <= args.max_k <= CONST.MAX_NUMERIC_K:
                parser.error(f"--max-k must be in [0, {CONST.MAX_NUMERIC_K}]")
        case "ramanujan":
            for v in args.v_points or []:
                if abs(v) > CONST.MAX_RAMANUJAN_V:
                    parser.error(f"--v must satisfy |v| <= {CONST.MAX_RAMANUJAN_V}")
        case "reciprocity":
            h_values, k_values = args.h_values or [], args.k_values or []
            if len(h_values) != len(k_values):
                parser.error("--h and --k must be given the same number of times")
            for h, k in zip(h_values, k_values):
                if h < 1 or k < 1 or gcd(h, k) != 1:
                    parser.error(f"--h {h} --k {k}: need h, k >= 1 and gcd(h, k) = 1")


def write_document(path: str, document: Dict[str, Any]) -> None:
    tmp_file = path + ".tmp"
    try:
        with open(tmp_file, "w", encoding="utf-8") as f:
            json.dump(document, f, indent=2, ensure_ascii=False)
        os.replace(tmp_file, path)
    except Exception as e:
        logger.error(f"Error writing report {path}: {e}")
        if os.path.exists(tmp_file):
            os.remove(tmp_file)
        raise


def _emit(
    args: argparse.Namespace, document: Dict[str, Any], schema: Dict[str, Any], text: Optional[str] = None
) -> bool:
    if not validate_document(document, schema):
        return False
    if args.out:
        write_document(args.out, document)
    if text is None and "columns" in document:
        text = render_rows(document, args.format)
    elif text is None:
        text = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    sys.stdout.write(text)
    return True


def cmd_tnj(args: argparse.Namespace) -> int:
    document = table_document("tnj", {"max_l": args.max_l}, tnj_columns(args.max_l), tnj_rows(args.max_l))
    text = tnj_markdown(args.max_l) if args.format == "markdown" else None
    return EXIT_OK if _emit(args, document, TABLE_SCHEMA, text) else EXIT_FAILED


def cmd_moments(args: argparse.Namespace) -> int:
    rows = moment_rows(args.max_n, args.digits)
    document = table_document("moments", {"max_n": args.max_n, "digits": args.digits}, MOMENT_COLUMNS, rows)
    return EXIT_OK if _emit(args, document, TABLE_SCHEMA) else EXIT_FAILED


def cmd_aderiv(args: argparse.Namespace) -> int:
    numeric = a_deriv_numeric(args.k, quad_config(args)) if args.numeric else None
    row = aderiv_row(args.k, args.digits, numeric)
    document = table_document("aderiv", {"k": args.k, "numeric": args.numeric}, AD_COLUMNS, [row])
    return EXIT_OK if _emit(args, document, TABLE_SCHEMA) else EXIT_FAILED


def _run_suite(args: argparse.Namespace) -> RunReport:
    start = time.perf_counter()
    notes: List[str] = []
    params: Dict[str, Any] = {"tol": getattr(args, "tol", 0.0)}
    match args.which:
        case "moments":
            cfg = quad_config(args, args.tol)
            records = verify_moments(args.max_n, cfg, args.digits)
            params.update(max_n=args.max_n, config=cfg.model_dump())
            notes.append(TAIL_CALIBRATION_NOTE)
        case "aderiv":
            cfg = quad_config(args)
            records = verify_aderiv(args.max_k, cfg, args.tol, args.digits)
            params.update(max_k=args.max_k, config=cfg.model_dump())
        case "ramanujan":
            cfg = quad_config(args)
            points = args.v_points or list(RAMANUJAN_POINTS)
            records = verify_ramanujan(points, cfg, args.tol)
            params.update(v=points, config=cfg.model_dump())
        case "reciprocity":
            cfg = quad_config(args)
            pairs = list(zip(args.h_values, args.k_values)) if args.h_values else list(RECIPROCITY_PAIRS)
            records = verify_reciprocity(pairs, cfg, args.tol)
            params.update(pairs=[list(p) for p in pairs], config=cfg.model_dump())
        case "identities":
            records = verify_identities(args.seed)
            params = {"seed": args.seed}
        case _:
            raise ValueError(f"Invalid suite: {args.which}")
    return RunReport(
        command=f"verify {args.which}",
        parameters=params,
        records=records,
        passed=all(r.passed for r in records),
        wall_time=time.perf_counter() - start,
        notes=notes,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    report = _run_suite(args)
    document = report.to_dict()
    if args.format == "json":
        ok = _emit(args, document, REPORT_SCHEMA)
    else:
        kind = "moments" if args.which == "moments" else "residual"
        table = table_document(report.command, report.parameters, RECORD_COLUMNS[kind], document["records"])
        if not validate_document(document, REPORT_SCHEMA):
            return EXIT_FAILED
        if args.out:
            write_document(args.out, document)
        sys.stdout.write(render_rows(table, args.format))
        ok = True
    logger.info(f"{report.command}: {'pass' if report.passed else 'FAIL'} in {report.wall_time:.2f}s")
    return EXIT_OK if ok and report.passed else EXIT_FAILED


COMMANDS = {"tnj": cmd_tnj, "moments": cmd_moments, "aderiv": cmd_aderiv, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    check_args(parser, args)
    setup_logging(args.log_level, args.events_log)
    try:
        return COMMANDS[args.command](args)
    except ArithmeticError as e:
        logger.error(f"Numerical check failed: {e}")
        return EXIT_FAILED
    except ValueError as e:
        logger.error(f"Invalid parameters: {e}")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
