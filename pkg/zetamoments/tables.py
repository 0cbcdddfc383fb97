"""
Table builders for the command line: T(l, j), the moment table, and the
closed forms of A^(k)(1). Rows are plain dicts; pandas renders csv and the
markdown renderer blanks cells outside the triangle.
"""

import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional
import pandas as pd
from zetamoments.moments import a_deriv_closed, moment_closed, moment_scale, moment_value, tcoef
from zetamoments.reports import decimal_str
from zetamoments.symbolic import eval_numeric, render

MINUS = "−"


def tnj_columns(max_l: int) -> List[str]:
    return ["l"] + [str(j) for j in range(2, max_l + 1)]


def tnj_rows(max_l: int) -> List[Dict[str, Any]]:
    """Rectangular rows; cells with j > l hold 0."""
    return [
        {"l": l, **{str(j): (tcoef(l, j) if j <= l else 0) for j in range(2, max_l + 1)}}
        for l in range(2, max_l + 1)
    ]


def tnj_markdown(max_l: int) -> str:
    cols = list(range(2, max_l + 1))
    lines = [
        "| ℓ \\ j | " + " | ".join(str(j) for j in cols) + " |",
        "|---|" + "---|" * len(cols),
    ]
    for l in range(2, max_l + 1):
        cells = [str(tcoef(l, j)).replace("-", MINUS) if j <= l else "" for j in cols]
        lines.append(f"| {l} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def format_pi_multiple(r: Fraction) -> str:
    """2 -> "2π", -1/2 -> "−π/2", 1/8 -> "π/8"."""
    sign = MINUS if r < 0 else ""
    r = abs(r)
    num = "" if r.numerator == 1 else str(r.numerator)
    den = "" if r.denominator == 1 else f"/{r.denominator}"
    return f"{sign}{num}π{den}"


MOMENT_COLUMNS = ["k", "N", "scale", "closed_form", "pi_form", "symbolic", "M_k"]


def moment_rows(max_n: int, digits: int) -> List[Dict[str, Any]]:
    rows = []
    for n in range(max_n + 1):
        m = moment_closed(n)
        rows.append(
            {
                "k": 2 * n,
                "N": n,
                "scale": format_pi_multiple(moment_scale(n)),
                "closed_form": render(m.value),
                "pi_form": render(m.pi_form()),
                "symbolic": m.value.to_dict(),
                "M_k": decimal_str(moment_value(n, digits), digits),
            }
        )
    return rows


AD_COLUMNS = ["k", "closed_form", "symbolic", "value", "quadrature", "difference"]


def aderiv_row(k: int, digits: int, numeric: Optional[Any] = None) -> Dict[str, Any]:
    d = a_deriv_closed(k)
    value = eval_numeric(d.value, digits)
    row: Dict[str, Any] = {
        "k": k,
        "closed_form": render(d.value, use_c=True),
        "symbolic": d.value.to_dict(),
        "value": decimal_str(value, digits),
    }
    if numeric is not None:
        row["quadrature"] = decimal_str(numeric, digits)
        row["difference"] = decimal_str(abs(value - numeric), 3)
    return row


def table_document(command: str, parameters: Dict[str, Any], columns: List[str],
                   rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    present = [c for c in columns if any(c in r for r in rows)]
    return {"command": command, "parameters": parameters, "columns": present, "rows": rows}


def render_rows(document: Dict[str, Any], fmt: str) -> str:
    """csv through pandas, json as the document, markdown as a pipe table."""
    columns = document["columns"]
    match fmt:
        case "json":
            return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
        case "csv":
            frame = pd.DataFrame(
                [{c: _flat(r.get(c, "")) for c in columns} for r in document["rows"]], columns=columns
            )
            buf = io.StringIO()
            frame.to_csv(buf, index=False)
            return buf.getvalue()
        case "markdown":
            lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
            for r in document["rows"]:
                lines.append("| " + " | ".join(str(_flat(r.get(c, ""))) for c in columns) + " |")
            return "\n".join(lines) + "\n"
        case _:
            raise ValueError(f"Invalid format: {fmt}")


def _flat(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    return value
