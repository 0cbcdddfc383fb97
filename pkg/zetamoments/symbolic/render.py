from fractions import Fraction
from typing import List, Tuple
from zetamoments.symbolic.constants import (
    EULER_GAMMA,
    LOG2PI,
    ConstSymbol,
    SymbolKind,
    SymVal,
)

MINUS = "−"

# log(2π) and γ lead, then the rational part, then zeta values and pi powers.
_DISPLAY_ORDER = {
    SymbolKind.LOG2PI: 0,
    SymbolKind.EULER_GAMMA: 1,
    SymbolKind.UNIT: 2,
    SymbolKind.ZETA: 3,
    SymbolKind.PI_POW: 4,
}


def _display_key(sym: ConstSymbol) -> Tuple[int, int]:
    return _DISPLAY_ORDER[sym.kind], sym.index


def symbol_name(sym: ConstSymbol) -> str:
    match sym.kind:
        case SymbolKind.UNIT:
            return ""
        case SymbolKind.LOG2PI:
            return "log(2π)"
        case SymbolKind.EULER_GAMMA:
            return "γ"
        case SymbolKind.ZETA:
            return f"ζ({sym.index})"
        case SymbolKind.PI_POW:
            return f"π^{sym.index}"


def _format_term(c: Fraction, name: str) -> Tuple[bool, str]:
    negative = c < 0
    c = abs(c)
    if not name:
        return negative, str(c)
    if c == 1:
        return negative, name
    if c.denominator == 1:
        return negative, f"{c.numerator}{name}"
    return negative, f"({c}){name}"


def render(v: SymVal, use_c: bool = False) -> str:
    """
    Human readable form of ``v``, e.g. "log(2π) − γ − 23/6 + (4/3)ζ(2)".

    With ``use_c`` the log(2π) coefficient is absorbed into C = (log(2π) − γ)/2,
    giving "2C − 4/3 + (1/3)ζ(2)" for the same kind of value.
    """
    terms: List[Tuple[Fraction, str]] = []
    rest = dict(v.items())
    if use_c:
        a = rest.pop(LOG2PI, Fraction(0))
        if a:
            terms.append((2 * a, "C"))
            rest[EULER_GAMMA] = rest.get(EULER_GAMMA, Fraction(0)) + a
    ordered = sorted(rest.items(), key=lambda kv: _display_key(kv[0]))
    terms.extend((c, symbol_name(sym)) for sym, c in ordered if c)
    if not terms:
        return "0"
    out = []
    for i, (c, name) in enumerate(terms):
        negative, body = _format_term(c, name)
        if i == 0:
            out.append(f"{MINUS}{body}" if negative else body)
        else:
            out.append(f" {MINUS} {body}" if negative else f" + {body}")
    return "".join(out)
