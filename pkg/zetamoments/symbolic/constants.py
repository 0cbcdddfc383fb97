"""
Exact symbolic values.

A :class:`SymVal` is a finite rational linear combination of the constants
1, log(2 pi), gamma, zeta(j) (j >= 2) and pi^(2m). Values live either in zeta
form (no pi powers) or in pi form (no even zeta values); the two are never
mixed inside one value.
"""

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Iterator, Mapping, Optional, Union
import mpmath
from loguru import logger
from zetamoments.exact.numbers import bernoulli
import zetamoments.utils.constants as CONST

Scalar = Union[int, Fraction]


class SymbolKind(Enum):
    UNIT = 0
    LOG2PI = 1
    EULER_GAMMA = 2
    ZETA = 3
    PI_POW = 4


@dataclass(frozen=True)
class ConstSymbol:
    kind: SymbolKind
    index: int = 0

    def __post_init__(self):
        match self.kind:
            case SymbolKind.ZETA:
                if self.index < 2:
                    raise ValueError(f"Zeta symbol requires j >= 2, got {self.index}")
            case SymbolKind.PI_POW:
                if self.index < 2 or self.index % 2:
                    raise ValueError(f"PiPow exponent must be even and positive, got {self.index}")
            case _:
                if self.index != 0:
                    raise ValueError(f"{self.kind.name} carries no index, got {self.index}")

    def __lt__(self, other: "ConstSymbol") -> bool:
        return (self.kind.value, self.index) < (other.kind.value, other.index)

    @property
    def key(self) -> str:
        match self.kind:
            case SymbolKind.UNIT:
                return "unit"
            case SymbolKind.LOG2PI:
                return "log2pi"
            case SymbolKind.EULER_GAMMA:
                return "gamma"
            case SymbolKind.ZETA:
                return f"zeta{self.index}"
            case SymbolKind.PI_POW:
                return f"pi{self.index}"

    @staticmethod
    def from_key(key: str) -> "ConstSymbol":
        match key:
            case "unit":
                return UNIT
            case "log2pi":
                return LOG2PI
            case "gamma":
                return EULER_GAMMA
        m = _RE_INDEXED_KEY.fullmatch(key)
        if not m:
            raise ValueError(f"Unknown constant symbol key: {key!r}")
        kind = SymbolKind.ZETA if m.group(1) == "zeta" else SymbolKind.PI_POW
        return ConstSymbol(kind, int(m.group(2)))


_RE_INDEXED_KEY = re.compile(r"(zeta|pi)(\d+)")

UNIT = ConstSymbol(SymbolKind.UNIT)
LOG2PI = ConstSymbol(SymbolKind.LOG2PI)
EULER_GAMMA = ConstSymbol(SymbolKind.EULER_GAMMA)


def Zeta(j: int) -> ConstSymbol:
    return ConstSymbol(SymbolKind.ZETA, j)


def PiPow(e: int) -> ConstSymbol:
    return ConstSymbol(SymbolKind.PI_POW, e)


class SymVal(Mapping[ConstSymbol, Fraction]):
    """Immutable map ConstSymbol -> Fraction with no zero entries."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[ConstSymbol, Scalar]] = None):
        clean: Dict[ConstSymbol, Fraction] = {}
        for sym, c in (terms or {}).items():
            if not isinstance(sym, ConstSymbol):
                raise TypeError(f"SymVal keys must be ConstSymbol, got {type(sym).__name__}")
            c = Fraction(c)
            if c:
                clean[sym] = c
        has_pi = any(s.kind is SymbolKind.PI_POW for s in clean)
        has_even_zeta = any(s.kind is SymbolKind.ZETA and s.index % 2 == 0 for s in clean)
        if has_pi and has_even_zeta:
            raise ValueError("SymVal cannot mix pi powers with even zeta values")
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def of(cls, symbol: ConstSymbol, coefficient: Scalar = 1) -> "SymVal":
        return cls({symbol: coefficient})

    @classmethod
    def rational(cls, value: Scalar) -> "SymVal":
        return cls({UNIT: value})

    def __getitem__(self, symbol: ConstSymbol) -> Fraction:
        return self._terms[symbol]

    def __iter__(self) -> Iterator[ConstSymbol]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, symbol: ConstSymbol) -> Fraction:
        return self._terms.get(symbol, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_pi_form(self) -> bool:
        return any(s.kind is SymbolKind.PI_POW for s in self._terms)

    @property
    def has_even_zeta(self) -> bool:
        return any(s.kind is SymbolKind.ZETA and s.index % 2 == 0 for s in self._terms)

    def _coerce(self, other: Any) -> Optional["SymVal"]:
        if isinstance(other, SymVal):
            return other
        if isinstance(other, (int, Fraction)):
            return SymVal.rational(other)
        return None

    def __add__(self, other: Any) -> "SymVal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if (self.is_pi_form and rhs.has_even_zeta) or (rhs.is_pi_form and self.has_even_zeta):
            raise ValueError("Cannot add a zeta-form value to a pi-form value")
        terms = dict(self._terms)
        for sym, c in rhs.items():
            terms[sym] = terms.get(sym, Fraction(0)) + c
        return SymVal(terms)

    __radd__ = __add__

    def __neg__(self) -> "SymVal":
        return SymVal({s: -c for s, c in self._terms.items()})

    def __sub__(self, other: Any) -> "SymVal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "SymVal":
        return (-self) + other

    def __mul__(self, other: Any) -> "SymVal":
        if isinstance(other, SymVal):
            raise TypeError("Product of two SymVal values is not defined")
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return SymVal({s: c * other for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "SymVal":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{s.key}: {c}" for s, c in self._terms.items())
        return f"SymVal({{{inner}}})"

    def to_dict(self) -> Dict[str, str]:
        return {s.key: f"{c.numerator}/{c.denominator}" for s, c in self._terms.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @staticmethod
    def from_dict(data: Mapping[str, str]) -> "SymVal":
        return SymVal({ConstSymbol.from_key(k): Fraction(v) for k, v in data.items()})

    @staticmethod
    def from_json(text: str) -> "SymVal":
        return SymVal.from_dict(json.loads(text))


def constant_C() -> SymVal:
    """C = (log(2 pi) - gamma) / 2"""
    return SymVal({LOG2PI: Fraction(1, 2), EULER_GAMMA: Fraction(-1, 2)})


def odd_zeta_terms(v: SymVal) -> Dict[int, Fraction]:
    return {s.index: c for s, c in v.items() if s.kind is SymbolKind.ZETA and s.index % 2}


def assert_no_odd_zeta(v: SymVal) -> SymVal:
    odd = odd_zeta_terms(v)
    if odd:
        raise ArithmeticError(f"Unexpected odd zeta coefficients: {odd}")
    return v


def zeta_even_pi_coefficient(j: int) -> Fraction:
    """Rational r with zeta(2j) = r pi^(2j)."""
    if j < 1:
        raise ValueError(f"zeta(2j) reduction requires j >= 1, got {j}")
    return Fraction((-1) ** (j + 1) * 2 ** (2 * j), 2 * factorial(2 * j)) * bernoulli(2 * j)


def reduce_zeta_even(v: SymVal) -> SymVal:
    """Replace every zeta(2j) by its rational multiple of pi^(2j)."""
    odd = odd_zeta_terms(v)
    if odd:
        raise ValueError(f"Cannot reduce odd zeta values to pi powers: {odd}")
    terms: Dict[ConstSymbol, Fraction] = {}
    for sym, c in v.items():
        if sym.kind is SymbolKind.ZETA:
            target = PiPow(sym.index)
            terms[target] = terms.get(target, Fraction(0)) + c * zeta_even_pi_coefficient(sym.index // 2)
        else:
            terms[sym] = terms.get(sym, Fraction(0)) + c
    return SymVal(terms)




def _symbol_value(sym: ConstSymbol) -> mpmath.mpf:
    match sym.kind:
        case SymbolKind.UNIT:
            return mpmath.mpf(1)
        case SymbolKind.LOG2PI:
            return mpmath.log(2 * mpmath.pi)
        case SymbolKind.EULER_GAMMA:
            return +mpmath.euler
        case SymbolKind.PI_POW:
            return mpmath.pi ** sym.index
        case SymbolKind.ZETA:
            if sym.index % 2 == 0:
                r = zeta_even_pi_coefficient(sym.index // 2)
                return mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** sym.index
            return mpmath.zeta(sym.index)


def eval_numeric(v: SymVal, digits: int = CONST.DEFAULT_DIGITS) -> mpmath.mpf:
    """
    Decimal value of ``v`` as an mpmath mpf.

    Evaluation runs with ``EVAL_GUARD_DIGITS`` extra digits, so the absolute
    error is far below 10^(1-digits) for the magnitudes met here.
    """
    if digits < 1 or digits > CONST.MAX_EVAL_DIGITS:
        raise ValueError(f"Unsupported precision: {digits} digits (1..{CONST.MAX_EVAL_DIGITS})")
    with mpmath.workdps(digits + CONST.EVAL_GUARD_DIGITS):
        terms = [
            mpmath.mpf(c.numerator) / c.denominator * _symbol_value(sym) for sym, c in v.items()
        ]
        value = mpmath.fsum(terms)
    logger.trace(f"eval_numeric({v!r}, {digits}) = {mpmath.nstr(value, digits)}")
    return value
