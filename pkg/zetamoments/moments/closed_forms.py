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

"""
Closed forms for the weighted moments of |Gamma zeta|^2 on the critical line
and for the derivatives of the exponential auto-correlation A at v = 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Dict
import mpmath
from loguru import logger
from zetamoments.exact import bernoulli, binomial, harmonic, stirling2
from zetamoments.symbolic import (
    EULER_GAMMA,
    LOG2PI,
    SymbolKind,
    SymVal,
    Zeta,
    assert_no_odd_zeta,
    constant_C,
    eval_numeric,
    reduce_zeta_even,
    render,
)

ALLOWED_KINDS = frozenset({SymbolKind.UNIT, SymbolKind.LOG2PI, SymbolKind.EULER_GAMMA, SymbolKind.ZETA})


def _check_closed_form(value: SymVal) -> SymVal:
    bad = [s.key for s in value if s.kind not in ALLOWED_KINDS]
    if bad:
        raise ValueError(f"Closed form contains unexpected symbols: {bad}")
    return assert_no_odd_zeta(value)


@dataclass(frozen=True)
class NormalizedMoment:
    """m_N = (-4)^N / (2 pi) * M_{2N}"""

    N: int
    value: SymVal

    def __post_init__(self):
        _check_closed_form(self.value)

    def pi_form(self) -> SymVal:
        return reduce_zeta_even(self.value)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "value": self.value.to_dict(),
            "text": render(self.value),
            "pi_form": render(self.pi_form()),
        }


@dataclass(frozen=True)
class DerivAtOne:
    """A^(k)(1)"""

    k: int
    value: SymVal

    def __post_init__(self):
        _check_closed_form(self.value)

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "value": self.value.to_dict(), "text": render(self.value, use_c=True)}


def zeta_bernoulli(j: int) -> SymVal:
    """zeta(j) B_j / j, identically zero for odd j >= 3."""
    b = bernoulli(j)
    if not b:
        return SymVal()
    return SymVal.of(Zeta(j), b / j)


@lru_cache(maxsize=None)
def beta_term(k: int) -> SymVal:
    """beta_k = sum_{j=2}^{k} C(k, j-1) zeta(j) B_j / j"""
    acc = SymVal()
    for j in range(2, k + 1):
        acc = acc + zeta_bernoulli(j) * binomial(k, j - 1)
    return acc


@lru_cache(maxsize=None)
def tcoef(N: int, j: int) -> int:
    """
    T_{N,j} = (j-1)! sum_{n=2}^{N} C(N,n) 2^n [(-1)^n S(n+1,j) + (-1)^j S(n,j-1)]

    Zero for N < 2 or j > N.
    """
    if j < 2:
        raise ValueError(f"tcoef requires j >= 2, got {j}")
    if N < 0:
        raise ValueError(f"tcoef requires N >= 0, got {N}")
    if N < 2 or j > N:
        return 0
    total = 0
    for n in range(2, N + 1):
        total += binomial(N, n) * 2**n * ((-1) ** n * stirling2(n + 1, j) + (-1) ** j * stirling2(n, j - 1))
    return factorial(j - 1) * total


@lru_cache(maxsize=None)
def moment_closed(N: int) -> NormalizedMoment:
    """
    m_N = log(2 pi) - gamma - 4N + (4^N/2 - 1) B_{2N} + sum_{j=2}^{2N} T_{2N,j} zeta(j) B_j / j
    """
    if N < 0:
        raise ValueError(f"Moment index must be >= 0, got {N}")
    value = SymVal({LOG2PI: 1, EULER_GAMMA: -1})
    value = value + (-4 * N + (Fraction(4**N, 2) - 1) * bernoulli(2 * N))
    for j in range(2, 2 * N + 1):
        t = tcoef(2 * N, j)
        if t:
            value = value + zeta_bernoulli(j) * t
    logger.debug(f"m_{N} = {render(value)}")
    return NormalizedMoment(N, value)


def moment_scale(N: int) -> Fraction:
    """Rational r with M_{2N} = r * pi * m_N."""
    return Fraction(2 * (-1) ** N, 4**N)


def moment_value(N: int, digits: int = 10) -> mpmath.mpf:
    """M_{2N} = 2 pi (-1)^N 4^(-N) m_N as a decimal."""
    m = eval_numeric(moment_closed(N).value, digits)
    r = moment_scale(N)
    with mpmath.workdps(digits + 10):
        value = mpmath.mpf(r.numerator) / r.denominator * mpmath.pi * m
    if value <= 0:
        raise ArithmeticError(f"Moment M_{2 * N} must be positive, got {mpmath.nstr(value, digits)}")
    return value


@lru_cache(maxsize=None)
def a_deriv_closed(k: int) -> DerivAtOne:
    """
    A^(k)(1) = (-1)^k k! ((1 + [k=0]) C - 1/(2(k+1)) - H_{k-1}/2 + beta_k)
    """
    if k < 0:
        raise ValueError(f"Derivative order must be >= 0, got {k}")
    inner = constant_C() * (2 if k == 0 else 1)
    inner = inner - Fraction(1, 2 * (k + 1)) - harmonic(k - 1) / 2 + beta_term(k)
    return DerivAtOne(k, inner * ((-1) ** k * factorial(k)))
