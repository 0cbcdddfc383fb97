"""
Sequence operators

    E(u)_n = sum_{k=0}^{n} S(n,k) (-1)^k k! u_k
    L(u)_N = sum_{n=0}^{N} C(N,n) 2^n u_n

Entries may be Fractions or SymVals; anything closed under addition and
multiplication by integers works. Sums start from ``u[0] * 0`` so the result
keeps the entry type even when every term vanishes.
"""

from fractions import Fraction
from math import factorial
from typing import Any, List, Sequence
from zetamoments.exact.numbers import harmonic
from zetamoments.exact.stirling import binomial, stirling2

SeqScalar = List[Any]


def _check_length(u: Sequence[Any], n: int) -> None:
    if n < 0:
        raise ValueError(f"Sequence index must be >= 0, got {n}")
    if len(u) < n + 1:
        raise ValueError(f"Sequence of length {len(u)} too short for index {n}")


def seq_E(u: Sequence[Any], n_max: int) -> SeqScalar:
    _check_length(u, n_max)
    out: SeqScalar = []
    for n in range(n_max + 1):
        acc = u[0] * 0
        for k in range(n + 1):
            s = stirling2(n, k)
            if s:
                acc = acc + u[k] * ((-1) ** k * s * factorial(k))
        out.append(acc)
    return out


def seq_L(u: Sequence[Any], n: int) -> Any:
    _check_length(u, n)
    acc = u[0] * 0
    for m in range(n + 1):
        acc = acc + u[m] * (binomial(n, m) * 2**m)
    return acc


def unit_sequence(n_max: int) -> SeqScalar:
    return [Fraction(1)] * (n_max + 1)


def iota(n_max: int) -> SeqScalar:
    """iota_k = 1/(k+1)"""
    return [Fraction(1, k + 1) for k in range(n_max + 1)]


def eta(n_max: int) -> SeqScalar:
    """eta_k = H_{k-1}"""
    return [harmonic(k - 1) for k in range(n_max + 1)]


def binomial_indicator(j: int, n_max: int) -> SeqScalar:
    """k -> C(k, j-1), zero for k < j-1."""
    return [Fraction(binomial(k, j - 1)) for k in range(n_max + 1)]
