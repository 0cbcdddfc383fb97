"""
Independent oracles shared by the tests.
"""

from fractions import Fraction
from math import factorial
from typing import List
import mpmath
from zetamoments.numquad import QuadConfig


FIRST_ZETA_ZERO = "14.134725"

# rows 2..8 of T(l, j), j = 2..l
T_TABLE = {
    2: [16],
    3: [0, -144],
    4: [160, 0, 1536],
    5: [0, -5280, 0, -19200],
    6: [1456, 0, 145920, 0, 276480],
    7: [0, -147504, 0, -3897600, 0, -4515840],
    8: [13120, 0, 9225216, 0, 105799680, 0, 82575360],
}

# M_k for k = 0, 2, ..., 12
MOMENT_TABLE = ["4.77937654", "0.59600176", "0.43434281", "1.01613719", "5.60532440", "57.6316873", "940.337401"]


def akiyama_tanigawa(n: int) -> Fraction:
    """B_n with the B_1 = +1/2 convention."""
    a: List[Fraction] = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def eta_oracle_zeta(t, terms: int = 120, dps: int = 100) -> mpmath.mpc:
    """
    zeta(1/2 + it) = eta(s) / (1 - 2^{1-s}) with the alternating series for
    eta accelerated by Chebyshev weights d_k.
    """
    n = terms
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(factorial(n + i - 1) * 4**i, factorial(n - i) * factorial(2 * i))
        d.append(n * acc)
    with mpmath.workdps(dps):
        s = mpmath.mpc(mpmath.mpf(1) / 2, mpmath.mpf(t))
        dn = mpmath.mpf(d[n].numerator) / d[n].denominator
        total = mpmath.fsum(
            (-1) ** k * (mpmath.mpf(d[k].numerator) / d[k].denominator - dn) / mpmath.power(k + 1, s)
            for k in range(n)
        )
        eta = -total / dn
        return eta / (1 - mpmath.power(2, 1 - s))


def fast_config(**overrides) -> QuadConfig:
    """Cheaper sampling that still meets the 1e-8 moment tolerance."""
    params = dict(cutoff=40.0, panel_count=80, threads=1)
    params.update(overrides)
    return QuadConfig(**params)


def printed_ulp(printed: str) -> float:
    """One unit in the last printed digit of a fixed-point decimal."""
    _, _, decimals = printed.partition(".")
    return 10.0 ** -len(decimals)
