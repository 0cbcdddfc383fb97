from fractions import Fraction
from functools import lru_cache
from math import factorial
from zetamoments.exact import binomial, harmonic
from zetamoments.moments.closed_forms import zeta_bernoulli
from zetamoments.symbolic import SymVal, constant_C


@lru_cache(maxsize=None)
def psi_coeff(k: int) -> SymVal:
    """
    Taylor coefficient psi_k of the period function at z = 1:

        psi_k = (-1)^k/(k+1) + 2 sum_{j=1}^{k-1} (-1)^(k-j) C(k,j) zeta(j+1) B_{j+1}/(j+1)
    """
    if k < 0:
        raise ValueError(f"psi index must be >= 0, got {k}")
    value = SymVal.rational(Fraction((-1) ** k, k + 1))
    for j in range(1, k):
        value = value + zeta_bernoulli(j + 1) * (2 * (-1) ** (k - j) * binomial(k, j))
    return value


def r_deriv_at_1(k: int) -> SymVal:
    """R^(k)(1) = (-1)^k k! (C - H_{k-1}/2), and R(1) = 2C."""
    if k < 0:
        raise ValueError(f"Derivative order must be >= 0, got {k}")
    if k == 0:
        return constant_C() * 2
    return (constant_C() - harmonic(k - 1) / 2) * ((-1) ** k * factorial(k))


def psi_route_a_deriv(k: int) -> SymVal:
    """A^(k)(1) = -(k!/2) psi_k + R^(k)(1)"""
    return psi_coeff(k) * Fraction(-factorial(k), 2) + r_deriv_at_1(k)
