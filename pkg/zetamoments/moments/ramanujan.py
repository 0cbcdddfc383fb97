"""
G^(N)(0) through the sequence operators, independent of the T_{N,j} table.

G(v) = e^v A(e^{2v}) is even, and its Taylor coefficients at 0 follow from
A^(k)(1) by composing with v -> e^{2v}: G^(N)(0) = L(E(u))_N with

    u_k = (1 + [k=0]) C - iota_k / 2 - eta_k / 2 + beta_k.
"""

from enum import Enum
from fractions import Fraction
from typing import List, Tuple
from zetamoments.exact import bernoulli, eta, iota, seq_E, seq_L
from zetamoments.moments.closed_forms import beta_term, tcoef, zeta_bernoulli
from zetamoments.symbolic import SymVal, constant_C


class LEComponent(Enum):
    C = "c"
    IOTA = "iota"
    ETA = "eta"
    BETA = "beta"


def _c_sequence(n_max: int) -> List[SymVal]:
    return [constant_C() * (2 if k == 0 else 1) for k in range(n_max + 1)]


def _beta_sequence(n_max: int) -> List[SymVal]:
    return [beta_term(k) for k in range(n_max + 1)]


def _sequence(component: LEComponent, n_max: int) -> List[SymVal]:
    match component:
        case LEComponent.C:
            return _c_sequence(n_max)
        case LEComponent.IOTA:
            return [SymVal.rational(x) for x in iota(n_max)]
        case LEComponent.ETA:
            return [SymVal.rational(x) for x in eta(n_max)]
        case LEComponent.BETA:
            return _beta_sequence(n_max)
        case _:
            raise ValueError(f"Invalid component: {component}")


def _closed(component: LEComponent, N: int) -> SymVal:
    match component:
        case LEComponent.C:
            return constant_C() * (1 + (-1) ** N)
        case LEComponent.IOTA:
            return SymVal.rational((2 - Fraction(2) ** N) * bernoulli(N))
        case LEComponent.ETA:
            return SymVal.rational(2 * N * (1 + (-1) ** N))
        case LEComponent.BETA:
            acc = SymVal()
            for j in range(2, N + 1):
                acc = acc + zeta_bernoulli(j) * tcoef(N, j)
            return acc
        case _:
            raise ValueError(f"Invalid component: {component}")


def le_component(component: LEComponent, N: int) -> Tuple[SymVal, SymVal]:
    """(L o E)(u)_N for one building block, as (sequence route, closed form)."""
    if N < 0:
        raise ValueError(f"Index must be >= 0, got {N}")
    direct = seq_L(seq_E(_sequence(component, N), N), N)
    return direct, _closed(component, N)


def g_deriv_at_0(N: int) -> SymVal:
    if N < 0:
        raise ValueError(f"Derivative order must be >= 0, got {N}")
    c = _c_sequence(N)
    b = _beta_sequence(N)
    io = iota(N)
    et = eta(N)
    u = [c[k] - (io[k] + et[k]) / 2 + b[k] for k in range(N + 1)]
    return seq_L(seq_E(u, N), N)
