"""
Verification suites driven by ``zetamoments verify``. Each suite returns a
list of records; a record passes when its residual is within tolerance or,
for exact checks, when no mismatch was found.
"""

import random
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Sequence, Tuple
import mpmath
import numpy as np
from loguru import logger
from zetamoments.exact import (
    PowerSeries,
    alpha,
    bernoulli,
    bernoulli_poly_half,
    binomial_indicator,
    eta,
    iota,
    kcoef,
    seq_E,
    series_compose_one_minus_exp,
    stirling1,
    stirling2,
    stirling_matrix,
)
from zetamoments.moments import (
    LEComponent,
    a_deriv_closed,
    g_deriv_at_0,
    le_component,
    moment_closed,
    moment_value,
    psi_route_a_deriv,
)
from zetamoments.numquad import (
    QuadConfig,
    a_deriv_numeric,
    moment_quadrature,
    ramanujan_identity_residual,
    reciprocity_residual,
)
from zetamoments.reports import MomentReport, ResidualRecord, decimal_str
from zetamoments.symbolic import EULER_GAMMA, LOG2PI, UNIT, SymVal, Zeta, eval_numeric, reduce_zeta_even, render
from zetamoments.utils.logging import log_event

RECIPROCITY_PAIRS: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 2), (1, 3), (2, 3), (3, 5))
RAMANUJAN_POINTS: Tuple[float, ...] = (0.0, 0.1, 0.25, 0.5)


def _emit(record: Any) -> Any:
    log_event(record.kind, record.model_dump(by_alias=True))
    return record


def verify_moments(max_n: int, cfg: QuadConfig, digits: int) -> List[MomentReport]:
    records = []
    for n in range(max_n + 1):
        m = moment_closed(n)
        closed = moment_value(n, max(digits, cfg.precision))
        quad = moment_quadrature(n, cfg)
        records.append(
            _emit(MomentReport.build(n, m.value.to_dict(), render(m.value), closed, quad, cfg.tol, digits))
        )
    return records


def verify_aderiv(max_k: int, cfg: QuadConfig, tol: float, digits: int) -> List[ResidualRecord]:
    records = []
    for k in range(max_k + 1):
        closed = eval_numeric(a_deriv_closed(k).value, cfg.precision)
        numeric = a_deriv_numeric(k, cfg)
        records.append(
            _emit(
                ResidualRecord.build(
                    "aderiv", {"k": k}, abs(closed - numeric), tol,
                    expected=decimal_str(closed, digits), observed=decimal_str(numeric, digits),
                )
            )
        )
    return records


def verify_ramanujan(points: Sequence[float], cfg: QuadConfig, tol: float) -> List[ResidualRecord]:
    return [
        _emit(ResidualRecord.build("ramanujan", {"v": v}, ramanujan_identity_residual(v, cfg), tol))
        for v in points
    ]


def verify_reciprocity(pairs: Sequence[Tuple[int, int]], cfg: QuadConfig, tol: float) -> List[ResidualRecord]:
    return [
        _emit(ResidualRecord.build("reciprocity", {"h": h, "k": k}, reciprocity_residual(h, k, cfg), tol))
        for h, k in pairs
    ]


def _count(pairs) -> int:
    return sum(1 for a, b in pairs if a != b)


def _stirling_inverse(size: int) -> int:
    s2 = np.array(stirling_matrix(2, size), dtype=object)
    s1 = np.array(stirling_matrix(1, size), dtype=object)
    product = s2.dot(s1)
    return sum(int(product[i, j] != (i == j)) for i in range(size + 1) for j in range(size + 1))


def _stirling_recurrences(size: int) -> int:
    bad = 0
    for n in range(size):
        for k in range(1, n + 2):
            bad += stirling2(n + 1, k) != stirling2(n, k - 1) + k * stirling2(n, k)
            bad += stirling1(n + 1, k) != stirling1(n, k - 1) - n * stirling1(n, k)
    return bad


def _kcoef_identity(size: int) -> int:
    return _count(
        (sum((Fraction(stirling2(k, p) * stirling1(p, j), p) for p in range(j, k + 1)), Fraction(0)), kcoef(k, j))
        for k in range(1, size + 1)
        for j in range(1, k + 1)
    )


def _alpha_recurrence(size: int) -> int:
    return _count(
        (alpha(k, p - 1) - alpha(k, p), Fraction(-alpha(k + 1, p), p))
        for k in range(1, size + 1)
        for p in range(1, k + 1)
    )


def _e_sequences(size: int) -> int:
    e_iota = seq_E(iota(size), size)
    e_eta = seq_E(eta(size), size)
    bad = _count((e_iota[n], bernoulli(n)) for n in range(size + 1))
    return bad + _count((e_eta[n], (-1) ** n * n + (n == 1)) for n in range(size + 1))


def _generating_function_lemma(order: int) -> int:
    bad = 0
    sequences = [iota(order), eta(order)] + [binomial_indicator(j, order) for j in range(1, 6)]
    for u in sequences:
        composed = series_compose_one_minus_exp(PowerSeries.from_coefficients(u, order))
        e = seq_E(u, order)
        bad += _count((composed[n], Fraction((-1) ** n, factorial(n)) * e[n]) for n in range(order + 1))
    return bad


def _bernoulli_half(size: int) -> int:
    bad = 0
    for n in range(size + 1):
        try:
            bernoulli_poly_half(n)
        except ArithmeticError:
            bad += 1
    return bad


def _le_components(size: int) -> int:
    return _count(le_component(c, n) for c in LEComponent for n in range(size + 1))


def _random_symval(rng: random.Random) -> SymVal:
    pool = [UNIT, LOG2PI, EULER_GAMMA, Zeta(2), Zeta(3), Zeta(4), Zeta(6)]
    return SymVal({s: Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for s in rng.sample(pool, rng.randint(0, 5))})


def _ring_axioms(seed: int, trials: int = 200) -> int:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        a, b, c = (_random_symval(rng) for _ in range(3))
        r = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        bad += (a + b) + c != a + (b + c)
        bad += a + b != b + a
        bad += (a + b) * r != a * r + b * r
        bad += a - a != SymVal()
    return bad


def _pi_reduction(size: int, digits: int = 30) -> int:
    bad = 0
    for n in range(size + 1):
        v = moment_closed(n).value
        diff = abs(eval_numeric(v, digits) - eval_numeric(reduce_zeta_even(v), digits))
        bad += diff > mpmath.mpf(10) ** (1 - digits) * max(1, abs(eval_numeric(v, digits)))
    return bad


def verify_identities(seed: int) -> List[ResidualRecord]:
    checks: List[Tuple[str, Dict[str, Any], int]] = [
        ("stirling_inverse", {"n_max": 30}, _stirling_inverse(30)),
        ("stirling_recurrences", {"n_max": 30}, _stirling_recurrences(30)),
        ("kcoef_identity", {"k_max": 30}, _kcoef_identity(30)),
        ("alpha_recurrence", {"k_max": 20}, _alpha_recurrence(20)),
        ("e_operator_sequences", {"n_max": 25}, _e_sequences(25)),
        ("generating_function_lemma", {"order": 15}, _generating_function_lemma(15)),
        ("bernoulli_half", {"n_max": 25}, _bernoulli_half(25)),
        ("le_components", {"n_max": 25}, _le_components(25)),
        ("dual_route", {"n_max": 12}, _count((g_deriv_at_0(2 * n), moment_closed(n).value) for n in range(13))),
        ("odd_vanishing", {"n_max": 25}, sum(not g_deriv_at_0(n).is_zero() for n in range(1, 26, 2))),
        ("psi_route", {"k_max": 20}, _count((psi_route_a_deriv(k), a_deriv_closed(k).value) for k in range(21))),
        ("pi_reduction", {"n_max": 10}, _pi_reduction(10)),
        ("symval_ring_axioms", {"seed": seed}, _ring_axioms(seed)),
    ]
    records = []
    for name, params, mismatches in checks:
        if mismatches:
            logger.warning(f"Identity check {name} found {mismatches} mismatches")
        records.append(_emit(ResidualRecord.exact(name, params, int(mismatches))))
    return records
