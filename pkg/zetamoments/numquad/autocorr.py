"""
The exponential auto-correlation

    A(v) = int_0^inf (1/(xv) - 1/(e^{xv} - 1)) (1/x - 1/(e^x - 1)) dx

and its derivatives at v = 1. The kernels f_k(x) = (-1)^k k!/x - x^k h^(k)(x),
h(x) = 1/(e^x - 1), are bounded at 0; for small x they come from the
Bernoulli expansion of h with the pole already cancelled.
"""

from math import factorial
from typing import Any, Optional, Tuple
import mpmath
from loguru import logger
from zetamoments.exact import alpha, bernoulli, falling
from zetamoments.numquad.config import QuadConfig
from zetamoments.numquad.gauss import map_panel, parallel_map, reduce_panels, to_wire, uniform_panels
import zetamoments.utils.constants as CONST

MAX_SERIES_TERMS = 400
SERIES_RADIUS = 2 * mpmath.pi


def _series_terms(k: int, x: mpmath.mpf, power_shift: int):
    """Yield B_{2m} (2m-1)_k / (2m)! x^{2m-1-power_shift} for 2m-1 >= k, (n)_k falling."""
    eps = mpmath.eps * 2**-20
    m = max(1, (k + 2) // 2)
    while m < MAX_SERIES_TERMS:
        c = bernoulli(2 * m) * falling(2 * m - 1, k) / factorial(2 * m)
        term = mpmath.mpf(c.numerator) / c.denominator * x ** (2 * m - 1 - power_shift)
        yield term
        if abs(term) < eps:
            return
        m += 1
    logger.warning(f"Bernoulli series for h^({k}) at x={mpmath.nstr(x, 8)} truncated")


def _check_branch(branch: Optional[str], x: mpmath.mpf) -> str:
    if branch is None:
        return "series" if x < CONST.SERIES_SWITCH else "closed"
    if branch not in ("series", "closed"):
        raise ValueError(f"Invalid branch: {branch}")
    if branch == "series" and x >= SERIES_RADIUS:
        raise ValueError(f"Bernoulli series diverges for x >= 2 pi, got {mpmath.nstr(x, 8)}")
    return branch


def h_deriv(k: int, x: Any, branch: Optional[str] = None, precision: int = CONST.DEFAULT_PRECISION) -> mpmath.mpf:
    """
    k-th derivative of h(x) = 1/(e^x - 1).

    Closed form sum_p alpha_{k,p} e^{px}/(e^x - 1)^{p+1}, written with
    q = e^{-x} as sum_p alpha_{k,p} q/(1-q)^{p+1}; below x = 1 the termwise
    differentiated series 1/x - 1/2 + sum_m B_{2m} x^{2m-1}/(2m)! is used.
    """
    if k < 0:
        raise ValueError(f"Derivative order must be >= 0, got {k}")
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        if x <= 0:
            raise ValueError(f"h_deriv requires x > 0, got {mpmath.nstr(x, 8)}")
        match _check_branch(branch, x):
            case "series":
                value = (-1) ** k * mpmath.factorial(k) / x ** (k + 1)
                if k == 0:
                    value -= mpmath.mpf(1) / 2
                return value + mpmath.fsum(_series_terms(k, x, k))
            case "closed":
                q = mpmath.exp(-x)
                one_minus_q = -mpmath.expm1(-x)
                if k == 0:
                    return q / one_minus_q
                return mpmath.fsum(alpha(k, p) * q / one_minus_q ** (p + 1) for p in range(1, k + 1))


def autocorr_kernel(k: int, x: Any, precision: int = CONST.DEFAULT_PRECISION) -> mpmath.mpf:
    """f_k(x) = (-1)^k k!/x - x^k h^(k)(x), finite at x = 0."""
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        if x < 0:
            raise ValueError(f"autocorr_kernel requires x >= 0, got {mpmath.nstr(x, 8)}")
        if x < CONST.SERIES_SWITCH:
            value = mpmath.mpf(1) / 2 if k == 0 else mpmath.mpf(0)
            if x == 0:
                return value
            return value - mpmath.fsum(_series_terms(k, x, 0))
        return (-1) ** k * mpmath.factorial(k) / x - x**k * h_deriv(k, x, "closed", precision)


def _autocorr_panel(job: Tuple[str, str, int, int, int, str]) -> str:
    a, b, order, precision, k, v = job
    with mpmath.workdps(precision):
        v = mpmath.mpf(v)
        total = mpmath.fsum(
            w * autocorr_kernel(k, x if k else x * v, precision) * autocorr_kernel(0, x, precision)
            for x, w in map_panel(mpmath.mpf(a), mpmath.mpf(b), order, precision)
        )
        return to_wire(total, precision)


def _integrate(k: int, v: mpmath.mpf, cutoff: mpmath.mpf, width: mpmath.mpf, cfg: QuadConfig) -> mpmath.mpf:
    count = int(mpmath.ceil(cutoff / width))
    panels = uniform_panels(0, cutoff, count)
    jobs = [
        (to_wire(a, cfg.precision), to_wire(b, cfg.precision), cfg.panel_order, cfg.precision, k,
         to_wire(v, cfg.precision))
        for a, b in panels
    ]
    logger.trace(f"Auto-correlation integral k={k} on [0, {mpmath.nstr(cutoff, 6)}] with {count} panels")
    return reduce_panels(mpmath.mpf(x) for x in parallel_map(_autocorr_panel, jobs, cfg.threads))


def a_numeric(v: Any, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """A(v) by quadrature on [0, X] plus the analytic tail 1/(vX)."""
    with mpmath.workdps(cfg.precision):
        v = mpmath.mpf(v)
        if v <= 0:
            raise ValueError(f"A(v) requires v > 0, got {mpmath.nstr(v, 8)}")
        cutoff = cfg.autocorr_cutoff / min(v, 1)
        width = 2 / max(v, 1)
        body = _integrate(0, v, cutoff, width, cfg)
        return body + 1 / (v * cutoff)


def a_deriv_numeric(k: int, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """A^(k)(1) = int_0^inf f_k(x) f_0(x) dx, tail (-1)^k k!/X."""
    if k < 0 or k > CONST.MAX_NUMERIC_K:
        raise ValueError(f"Numerical derivative order must be in [0, {CONST.MAX_NUMERIC_K}], got {k}")
    with mpmath.workdps(cfg.precision):
        cutoff = mpmath.mpf(cfg.autocorr_cutoff)
        body = _integrate(k, mpmath.mpf(1), cutoff, mpmath.mpf(2), cfg)
        return body + (-1) ** k * mpmath.factorial(k) / cutoff


def g_numeric(v: Any, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """G(v) = e^v A(e^{2v})"""
    if abs(float(v)) > CONST.MAX_G_ARGUMENT:
        raise ValueError(f"|v| must be <= {CONST.MAX_G_ARGUMENT}, got {v}")
    with mpmath.workdps(cfg.precision):
        v = mpmath.mpf(v)
        return mpmath.exp(v) * a_numeric(mpmath.exp(2 * v), cfg)
