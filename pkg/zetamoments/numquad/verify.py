"""
Quadrature checks of the closed forms.

The critical-line integrals share one set of zeta samples per QuadConfig:
the weighted moments, the cosine transform G(v), and the left-hand side of
Ramanujan's identity, evaluated in the variable u = t/2 as

    int_0^inf 2 |Gamma(-1/4 + iu/2)|^2 Xi(u)^2 cos(2vu) / (1 + 4u^2) du = pi^{3/2} G(v).
"""

from math import gcd
from typing import Any
import mpmath
from loguru import logger
from zetamoments.numquad.autocorr import a_numeric, g_numeric
from zetamoments.numquad.config import QuadConfig
from zetamoments.numquad.special import (
    CriticalPoint,
    complex_log_gamma,
    integrate_samples,
    sample_critical_line,
    xi_from_zeta,
)
from zetamoments.symbolic import constant_C, eval_numeric
import zetamoments.utils.constants as CONST


def moment_tail_bound(N: int, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """
    2 * 2 pi int_T^inf t^{2N} (c0 + c1 t)^2 e^{-pi t} dt, using
    |zeta(1/2+it)| <= c0 + c1 t and |Gamma(1/2+it)|^2 <= 2 pi e^{-pi t}.

    c0 and c1 are a calibration checked against sampled |zeta| values, not a
    proven bound.
    """
    with mpmath.workdps(cfg.precision):
        c0, c1 = mpmath.mpf(CONST.TAIL_C0), mpmath.mpf(CONST.TAIL_C1)
        x = mpmath.pi * mpmath.mpf(cfg.cutoff)

        def moment(m: int) -> mpmath.mpf:
            return mpmath.gammainc(m + 1, x) / mpmath.pi ** (m + 1)

        e = 2 * N
        inner = c0 * c0 * moment(e) + 2 * c0 * c1 * moment(e + 1) + c1 * c1 * moment(e + 2)
        return 4 * mpmath.pi * inner


def moment_quadrature(N: int, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """M_{2N} = 2 int_0^T t^{2N} |zeta(1/2+it)|^2 |Gamma(1/2+it)|^2 dt"""
    if N < 0 or N > CONST.MAX_QUADRATURE_N:
        raise ValueError(f"Moment quadrature supports 0 <= N <= {CONST.MAX_QUADRATURE_N}, got {N}")
    tail = moment_tail_bound(N, cfg)
    if tail > cfg.tol / 10:
        raise ValueError(
            f"Tail bound {mpmath.nstr(tail, 5)} beyond T={cfg.cutoff} exceeds tol/10 = {cfg.tol / 10}"
        )
    samples = sample_critical_line(cfg)
    with mpmath.workdps(cfg.precision):
        body = integrate_samples(samples, lambda p: p.t ** (2 * N) * p.gamma_zeta_abs_sq)
        value = 2 * body
    logger.debug(f"M_{2 * N} quadrature = {mpmath.nstr(value, 15)}, tail bound {mpmath.nstr(tail, 3)}")
    return value


def mellin_g_numeric(v: Any, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """G(v) = (1/pi) int_0^inf cos(2vt) |Gamma zeta(1/2+it)|^2 dt from the critical-line samples."""
    samples = sample_critical_line(cfg)
    with mpmath.workdps(cfg.precision):
        v = mpmath.mpf(v)
        body = integrate_samples(samples, lambda p: mpmath.cos(2 * v * p.t) * p.gamma_zeta_abs_sq)
        return body / mpmath.pi


def _ramanujan_integrand(p: CriticalPoint, v: mpmath.mpf, precision: int) -> mpmath.mpf:
    u = p.t
    xi = xi_from_zeta(u, p.zeta_value, precision)
    lg = complex_log_gamma(mpmath.mpc(-mpmath.mpf(1) / 4, u / 2), precision)
    gamma_sq = mpmath.exp(2 * lg.real)
    return 2 * gamma_sq * xi * xi * mpmath.cos(2 * v * u) / (1 + 4 * u * u)


def ramanujan_lhs(v: Any, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    samples = sample_critical_line(cfg)
    with mpmath.workdps(cfg.precision):
        v = mpmath.mpf(v)
        return integrate_samples(samples, lambda p: _ramanujan_integrand(p, v, cfg.precision))


def ramanujan_identity_residual(v: Any, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """|LHS - pi^{3/2} G(v)| with G(v) from the auto-correlation integral."""
    if abs(float(v)) > CONST.MAX_RAMANUJAN_V:
        raise ValueError(f"Ramanujan identity check supports |v| <= {CONST.MAX_RAMANUJAN_V}, got {v}")
    # the cosine makes the identity even in v
    v = abs(mpmath.mpf(v))
    lhs = ramanujan_lhs(v, cfg)
    rhs_g = g_numeric(v, cfg)
    with mpmath.workdps(cfg.precision):
        residual = abs(lhs - mpmath.pi ** mpmath.mpf(1.5) * rhs_g)
    logger.debug(f"Ramanujan identity at v={mpmath.nstr(v, 6)}: residual {mpmath.nstr(residual, 5)}")
    return residual


def cotangent_sum(h: int, k: int, precision: int = CONST.DEFAULT_PRECISION) -> mpmath.mpf:
    """c(h/k) = -sum_{a=1}^{k-1} (a/k) cot(pi a h / k)"""
    if h < 1 or k < 1:
        raise ValueError(f"cotangent_sum requires h, k >= 1, got h={h}, k={k}")
    if gcd(h, k) != 1:
        raise ValueError(f"cotangent_sum requires gcd(h, k) = 1, got h={h}, k={k}")
    with mpmath.workdps(precision):
        return -mpmath.fsum(mpmath.mpf(a) / k * mpmath.cot(mpmath.pi * a * h / k) for a in range(1, k))


def reciprocity_residual(h: int, k: int, cfg: QuadConfig = QuadConfig()) -> mpmath.mpf:
    """
    |x c(x) + c(1/x) - 1/(pi k) - (2x A(x) - 2(1+x) C + (x-1) log x)/pi| at x = h/k.
    """
    if gcd(h, k) != 1:
        raise ValueError(f"reciprocity_residual requires gcd(h, k) = 1, got h={h}, k={k}")
    a = a_numeric(mpmath.mpf(h) / k, cfg)
    c = eval_numeric(constant_C(), cfg.precision)
    with mpmath.workdps(cfg.precision):
        x = mpmath.mpf(h) / k
        lhs = x * cotangent_sum(h, k, cfg.precision) + cotangent_sum(k, h, cfg.precision) - 1 / (mpmath.pi * k)
        rhs = (2 * x * a - 2 * (1 + x) * c + (x - 1) * mpmath.log(x)) / mpmath.pi
        residual = abs(lhs - rhs)
    logger.debug(f"Reciprocity at {h}/{k}: residual {mpmath.nstr(residual, 5)}")
    return residual
