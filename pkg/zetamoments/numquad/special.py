"""
Special functions on the critical line.

zeta(1/2 + it) by Euler-Maclaurin summation, log Gamma by recurrence shift
plus the Stirling series, and Xi(t) = xi(1/2 + it) assembled from both.
"""

import threading
import time
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial
from typing import Any, List, Sequence, Tuple
import mpmath
from loguru import logger
from zetamoments.exact import bernoulli
from zetamoments.numquad.config import QuadConfig
from zetamoments.numquad.gauss import map_panel, parallel_map, to_wire, uniform_panels
import zetamoments.utils.constants as CONST


def _rat(r: Fraction) -> mpmath.mpf:
    return mpmath.mpf(r.numerator) / r.denominator


def gamma_abs_sq_half(t: Any, precision: int = CONST.DEFAULT_PRECISION) -> mpmath.mpf:
    """|Gamma(1/2 + it)|^2 = 2 pi / (e^{pi t} + e^{-pi t})"""
    with mpmath.workdps(precision):
        e = mpmath.exp(-mpmath.pi * abs(mpmath.mpf(t)))
        return 2 * mpmath.pi * e / (1 + e * e)


def zeta_terms_for(t: Any, terms: int) -> int:
    return max(terms, int(ceil(CONST.ZETA_TERMS_SLOPE * Fraction(abs(float(t))))))


def zeta_half_line(
    t: Any,
    terms: int = CONST.DEFAULT_ZETA_TERMS,
    corrections: int = CONST.DEFAULT_ZETA_CORRECTIONS,
    precision: int = CONST.DEFAULT_PRECISION,
) -> mpmath.mpc:
    """
    zeta(1/2 + it) by Euler-Maclaurin with a main sum of
    max(terms, ceil(1.3 |t|)) terms and ``corrections`` Bernoulli terms.
    """
    if abs(float(t)) > CONST.MAX_ZETA_HEIGHT:
        raise ValueError(f"|t| = {abs(float(t))} outside the supported range [0, {CONST.MAX_ZETA_HEIGHT}]")
    with mpmath.workdps(precision):
        s = mpmath.mpc(mpmath.mpf(1) / 2, mpmath.mpf(t))
        n = zeta_terms_for(t, terms)
        head = mpmath.fsum(mpmath.power(k, -s) for k in range(1, n))
        big_n = mpmath.mpf(n)
        n_pow = mpmath.power(big_n, -s)
        value = head + big_n * n_pow / (s - 1) + n_pow / 2
        rising = s
        n_pow = n_pow / big_n
        for k in range(1, corrections + 1):
            value += _rat(bernoulli(2 * k) / factorial(2 * k)) * rising * n_pow
            rising *= (s + 2 * k - 1) * (s + 2 * k)
            n_pow /= big_n * big_n
        return value


def _stirling_terms(precision: int) -> int:
    return max(20, precision // 2)


def complex_log_gamma(s: Any, precision: int = CONST.DEFAULT_PRECISION) -> mpmath.mpc:
    """
    Principal-branch log Gamma(s).

    The argument is shifted to Re >= max(20, precision) through
    log Gamma(s) = log Gamma(s + n) - sum log(s + k); the Stirling series is
    then summed there.
    """
    with mpmath.workdps(precision + 10):
        s = mpmath.mpc(s)
        if s.imag == 0 and s.real <= 0 and s.real == mpmath.floor(s.real):
            raise ValueError(f"log Gamma has a pole at s = {mpmath.nstr(s.real, 10)}")
        shift = max(20, precision)
        z = s
        logs: List[mpmath.mpc] = []
        while z.real < shift:
            logs.append(mpmath.log(z))
            z += 1
        series = mpmath.fsum(
            _rat(bernoulli(2 * k) / (2 * k * (2 * k - 1))) / z ** (2 * k - 1)
            for k in range(1, _stirling_terms(precision) + 1)
        )
        value = (z - mpmath.mpf(1) / 2) * mpmath.log(z) - z + mpmath.log(2 * mpmath.pi) / 2 + series
        value -= mpmath.fsum(logs)
    with mpmath.workdps(precision):
        return +value


def xi_from_zeta(t: Any, zeta_value: Any, precision: int = CONST.DEFAULT_PRECISION) -> mpmath.mpf:
    """Xi(t) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s) at s = 1/2 + it."""
    with mpmath.workdps(precision):
        s = mpmath.mpc(mpmath.mpf(1) / 2, mpmath.mpf(t))
        factor = mpmath.exp(complex_log_gamma(s / 2, precision) - s / 2 * mpmath.log(mpmath.pi))
        value = s * (s - 1) / 2 * factor * zeta_value
        if abs(value.imag) > CONST.XI_IMAG_LIMIT:
            raise ArithmeticError(
                f"Xi({mpmath.nstr(t, 10)}) has imaginary part {mpmath.nstr(value.imag, 5)}"
            )
        return value.real


def xi_big(
    t: Any,
    terms: int = CONST.DEFAULT_ZETA_TERMS,
    corrections: int = CONST.DEFAULT_ZETA_CORRECTIONS,
    precision: int = CONST.DEFAULT_PRECISION,
) -> mpmath.mpf:
    return xi_from_zeta(t, zeta_half_line(t, terms, corrections, precision), precision)


@dataclass(frozen=True)
class CriticalPoint:
    t: mpmath.mpf
    zeta_value: mpmath.mpc
    abs_sq_weight: mpmath.mpf

    def __post_init__(self):
        if not 0 < self.abs_sq_weight <= mpmath.pi:
            raise ValueError(f"|Gamma(1/2+it)|^2 out of range at t={self.t}: {self.abs_sq_weight}")

    @property
    def gamma_zeta_abs_sq(self) -> mpmath.mpf:
        return self.abs_sq_weight * abs(self.zeta_value) ** 2


@dataclass(frozen=True)
class PanelSample:
    a: mpmath.mpf
    b: mpmath.mpf
    weights: Tuple[mpmath.mpf, ...]
    points: Tuple[CriticalPoint, ...]


def critical_line_panels(cfg: QuadConfig) -> List[Tuple[mpmath.mpf, mpmath.mpf]]:
    """
    Panels covering [0, T]: geometric panels up to 1/2, ``panel_count``
    uniform panels up to min(50, T), then panels of width <= 5 up to T.
    """
    with mpmath.workdps(cfg.precision):
        edge = mpmath.mpf(CONST.NEAR_PANEL_EDGE)
        near = [edge / 2**i for i in range(4, -1, -1)]
        panels = [(mpmath.mpf(0), near[0])] + list(zip(near[:-1], near[1:]))
        cutoff = mpmath.mpf(cfg.cutoff)
        uniform_end = min(mpmath.mpf(CONST.UNIFORM_PANEL_END), cutoff)
        panels += uniform_panels(edge, uniform_end, cfg.panel_count)
        if cutoff > uniform_end:
            far = int(mpmath.ceil((cutoff - uniform_end) / CONST.FAR_PANEL_WIDTH))
            panels += uniform_panels(uniform_end, cutoff, far)
    return panels


def _sample_panel(job: Tuple[str, str, int, int, int, int]) -> List[Tuple[str, str, str, str, str]]:
    a, b, order, precision, terms, corrections = job
    out = []
    with mpmath.workdps(precision):
        for t, w in map_panel(mpmath.mpf(a), mpmath.mpf(b), order, precision):
            z = zeta_half_line(t, terms, corrections, precision)
            g = gamma_abs_sq_half(t, precision)
            out.append(tuple(to_wire(x, precision) for x in (t, w, g, z.real, z.imag)))
    return out


def sample_panels(cfg: QuadConfig, panels: Sequence[Tuple[mpmath.mpf, mpmath.mpf]]) -> Tuple[PanelSample, ...]:
    """zeta and |Gamma|^2 at the Gauss-Legendre nodes of ``panels``."""
    jobs = [
        (to_wire(a, cfg.precision), to_wire(b, cfg.precision), cfg.panel_order, cfg.precision,
         cfg.zeta_terms, cfg.zeta_corrections)
        for a, b in panels
    ]
    raw = parallel_map(_sample_panel, jobs, cfg.threads)
    samples = []
    with mpmath.workdps(cfg.precision):
        for (a, b), rows in zip(panels, raw):
            weights, points = [], []
            for t, w, g, re, im in rows:
                weights.append(mpmath.mpf(w))
                points.append(CriticalPoint(mpmath.mpf(t), mpmath.mpc(re, im), mpmath.mpf(g)))
            samples.append(PanelSample(a, b, tuple(weights), tuple(points)))
    return tuple(samples)


_SAMPLE_CACHE: "OrderedDict[Tuple, Tuple[PanelSample, ...]]" = OrderedDict()
_SAMPLE_LOCK = threading.Lock()


def sampling_key(cfg: QuadConfig) -> Tuple:
    """Fields that change the samples; tol and threads do not."""
    return (cfg.cutoff, cfg.panel_order, cfg.panel_count, cfg.zeta_terms, cfg.zeta_corrections, cfg.precision)


def sample_critical_line(cfg: QuadConfig) -> Tuple[PanelSample, ...]:
    """Samples on [0, T] shared by the moment and Ramanujan integrals, cached per sampling key."""
    key = sampling_key(cfg)
    with _SAMPLE_LOCK:
        if key in _SAMPLE_CACHE:
            _SAMPLE_CACHE.move_to_end(key)
            return _SAMPLE_CACHE[key]
    start = time.perf_counter()
    panels = critical_line_panels(cfg)
    samples = sample_panels(cfg, panels)
    nodes = sum(len(p.points) for p in samples)
    logger.debug(
        f"Sampled zeta at {nodes} nodes on {len(panels)} panels in {time.perf_counter() - start:.2f}s"
    )
    with _SAMPLE_LOCK:
        _SAMPLE_CACHE[key] = samples
        while len(_SAMPLE_CACHE) > CONST.SAMPLE_CACHE_SIZE:
            _SAMPLE_CACHE.popitem(last=False)
    return samples


def integrate_samples(samples: Sequence[PanelSample], integrand) -> mpmath.mpf:
    """sum over panels (in order) of sum_i w_i f(point_i)."""
    panel_sums = [
        mpmath.fsum(w * integrand(p) for w, p in zip(panel.weights, panel.points)) for panel in samples
    ]
    return mpmath.fsum(panel_sums)
