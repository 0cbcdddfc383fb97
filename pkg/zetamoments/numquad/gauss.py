"""
Composite Gauss-Legendre quadrature at mpmath working precision.

Nodes are seeded by numpy's double precision ``leggauss`` and polished by
Newton iteration on P_n, so any precision is reachable from the same seeds.
Jobs run either inline or on a process pool; results come back in job order
and are reduced with ``mpmath.fsum`` in that order, so the value does not
depend on the worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Any, Callable, Iterable, List, Sequence, Tuple
import mpmath
import numpy as np
from loguru import logger

Panel = Tuple[mpmath.mpf, mpmath.mpf]
MAX_NEWTON_STEPS = 50


def _legendre_with_derivative(n: int, x: mpmath.mpf) -> Tuple[mpmath.mpf, mpmath.mpf]:
    p0, p1 = mpmath.mpf(1), x
    for m in range(2, n + 1):
        p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


@lru_cache(maxsize=32)
def gauss_legendre(order: int, dps: int) -> Tuple[Tuple[mpmath.mpf, ...], Tuple[mpmath.mpf, ...]]:
    """Nodes and weights on [-1, 1] accurate to ``dps`` digits."""
    if order < 1:
        raise ValueError(f"Gauss-Legendre order must be >= 1, got {order}")
    seeds, _ = np.polynomial.legendre.leggauss(order)
    nodes: List[mpmath.mpf] = []
    weights: List[mpmath.mpf] = []
    with mpmath.workdps(dps + 10):
        eps = mpmath.mpf(10) ** (-dps - 5)
        for seed in seeds:
            x = mpmath.mpf(float(seed))
            for _ in range(MAX_NEWTON_STEPS):
                p, dp = _legendre_with_derivative(order, x)
                step = p / dp
                x -= step
                if abs(step) < eps:
                    break
            else:
                logger.warning(f"Newton iteration for Gauss-Legendre node {seed} did not converge")
            _, dp = _legendre_with_derivative(order, x)
            nodes.append(x)
            weights.append(2 / ((1 - x * x) * dp * dp))
    return tuple(nodes), tuple(weights)


def map_panel(a: mpmath.mpf, b: mpmath.mpf, order: int, dps: int) -> List[Tuple[mpmath.mpf, mpmath.mpf]]:
    """(node, weight) pairs of the Gauss-Legendre rule moved onto [a, b]."""
    nodes, weights = gauss_legendre(order, dps)
    half = (b - a) / 2
    mid = (a + b) / 2
    return [(mid + half * x, half * w) for x, w in zip(nodes, weights)]


def uniform_panels(a: Any, b: Any, count: int) -> List[Panel]:
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    edges = [a + (b - a) * i / count for i in range(count + 1)]
    edges[-1] = b
    return list(zip(edges[:-1], edges[1:]))


def resolve_workers(threads: int) -> int:
    """threads = 0 means one worker per CPU."""
    if threads < 0:
        raise ValueError(f"threads must be >= 0, got {threads}")
    return threads or (os.cpu_count() or 1)


def parallel_map(fn: Callable[[Any], Any], jobs: Sequence[Any], threads: int) -> List[Any]:
    workers = min(resolve_workers(threads), len(jobs))
    if workers <= 1:
        return [fn(job) for job in jobs]
    logger.debug(f"Dispatching {len(jobs)} panels to {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def reduce_panels(values: Iterable[Any]) -> Any:
    return mpmath.fsum(list(values))


def to_wire(x: Any, dps: int) -> str:
    """Decimal string carrying an mpf across process boundaries."""
    return mpmath.nstr(x, dps + 5, strip_zeros=False)
