"""
Stirling numbers of both kinds and the alpha coefficients of h^(k).

Both triangles are held in :class:`IntTable` instances shared by every caller.
Rows are appended under a lock and never mutated afterwards, so readers only
ever see complete, immutable rows.
"""

import threading
from math import comb, factorial
from typing import Callable, List, Tuple
from loguru import logger

Row = Tuple[int, ...]


class IntTable:
    """Lazily grown triangular table of exact integers, row n has n+1 entries."""

    def __init__(self, name: str, next_row: Callable[[Row, int], Row]):
        self.name = name
        self._next_row = next_row
        self._rows: List[Row] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> Row:
        if n < 0:
            raise ValueError(f"{self.name}: row index must be >= 0, got {n}")
        if n >= len(self._rows):
            with self._lock:
                start = len(self._rows)
                while len(self._rows) <= n:
                    m = len(self._rows) - 1
                    self._rows.append(self._next_row(self._rows[m], m))
                logger.trace(f"{self.name} grown from {start} to {len(self._rows)} rows")
        return self._rows[n]

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]


def _stirling2_next(prev: Row, n: int) -> Row:
    # S(n+1,k) = S(n,k-1) + k S(n,k)
    return tuple(
        (prev[k - 1] if k >= 1 else 0) + (k * prev[k] if k <= n else 0)
        for k in range(n + 2)
    )


def _stirling1_next(prev: Row, n: int) -> Row:
    # s(n+1,k) = s(n,k-1) - n s(n,k)
    return tuple(
        (prev[k - 1] if k >= 1 else 0) - (n * prev[k] if k <= n else 0)
        for k in range(n + 2)
    )


STIRLING2 = IntTable("stirling2", _stirling2_next)
STIRLING1 = IntTable("stirling1", _stirling1_next)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k); 0 outside 0 <= k <= n."""
    return STIRLING2.get(n, k)


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k); 0 outside 0 <= k <= n."""
    return STIRLING1.get(n, k)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def falling(x: int, n: int) -> int:
    """x (x-1) ... (x-n+1), 1 for n = 0."""
    if n < 0:
        raise ValueError(f"Falling factorial length must be >= 0, got {n}")
    out = 1
    for i in range(n):
        out *= x - i
    return out


def alpha(k: int, p: int) -> int:
    """alpha_{k,p} = (-1)^p S(k,p) p!, zero unless 1 <= p <= k."""
    if p < 1 or p > k:
        return 0
    return (-1) ** p * stirling2(k, p) * factorial(p)


def euler_operator_coeffs(n: int) -> Row:
    """
    Coefficients of (x d/dx)^n in the basis x^k (d/dx)^k.

    (x d/dx)^n phi = sum_k S(n,k) x^k phi^(k), so the row is S(n, 0..n).
    """
    return STIRLING2.row(n)


def stirling_matrix(kind: int, size: int) -> List[List[int]]:
    """Lower-triangular (size+1) x (size+1) matrix of S (kind=2) or s (kind=1)."""
    match kind:
        case 1:
            fn = stirling1
        case 2:
            fn = stirling2
        case _:
            raise ValueError(f"Invalid Stirling kind: {kind}")
    return [[fn(n, k) for k in range(size + 1)] for n in range(size + 1)]
