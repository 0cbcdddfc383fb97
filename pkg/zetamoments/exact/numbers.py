import threading
from fractions import Fraction
from typing import List
from zetamoments.exact.stirling import binomial

Rat = Fraction

_BERNOULLI: List[Fraction] = [Fraction(1)]
_HARMONIC: List[Fraction] = [Fraction(0)]
_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """
    Bernoulli number B_n with the convention B_1 = -1/2.

    Uses sum_{k=0}^{n} C(n+1, k) B_k = 0, memoized for every index reached.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {n}")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _lock:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            if m >= 3 and m % 2 == 1:
                _BERNOULLI.append(Fraction(0))
                continue
            acc = sum((binomial(m + 1, k) * _BERNOULLI[k] for k in range(m)), Fraction(0))
            _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    if n < 0:
        raise ValueError(f"Bernoulli polynomial degree must be >= 0, got {n}")
    x = Fraction(x)
    return sum((binomial(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


def bernoulli_poly_half(n: int) -> Fraction:
    """B_n(1/2), checked against the closed form (2^(1-n) - 1) B_n."""
    direct = sum(
        (binomial(n, k) * bernoulli(k) * Fraction(2) ** (k - n) for k in range(n + 1)),
        Fraction(0),
    )
    closed = (Fraction(2) ** (1 - n) - 1) * bernoulli(n)
    if direct != closed:
        raise ArithmeticError(f"B_{n}(1/2) mismatch: polynomial {direct} vs closed form {closed}")
    return direct


def harmonic(k: int) -> Fraction:
    """H_k with H_{-1} = H_0 = 0."""
    if k < -1:
        raise ValueError(f"Harmonic index must be >= -1, got {k}")
    if k <= 0:
        return Fraction(0)
    if k < len(_HARMONIC):
        return _HARMONIC[k]
    with _lock:
        while len(_HARMONIC) <= k:
            m = len(_HARMONIC)
            _HARMONIC.append(_HARMONIC[m - 1] + Fraction(1, m))
    return _HARMONIC[k]


def kcoef(k: int, j: int) -> Fraction:
    """K_{k,j} = C(k,j) B_{k-j} / k + [j = k-1]."""
    if k < 1:
        raise ValueError(f"kcoef requires k >= 1, got {k}")
    if j < 0 or j > k:
        raise ValueError(f"kcoef requires 0 <= j <= k, got k={k}, j={j}")
    value = Fraction(binomial(k, j), k) * bernoulli(k - j)
    if j == k - 1:
        value += 1
    return value
