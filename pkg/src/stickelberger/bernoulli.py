"""Bernoulli numbers and polynomials (convention B_1 = -1/2)."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

_TABLE: list[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """B_n from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_TABLE):
        return _TABLE[n]
    with _LOCK:
        for m in range(len(_TABLE), n + 1):
            s = sum(comb(m + 1, k) * _TABLE[k] for k in range(m))
            _TABLE.append(-s / (m + 1))
    return _TABLE[n]


def bernoulli_poly(n: int, x) -> Fraction:
    x = Fraction(x)
    return sum(
        (comb(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1)),
        Fraction(0),
    )
