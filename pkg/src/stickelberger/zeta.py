"""Partial zeta values zeta_f(a, -n) over the base field Q.

For K = Q the ray classes mod f*infinity are the units of Z/fZ, and the
partial zeta function of the class of a is the Hurwitz zeta function
f^{-s} zeta(s, a/f). At s = -n this gives -f^n B_{n+1}(a/f) / (n+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Protocol

from .arith import residue, units
from .bernoulli import bernoulli_poly
from .errors import NotAUnit, NotCoprime


class PartialZetaProvider(Protocol):
    def value(self, a: int, f: int, minus_n: int) -> Fraction: ...


@lru_cache(maxsize=200_000)
def partial_zeta_q(a: int, f: int, minus_n: int) -> Fraction:
    if minus_n > 0:
        raise ValueError("only non-positive integer arguments are supported")
    if f < 1 or gcd(a, f) != 1:
        raise NotAUnit(f"{a} is not a unit mod {f}")
    n = -minus_n
    a = residue(a, f)
    return -Fraction(f) ** n * bernoulli_poly(n + 1, Fraction(a, f)) / (n + 1)


class RationalProvider:
    """Provider for K = Q via the Bernoulli-polynomial closed form."""

    def value(self, a: int, f: int, minus_n: int) -> Fraction:
        return partial_zeta_q(a, f, minus_n)


DEFAULT_PROVIDER: PartialZetaProvider = RationalProvider()


@dataclass
class EulerSplitReport:
    a: int
    f: int
    l: int
    minus_n: int
    lhs: Fraction
    rhs: Fraction
    lifts: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def euler_factor_split_check(
    a: int, f: int, l_prime: int, minus_n: int, provider: PartialZetaProvider = DEFAULT_PROVIDER
) -> EulerSplitReport:
    """Compare zeta_f(a,s) - l^{-s} zeta_f(l^{-1}a, s) with the sum of zeta_{lf}(a', s) over lifts a'."""
    if gcd(l_prime, f) != 1:
        raise NotCoprime(f"{l_prime} divides {f}")
    lf = l_prime * f
    l_inv_a = residue(pow(l_prime, -1, f) * a, f) if f > 1 else 1
    lhs = provider.value(a, f, minus_n) - Fraction(l_prime) ** (-minus_n) * provider.value(
        l_inv_a, f, minus_n
    )
    lifts = [x for x in units(lf) if x % f == a % f]
    rhs = sum((provider.value(x, lf, minus_n) for x in lifts), Fraction(0))
    return EulerSplitReport(a, f, l_prime, minus_n, lhs, rhs, lifts)
