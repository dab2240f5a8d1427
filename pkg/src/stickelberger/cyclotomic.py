"""Exact arithmetic in Q(zeta_d), power basis modulo the d-th cyclotomic polynomial."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .arith import divisors, lcm, totient, units
from .groupring import format_rational, parse_rational


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert not any(num[: len(den) - 1]), "inexact division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Coefficients of Phi_d, constant term first."""
    poly = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d):
        if e != d:
            poly = _polydiv_exact(poly, list(cyclotomic_poly(e)))
    return tuple(poly)


def _reduce(coeffs: Sequence[Fraction], d: int) -> list[Fraction]:
    phi = cyclotomic_poly(d)
    m = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, m - 1, -1):
        q = work[i]
        if q:
            for j in range(m + 1):
                work[i - m + j] -= q * phi[j]
    work = work[:m] + [Fraction(0)] * max(0, m - len(work))
    return work


class CyclotomicNumber:
    """Element of Q(zeta_d) with coordinates on 1, zeta_d, ..., zeta_d^{phi(d)-1}."""

    __slots__ = ("d", "coords")

    def __init__(self, d: int, coords: Sequence[Fraction | int]):
        self.d = d
        self.coords = tuple(_reduce(coords, d))

    @classmethod
    def rational(cls, x, d: int = 1) -> "CyclotomicNumber":
        return cls(d, [Fraction(x)])

    @classmethod
    def zeta_power(cls, d: int, k: int, coeff=1) -> "CyclotomicNumber":
        vec = [Fraction(0)] * d
        vec[k % d] = Fraction(coeff)
        return cls(d, vec)

    @classmethod
    def from_exponent_sum(cls, d: int, terms: dict[int, Fraction]) -> "CyclotomicNumber":
        """sum of c * zeta_d^k over the given {k: c}."""
        vec = [Fraction(0)] * d
        for k, c in terms.items():
            vec[k % d] += c
        return cls(d, vec)

    def lift(self, m: int) -> "CyclotomicNumber":
        """Same number viewed in Q(zeta_m), d | m."""
        if m % self.d:
            raise ValueError(f"cannot lift from order {self.d} to {m}")
        step = m // self.d
        vec = [Fraction(0)] * (step * len(self.coords))
        for i, c in enumerate(self.coords):
            vec[i * step] = c
        return CyclotomicNumber(m, vec)

    def _common(self, other) -> tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other, self.d)
        m = lcm(self.d, other.d)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        x, y = self._common(other)
        return CyclotomicNumber(x.d, [a + b for a, b in zip(x.coords, y.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.d, [-c for c in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.d, [c * other for c in self.coords])
        x, y = self._common(other)
        prod = [Fraction(0)] * (len(x.coords) + len(y.coords))
        for i, a in enumerate(x.coords):
            if a:
                for j, b in enumerate(y.coords):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicNumber(x.d, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        x, y = self._common(other)
        return x.coords == y.coords

    # equality lifts across orders, so no hash consistent with it is cheap
    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply zeta_d -> zeta_d^k (k a unit mod d)."""
        if gcd(k, self.d) != 1:
            raise ValueError(f"{k} is not a unit mod {self.d}")
        vec = [Fraction(0)] * self.d
        for i, c in enumerate(self.coords):
            vec[i * k % self.d] += c
        return CyclotomicNumber(self.d, vec)

    def norm(self) -> Fraction:
        """Absolute norm N_{Q(zeta_d)/Q}."""
        out = CyclotomicNumber.rational(1, self.d)
        for k in units(self.d):
            out = out * self.galois(k)
        return out.to_rational()

    def degree(self) -> int:
        return totient(self.d)

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicNumber({self.coords[0]})"
        return f"CyclotomicNumber(d={self.d}, {[str(c) for c in self.coords]})"

    def to_json(self) -> dict:
        return {"d": self.d, "coords": [format_rational(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicNumber":
        return cls(int(data["d"]), [parse_rational(c) for c in data["coords"]])
