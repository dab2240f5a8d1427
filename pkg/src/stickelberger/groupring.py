"""Abelian number fields F/Q as subgroups of (Z/fZ)^x, and the group rings Q[G(F/Q)].

A field is stored by its conductor ``f`` and the subgroup ``H`` of
(Z/fZ)^x fixing it, so G(F/Q) = (Z/fZ)^x / H. Galois elements are keyed
by the least positive unit in their coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping

from .arith import divisors, residue, units
from .errors import (
    BadConductor,
    FieldMismatch,
    NonMinimalConductor,
    NonSubgroup,
    NotASubfield,
)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _check_subgroup(f: int, H: Iterable[int]) -> frozenset[int]:
    reduced = set()
    for h in H:
        if gcd(h, f) != 1:
            raise NonSubgroup(f"{h} is not a unit mod {f}")
        reduced.add(residue(h, f))
    reduced.add(residue(1, f))
    for x in reduced:
        for y in reduced:
            if residue(x * y, f) not in reduced:
                raise NonSubgroup(f"{sorted(reduced)} is not closed mod {f}")
    return frozenset(reduced)


def kernel_to(f: int, f0: int) -> list[int]:
    """Units mod f that reduce to 1 mod f0."""
    return [a for a in units(f) if a % f0 == 1 % f0]


def subgroup_conductor(f: int, H: Iterable[int]) -> int:
    """Conductor of the fixed field of H inside Q(mu_f).

    The fixed field lies in Q(mu_f0) exactly when the kernel of
    (Z/f)^x -> (Z/f0)^x is contained in H; the conductor is the least such f0.
    """
    Hs = _check_subgroup(f, H)
    for f0 in divisors(f):
        if all(k in Hs for k in kernel_to(f, f0)):
            return f0
    return f


@dataclass(frozen=True)
class AbelianField:
    conductor: int
    subgroup: frozenset

    @cached_property
    def coset_key(self) -> dict[int, int]:
        """Map each unit mod f to the least unit of its H-coset."""
        f = self.conductor
        out: dict[int, int] = {}
        for a in units(f):
            if a in out:
                continue
            coset = sorted(residue(a * h, f) for h in self.subgroup)
            for c in coset:
                out[c] = coset[0]
        return out

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.coset_key.values())))

    @property
    def degree(self) -> int:
        return len(self.elements)

    def key(self, a: int) -> int:
        """Canonical key of sigma_a; a must be coprime to f."""
        f = self.conductor
        if gcd(a, f) != 1:
            raise ValueError(f"{a} is not a unit mod {f}")
        return self.coset_key[residue(a, f)]

    def inverse_key(self, a: int) -> int:
        f = self.conductor
        return self.key(pow(a, -1, f) if f > 1 else 1)

    @property
    def is_full_cyclotomic(self) -> bool:
        return len(self.subgroup) == 1

    @property
    def is_totally_real(self) -> bool:
        return self.conductor <= 2 or residue(-1, self.conductor) in self.subgroup

    @property
    def is_cm(self) -> bool:
        return not self.is_totally_real

    def contains(self, other: "AbelianField") -> bool:
        """True when ``other`` is a subfield of self."""
        if self.conductor % other.conductor:
            return False
        return all(residue(h, other.conductor) in other.subgroup for h in self.subgroup)

    def __repr__(self) -> str:
        return f"AbelianField(f={self.conductor}, H={sorted(self.subgroup)})"


def make_field(f: int, H: Iterable[int] = (1,)) -> AbelianField:
    """Validated description of the fixed field of H in Q(mu_f)."""
    if f < 1:
        raise BadConductor(f"conductor must be positive, got {f}")
    if f % 4 == 2:
        raise BadConductor(f"{f} = 2 mod 4 is never a conductor")
    Hs = _check_subgroup(f, H)
    f0 = subgroup_conductor(f, Hs)
    if f0 != f:
        raise NonMinimalConductor(f, f0)
    return AbelianField(f, Hs)


def cyclotomic_field(f: int) -> AbelianField:
    return make_field(f, (1,))


def field_from_subgroup(M: int, H: Iterable[int]) -> AbelianField:
    """Fixed field of H <= (Z/M)^x, re-expressed at its true conductor."""
    Hs = _check_subgroup(M, H)
    f0 = subgroup_conductor(M, Hs)
    return make_field(f0, {residue(h, f0) for h in Hs})


@dataclass(frozen=True)
class GaloisElement:
    field: AbelianField
    rep: int

    def __post_init__(self):
        object.__setattr__(self, "rep", self.field.key(self.rep))

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        if other.field != self.field:
            raise FieldMismatch("Galois elements of different fields")
        return GaloisElement(self.field, self.rep * other.rep)

    def inverse(self) -> "GaloisElement":
        return GaloisElement(self.field, self.field.inverse_key(self.rep))


class GroupRingElement:
    """Finitely supported map G(F/Q) -> Q. Immutable; zero coefficients are dropped."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: AbelianField, coeffs: Mapping[int, Fraction | int] = ()):
        acc: dict[int, Fraction] = {}
        for a, c in dict(coeffs).items():
            k = field.key(a)
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "field", field)
        object.__setattr__(
            self, "coeffs", {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def zero(cls, field: AbelianField) -> "GroupRingElement":
        return cls(field, {})

    @classmethod
    def one(cls, field: AbelianField) -> "GroupRingElement":
        return cls(field, {1: 1})

    @classmethod
    def sigma(cls, field: AbelianField, a: int, coeff=1) -> "GroupRingElement":
        return cls(field, {a: coeff})

    def __getitem__(self, a: int) -> Fraction:
        return self.coeffs.get(self.field.key(a), Fraction(0))

    def _check(self, other: "GroupRingElement"):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupRingElement(self.field, {1: other})
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return GroupRingElement(self.field, acc)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.field, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupRingElement(self.field, {k: c * other for k, c in self.coeffs.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        f = self.field.conductor
        acc: dict[int, Fraction] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                k = self.field.key(residue(a * b, f))
                acc[k] = acc.get(k, Fraction(0)) + x * y
        return GroupRingElement(self.field, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})s{a}" for a, c in self.coeffs.items())

    def involution(self) -> "GroupRingElement":
        """The map sigma -> sigma^{-1}."""
        return GroupRingElement(
            self.field, {self.field.inverse_key(a): c for a, c in self.coeffs.items()}
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def canonicalize(self) -> "GroupRingElement":
        return GroupRingElement(self.field, self.coeffs)

    def to_json(self) -> dict:
        return {
            "f": self.field.conductor,
            "H": sorted(self.field.subgroup),
            "coeffs": {str(a): format_rational(c) for a, c in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupRingElement":
        field = make_field(int(data["f"]), [int(h) for h in data["H"]])
        return cls(field, {int(a): parse_rational(c) for a, c in data["coeffs"].items()})


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def gr_restrict(x: GroupRingElement, target: AbelianField) -> GroupRingElement:
    """Push coefficients along G(E/Q) -> G(F/Q) for F = target contained in E."""
    source = x.field
    if not source.contains(target):
        raise NotASubfield(f"{target} is not a subfield of {source}")
    f = target.conductor
    acc: dict[int, Fraction] = {}
    for a, c in x.coeffs.items():
        k = target.key(residue(a, f))
        acc[k] = acc.get(k, Fraction(0)) + c
    return GroupRingElement(target, acc)
