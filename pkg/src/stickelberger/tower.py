"""Cyclotomic l-towers F_k = F(mu_{l^k}) and compatible families of Stickelberger elements."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import is_prime, lcm, residue, units
from .engine import StickelbergerElement, euler_factor, theta
from .errors import CompatibilityFailure, IdentityViolation, NotCoprime
from .groupring import AbelianField, field_from_subgroup, gr_restrict
from .invariants import w_invariant


def adjoin_l_power_roots(F: AbelianField, l: int, k: int) -> AbelianField:
    """F(mu_{l^k}), with its conductor recomputed from the fixing subgroup."""
    if k == 0:
        return F
    M = lcm(F.conductor, l**k)
    H = [x for x in units(M) if residue(x, F.conductor) in F.subgroup and x % l**k == 1 % l**k]
    return field_from_subgroup(M, H)


@dataclass(frozen=True)
class TowerSpec:
    base: AbelianField
    l: int
    depth: int

    def __post_init__(self):
        if self.l == 2 or not is_prime(self.l):
            raise ValueError(f"tower prime must be an odd prime, got {self.l}")
        if self.depth < 0:
            raise ValueError("depth must be non-negative")

    @property
    def conductors(self) -> list[int]:
        f = self.base.conductor
        return [f] + [lcm(f, self.l**k) for k in range(1, self.depth + 1)]

    def level(self, k: int) -> AbelianField:
        F = adjoin_l_power_roots(self.base, self.l, k)
        if F.conductor != self.conductors[k]:
            raise IdentityViolation(
                f"conductor of F(mu_{self.l}^{k}) is {F.conductor}, expected {self.conductors[k]}"
            )
        return F

    @property
    def fields(self) -> list[AbelianField]:
        return [self.level(k) for k in range(self.depth + 1)]


def theta_f0(n: int, b: int, F: AbelianField, l: int) -> StickelbergerElement:
    """Level-0 element: Theta_n(b, f) with the Euler factor at l when l does not divide f."""
    f = F.conductor
    if gcd(b, l * f) != 1:
        raise NotCoprime(f"b = {b} must be coprime to l*f = {l * f}")
    th = theta(n, b, F)
    if f % l == 0:
        return th
    return StickelbergerElement(n, b, F, euler_factor(F, l, n) * th.value, th.modulus)


@dataclass
class ThetaTowerFamily:
    tower: TowerSpec
    n: int
    b: int
    theta_f: StickelbergerElement
    elements: list[StickelbergerElement]  # index 0 is theta_f0
    compat: list[bool] = field(default_factory=list)
    transcript: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "f": self.tower.base.conductor,
            "H": sorted(self.tower.base.subgroup),
            "l": self.tower.l,
            "n": self.n,
            "b": self.b,
            "conductors": self.tower.conductors,
            "theta_f": self.theta_f.value.to_json(),
            "theta_f0": self.elements[0].value.to_json(),
            "levels": [e.value.to_json() for e in self.elements[1:]],
            "compat": self.compat,
        }


def check_compatibility(elements: list[StickelbergerElement]) -> tuple[list[bool], int | None]:
    """Res_{k+1 -> k} elements[k+1] == elements[k]; returns flags and the first failing level."""
    flags, first = [], None
    for k in range(len(elements) - 1):
        ok = gr_restrict(elements[k + 1].value, elements[k].field) == elements[k].value
        flags.append(ok)
        if not ok and first is None:
            first = k
    return flags, first


def build_theta_tower(tower: TowerSpec, n: int, b: int, require_integral: bool = True) -> ThetaTowerFamily:
    F, l = tower.base, tower.l
    if gcd(b, F.conductor * l) != 1:
        raise NotCoprime(f"b = {b} must be coprime to f*l = {F.conductor * l}")
    fields = tower.fields
    if require_integral:
        w = w_invariant(n + 1, fields[-1])
        if gcd(b, w) != 1:
            raise NotCoprime(f"b = {b} shares a factor with w_{n + 1}(F_{tower.depth}) = {w}")
    elements = [theta_f0(n, b, F, l)] + [theta(n, b, Fk) for Fk in fields[1:]]
    return verify_family(ThetaTowerFamily(tower, n, b, theta(n, b, F), elements))


def verify_family(family: ThetaTowerFamily) -> ThetaTowerFamily:
    """Recompute the compatibility flags; raise CompatibilityFailure at the first bad level."""
    tower, elements = family.tower, family.elements
    flags, first = check_compatibility(elements)
    family.compat = flags
    family.transcript = [
        f"Res f{k + 1}={tower.conductors[k + 1]} -> f{k}={tower.conductors[k]}: {'ok' if ok else 'FAIL'}"
        for k, ok in enumerate(flags)
    ]
    if first is not None:
        restricted = gr_restrict(elements[first + 1].value, elements[first].field)
        raise CompatibilityFailure(first, restricted, elements[first].value)
    return family
