"""Dirichlet characters of abelian fields, generalized Bernoulli numbers and L(-n, chi).

Characters are stored as exponent maps: chi(a) = zeta_d^{e(a)} for units a,
and chi(a) = 0 otherwise. (Z/fZ)^x is split into cyclic factors per prime
power; odd p^k uses its least primitive root, 2^k uses -1 and 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import gcd
from typing import Iterable

from .arith import divisors, factorize, lcm, least_primitive_root, residue, units
from .bernoulli import bernoulli_poly
from .cyclotomic import CyclotomicNumber
from .errors import NonPrimitive
from .groupring import AbelianField, kernel_to


@dataclass(frozen=True)
class _CyclicFactor:
    modulus: int  # the prime power q
    generator: int  # generator mod q
    order: int
    log: dict  # residue mod q -> discrete log


@lru_cache(maxsize=None)
def unit_group_factors(f: int) -> tuple[_CyclicFactor, ...]:
    out = []
    for p, k in sorted(factorize(f).items()) if f > 1 else []:
        q = p**k
        if p == 2:
            if k == 1:
                continue
            gens = [(-1 % q, 2)]
            if k >= 3:
                gens.append((5, 2 ** (k - 2)))
        else:
            gens = [(least_primitive_root(q), q // p * (p - 1))]
        for g, order in gens:
            out.append(_CyclicFactor(q, g, order, {}))
    # discrete logs; at 2^k (k >= 3) every unit is +-5^j uniquely
    for i, fac in enumerate(out):
        q = fac.modulus
        if q % 2 == 0 and fac.generator == q - 1 and q >= 8:
            for j in range(q // 4):
                x = pow(5, j, q)
                fac.log[x] = 0
                fac.log[q - x] = 1
        elif q % 2 == 0 and fac.generator == 5:
            for j in range(q // 4):
                x = pow(5, j, q)
                fac.log[x] = j
                fac.log[q - x] = j
        else:
            x = 1
            for j in range(fac.order):
                fac.log[x] = j
                x = x * fac.generator % q
    return tuple(out)


def _logs(a: int, f: int) -> tuple[int, ...]:
    return tuple(fac.log[a % fac.modulus] for fac in unit_group_factors(f))


def _global_generator(fac: _CyclicFactor, f: int) -> int:
    """Element of (Z/f)^x that is fac.generator at fac.modulus and 1 elsewhere."""
    q = fac.modulus
    rest = f // q
    for x in range(1, f + 1):
        if x % q == fac.generator % q and x % rest == 1 % rest:
            return x
    raise AssertionError("CRT failed")


class DirichletCharacter:
    """A character of (Z/fZ)^x with values zeta_d^{e(a)}."""

    def __init__(self, modulus: int, order: int, exponents: dict[int, int]):
        self.modulus = modulus
        self.order = order
        self.exponents = {a: exponents[a] % order for a in units(modulus)}
        ex = self.exponents
        if order > 1 and gcd(order, *ex.values()) != 1:
            raise ValueError("order is not exact")
        for a in units(modulus):
            for b in units(modulus):
                if ex[residue(a * b, modulus)] != (ex[a] + ex[b]) % order:
                    raise ValueError("exponent map is not a homomorphism")

    @classmethod
    def from_generator_exponents(cls, f: int, js: Iterable[int]) -> "DirichletCharacter":
        factors = unit_group_factors(f)
        js = tuple(js)
        if len(js) != len(factors):
            raise ValueError(f"need {len(factors)} generator exponents mod {f}")
        N = lcm(*(fac.order for fac in factors)) if factors else 1
        raw = {}
        for a in units(f):
            logs = _logs(a, f)
            raw[a] = sum(j * (N // fac.order) * lg for j, fac, lg in zip(js, factors, logs)) % N
        g = gcd(N, *raw.values())
        d = N // g
        return cls._trusted(f, d, {a: e // g for a, e in raw.items()})

    @classmethod
    def _trusted(cls, f: int, d: int, exps: dict[int, int]) -> "DirichletCharacter":
        obj = cls.__new__(cls)
        obj.modulus, obj.order, obj.exponents = f, d, exps
        return obj

    @classmethod
    def trivial(cls, f: int = 1) -> "DirichletCharacter":
        return cls._trusted(f, 1, {a: 0 for a in units(f)})

    @cached_property
    def generator_exponents(self) -> tuple[int, ...]:
        out = []
        for fac in unit_group_factors(self.modulus):
            e = self.exponent(_global_generator(fac, self.modulus))
            out.append(e * fac.order // self.order)
        return tuple(out)

    @property
    def label(self) -> str:
        return ".".join(map(str, self.generator_exponents)) or "0"

    def exponent(self, a: int) -> int | None:
        if gcd(a, self.modulus) != 1:
            return None
        return self.exponents[residue(a, self.modulus)]

    def __call__(self, a: int) -> CyclotomicNumber:
        e = self.exponent(a)
        if e is None:
            return CyclotomicNumber.rational(0, self.order)
        return CyclotomicNumber.zeta_power(self.order, e)

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter._trusted(
            self.modulus, self.order, {a: (-e) % self.order for a, e in self.exponents.items()}
        )

    def kills(self, H: Iterable[int]) -> bool:
        return all(self.exponents[residue(h, self.modulus)] == 0 for h in H)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_even(self) -> bool:
        return self.exponent(-1) == 0

    @cached_property
    def conductor(self) -> int:
        return conductor_of(self)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def primitive(self) -> "DirichletCharacter":
        """The primitive character inducing self."""
        f, f0 = self.modulus, self.conductor
        exps = {}
        for a in units(f0):
            lift = next(x for x in range(a, a + f * f0 + 1, f0) if gcd(x, f) == 1)
            exps[a] = self.exponents[residue(lift, f)]
        return DirichletCharacter._trusted(f0, self.order, exps)

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return (self.modulus, self.order, self.exponents) == (
            other.modulus,
            other.order,
            other.exponents,
        )

    def __hash__(self):
        return hash((self.modulus, self.order, tuple(sorted(self.exponents.items()))))

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, order {self.order}, label {self.label})"

    def to_json(self) -> dict:
        return {
            "f": self.modulus,
            "d": self.order,
            "e": {str(a): e for a, e in sorted(self.exponents.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "DirichletCharacter":
        return cls(int(data["f"]), int(data["d"]), {int(a): int(e) for a, e in data["e"].items()})


def enumerate_characters(field: AbelianField) -> list[DirichletCharacter]:
    """The dual group of G(F/Q), as characters mod the conductor, sorted by (order, label)."""
    f = field.conductor
    factors = unit_group_factors(f)
    out = []
    for js in product(*(range(fac.order) for fac in factors)):
        chi = DirichletCharacter.from_generator_exponents(f, js)
        if chi.kills(field.subgroup):
            out.append(chi)
    out.sort(key=lambda c: (c.order, c.generator_exponents))
    return out


def character_by_label(field: AbelianField, label: str) -> DirichletCharacter:
    for chi in enumerate_characters(field):
        if chi.label == label:
            return chi
    raise KeyError(f"no character labelled {label!r} for {field}")


def conductor_of(chi: DirichletCharacter) -> int:
    f = chi.modulus
    for f0 in divisors(f):
        if all(chi.exponents[k] == 0 for k in kernel_to(f, f0)):
            return f0
    return f


def gen_bernoulli(n: int, chi: DirichletCharacter) -> CyclotomicNumber:
    """B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f) for primitive chi mod f."""
    if n < 1:
        raise ValueError("n must be positive")
    if not chi.is_primitive:
        raise NonPrimitive(f"character mod {chi.modulus} has conductor {chi.conductor}")
    f = chi.modulus
    terms: dict[int, Fraction] = {}
    for a in units(f):
        e = chi.exponent(a)
        terms[e] = terms.get(e, Fraction(0)) + bernoulli_poly(n, Fraction(a, f))
    scale = Fraction(f) ** (n - 1)
    return CyclotomicNumber.from_exponent_sum(chi.order, {e: c * scale for e, c in terms.items()})


def l_value(minus_n: int, chi: DirichletCharacter, removed_primes: Iterable[int] = ()) -> CyclotomicNumber:
    """L_S(-n, chi) = -B_{n+1,chi}/(n+1) * prod_{p in S, p not | f_chi} (1 - chi(p) p^n)."""
    if minus_n > 0:
        raise ValueError("argument must be a non-positive integer")
    n = -minus_n
    value = gen_bernoulli(n + 1, chi) * Fraction(-1, n + 1)
    for p in sorted(set(removed_primes)):
        if chi.modulus % p == 0:
            continue
        value = value * (CyclotomicNumber.rational(1, chi.order) - chi(p) * p**n)
    return value
