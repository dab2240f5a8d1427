"""Higher Stickelberger elements Theta_n(b, f) in Q[G(F/Q)] and the identities they satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, inf

from .arith import prime_divisors, residue, units, valuation
from .characters import DirichletCharacter, l_value
from .cyclotomic import CyclotomicNumber
from .errors import (
    CharacterFieldMismatch,
    DivisibilityViolation,
    IdentityViolation,
    NotCoprime,
)
from .groupring import AbelianField, GroupRingElement, cyclotomic_field, gr_restrict
from .invariants import w_invariant
from .zeta import DEFAULT_PROVIDER, PartialZetaProvider


@dataclass(frozen=True)
class StickelbergerElement:
    n: int
    b: int
    field: AbelianField
    value: GroupRingElement
    modulus: int = 0  # the f in Theta_n(b, f); defaults to the conductor

    def __post_init__(self):
        if not self.modulus:
            object.__setattr__(self, "modulus", self.field.conductor)

    def to_json(self) -> dict:
        return {"n": self.n, "b": self.b, "modulus": self.modulus, **self.value.to_json()}


def _check_b(b: int, f: int):
    if b < 1:
        raise NotCoprime(f"b must be a positive integer, got {b}")
    if gcd(b, f) != 1:
        raise NotCoprime(f"b = {b} is not coprime to f = {f}")


def delta(
    n_plus_1: int, a: int, b: int, f: int, provider: PartialZetaProvider = DEFAULT_PROVIDER
) -> Fraction:
    """b^{n+1} zeta_f(a, -n) - zeta_f(ab, -n)."""
    if n_plus_1 < 1:
        raise ValueError("n + 1 must be positive")
    if gcd(a * b, f) != 1:
        raise NotCoprime(f"ab = {a * b} is not coprime to {f}")
    n = n_plus_1 - 1
    return Fraction(b) ** n_plus_1 * provider.value(a, f, -n) - provider.value(
        residue(a * b, f), f, -n
    )


def theta_full(n: int, b: int, f: int, provider: PartialZetaProvider = DEFAULT_PROVIDER) -> GroupRingElement:
    """Theta_n(b, f) in Q[(Z/f)^x], computed two ways and compared."""
    _check_b(b, f)
    K = cyclotomic_field(f)
    via_delta = GroupRingElement(
        K, {K.inverse_key(a): delta(n + 1, a, b, f, provider) for a in units(f)}
    )
    zeta_sum = GroupRingElement(K, {K.inverse_key(a): provider.value(a, f, -n) for a in units(f)})
    via_twist = (Fraction(b) ** (n + 1) - GroupRingElement.sigma(K, b)) * zeta_sum
    if via_delta != via_twist:
        raise IdentityViolation(
            "Delta form and twisted zeta-sum form of Theta disagree",
            {"n": n, "b": b, "f": f},
        )
    return via_delta


def theta_at(
    n: int, b: int, modulus: int, field: AbelianField, provider: PartialZetaProvider = DEFAULT_PROVIDER
) -> StickelbergerElement:
    """Theta_n(b, modulus) pushed into Q[G(F/Q)]; requires cond(F) | modulus."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if modulus % field.conductor:
        raise DivisibilityViolation(f"conductor {field.conductor} does not divide {modulus}")
    full = theta_full(n, b, modulus, provider)
    return StickelbergerElement(n, b, field, gr_restrict(full, field), modulus)


def theta(n: int, b: int, field: AbelianField, provider: PartialZetaProvider = DEFAULT_PROVIDER) -> StickelbergerElement:
    return theta_at(n, b, field.conductor, field, provider)


@dataclass
class IntegralityReport:
    integral: bool
    offending_primes: list[int]


def integrality_check(th: StickelbergerElement) -> IntegralityReport:
    bad = set()
    for c in th.value.coeffs.values():
        if c.denominator != 1:
            bad.update(prime_divisors(c.denominator))
    return IntegralityReport(not bad, sorted(bad))


@dataclass
class CongruenceReport:
    n: int
    m: int
    a: int
    b: int
    f: int
    difference: Fraction
    modulus: int
    odd: dict = field(default_factory=dict)  # l -> (v_l(diff), v_l(modulus))
    two_adic: tuple | None = None

    @property
    def ok(self) -> bool:
        return all(v >= need for v, need in self.odd.values())

    @property
    def two_ok(self) -> bool | None:
        if self.two_adic is None:
            return None
        return self.two_adic[0] >= self.two_adic[1]


def congruence_check(
    n: int, a: int, b: int, f: int, m: int = 0, provider: PartialZetaProvider = DEFAULT_PROVIDER
) -> CongruenceReport:
    """Delta_{n+1}(a,b,f) = (ab)^{n-m} Delta_{m+1}(a,b,f) modulo w_k(Q(mu_f)).

    k = n when m = 0, otherwise k = min(m, n). Odd primes l | w with l not
    dividing b are checked; l = 2 is only recorded.
    """
    if n < 1 or m < 0 or m > n:
        raise ValueError("need n >= 1 and 0 <= m <= n")
    diff = delta(n + 1, a, b, f, provider) - Fraction(a * b) ** (n - m) * delta(
        m + 1, a, b, f, provider
    )
    k = n if m == 0 else min(m, n)
    w = w_invariant(k, cyclotomic_field(f))
    rep = CongruenceReport(n, m, a, b, f, diff, w)
    for l in prime_divisors(w):
        need = valuation(w, l)
        if l == 2:
            rep.two_adic = (valuation(diff, 2), need)
        elif b % l:
            rep.odd[l] = (valuation(diff, l), need)
    return rep


@dataclass
class RestrictionReport:
    n: int
    b: int
    f: int
    f_prime: int
    euler_primes: list[int]
    lhs: GroupRingElement
    rhs: GroupRingElement

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def euler_factor(field: AbelianField, l: int, n: int) -> GroupRingElement:
    """1 - sigma_l^{-1} l^n."""
    return 1 - GroupRingElement.sigma(field, field.inverse_key(l), Fraction(l) ** n)


def restriction_identity_check(
    n: int,
    b: int,
    f: int,
    f_prime: int,
    field: AbelianField | None = None,
    provider: PartialZetaProvider = DEFAULT_PROVIDER,
) -> RestrictionReport:
    """Res Theta_n(b, f') = prod_{l | f', l not | f} (1 - sigma_l^{-1} l^n) Theta_n(b, f) in Q[G(F/Q)]."""
    if f_prime % f:
        raise DivisibilityViolation(f"{f} does not divide {f_prime}")
    _check_b(b, f_prime)
    field = field or cyclotomic_field(f)
    lhs = theta_at(n, b, f_prime, field, provider).value
    primes = [l for l in prime_divisors(f_prime) if f % l]
    rhs = theta_at(n, b, f, field, provider).value
    for l in primes:
        rhs = euler_factor(field, l, n) * rhs
    return RestrictionReport(n, b, f, f_prime, primes, lhs, rhs)


def _check_character(th: StickelbergerElement, chi: DirichletCharacter):
    if chi.modulus != th.field.conductor or not chi.kills(th.field.subgroup):
        raise CharacterFieldMismatch(f"{chi} is not a character of {th.field}")


def character_eval(th: StickelbergerElement, chi: DirichletCharacter) -> CyclotomicNumber:
    """Image of Theta under the ring map sigma_a -> chi(a)."""
    _check_character(th, chi)
    terms: dict[int, Fraction] = {}
    for a, c in th.value.coeffs.items():
        e = chi.exponent(a)
        terms[e] = terms.get(e, Fraction(0)) + c
    return CyclotomicNumber.from_exponent_sum(chi.order, terms)


@dataclass
class CharacterReport:
    label: str
    direct: CyclotomicNumber
    oracle: CyclotomicNumber

    @property
    def ok(self) -> bool:
        return self.direct == self.oracle


def character_oracle(th: StickelbergerElement, chi: DirichletCharacter) -> CyclotomicNumber:
    """(b^{n+1} - chi(b)) L_S(-n, conj(chi)) with S the primes dividing the modulus of Theta."""
    _check_character(th, chi)
    psi = chi.conjugate().primitive()
    L = l_value(-th.n, psi, prime_divisors(th.modulus))
    return (CyclotomicNumber.rational(Fraction(th.b) ** (th.n + 1), chi.order) - chi(th.b)) * L


def character_identity_check(th: StickelbergerElement, chi: DirichletCharacter) -> CharacterReport:
    return CharacterReport(chi.label, character_eval(th, chi), character_oracle(th, chi))


def fourier_inversion(th: StickelbergerElement, chars: list[DirichletCharacter]) -> GroupRingElement:
    """Rebuild Theta from its character values: (1/|G|) sum_chi chi(Theta) sum_a conj(chi)(a) sigma_a."""
    G = th.field.elements
    values = [(chi, character_eval(th, chi)) for chi in chars]
    coeffs = {}
    for a in G:
        total = CyclotomicNumber.rational(0)
        for chi, v in values:
            total = total + v * chi.conjugate()(a)
        coeffs[a] = total.to_rational() / len(G)
    return GroupRingElement(th.field, coeffs)


def norm_valuation(x: CyclotomicNumber, l: int) -> float | int:
    return valuation(x.norm(), l) if not x.is_zero() else inf
