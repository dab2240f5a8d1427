"""Arithmetic oracles for the annihilation statements.

Nothing here computes class groups or K-groups directly. The analytic
class number formula gives h^-, the Birch-Tate formula gives the predicted
order of K_2, and the index of the Stickelberger ideal in the minus part
of Z[G] gives h^- a second, independent way (Iwasawa).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from .arith import factorize, is_prime, residue, units, valuation
from .characters import DirichletCharacter, enumerate_characters, gen_bernoulli, l_value
from .cyclotomic import CyclotomicNumber
from .engine import StickelbergerElement, character_eval
from .errors import NonIntegralResult, NotCM, NotTotallyReal, UnitIndexUndetermined
from .groupring import AbelianField
from .invariants import w_invariant
from .lattice import bareiss_det, integer_kernel, lattice_basis


def _product(factors: list[CyclotomicNumber]) -> CyclotomicNumber:
    out = CyclotomicNumber.rational(1)
    for x in factors:
        out = out * x
    return out


def _odd_prime_ramifies_in_cm_extension(F: AbelianField) -> bool:
    """Is some odd p | f ramified in F/F+? True iff complex conjugation lies in the inertia group at p."""
    f = F.conductor
    for p, e in factorize(f).items() if f > 1 else []:
        if p == 2:
            continue
        rest = f // p**e
        # inertia at p: units congruent to 1 mod the prime-to-p part
        if any(residue(-a, f) in F.subgroup for a in units(f) if a % rest == 1 % rest):
            return True
    return False


@dataclass
class MinusClassNumberReport:
    h_minus: int
    w: int
    unit_index: int
    unit_index_branch: str
    odd_factors: list[Fraction | CyclotomicNumber] = field(default_factory=list)


def minus_class_number(field_: AbelianField) -> MinusClassNumberReport:
    """h^- = Q w prod_{chi odd} (-B_{1,chi}/2)."""
    F = field_
    if not F.is_cm:
        raise NotCM(f"{F} is totally real")
    w = w_invariant(1, F)
    odd = [chi for chi in enumerate_characters(F) if not chi.is_even]
    factors = [gen_bernoulli(1, chi.primitive()) * Fraction(-1, 2) for chi in odd]
    prod = _product(factors)
    if not prod.is_rational():
        raise NonIntegralResult("product over odd characters is not rational", {"field": repr(F)})
    base = w * prod.to_rational()

    f = F.conductor
    prime_power = len(factorize(f)) == 1
    if F.is_full_cyclotomic:
        Q, branch = (1, "cyclotomic field, prime-power conductor") if prime_power else (
            2,
            "cyclotomic field, composite conductor",
        )
    elif F.degree == 2:
        Q, branch = 1, "imaginary quadratic"
    elif prime_power:
        Q, branch = 1, "prime-power conductor"
    elif _odd_prime_ramifies_in_cm_extension(F):
        # Q = 2 would make F = F+(nu, eta) with nu a 2-power root of unity and
        # eta^2 a unit of F+, which is unramified at odd primes
        Q, branch = 1, "odd prime ramified in F/F+"
    elif base.denominator == 2:
        Q, branch = 2, "forced by integrality of h^-"
    else:
        raise UnitIndexUndetermined(f"Hasse unit index of {F} is not settled by the implemented criteria")

    h = Q * base
    if h.denominator != 1 or h <= 0:
        raise NonIntegralResult(f"h^- = {h} is not a positive integer", {"field": repr(F), "Q": Q})
    return MinusClassNumberReport(
        int(h), w, Q, branch, [x.to_rational() if x.is_rational() else x for x in factors]
    )


@dataclass
class BirchTateReport:
    order: int
    w2: int
    zeta_minus_one: Fraction


def dedekind_zeta_minus_one(F: AbelianField, reverse: bool = False) -> Fraction:
    """zeta_F(-1) as the product of L(-1, chi) over the characters of F."""
    chars = enumerate_characters(F)
    if reverse:
        chars = chars[::-1]
    prod = _product([l_value(-1, chi.primitive()) for chi in chars])
    if not prod.is_rational():
        raise NonIntegralResult("zeta_F(-1) is not rational", {"field": repr(F)})
    return prod.to_rational()


def birch_tate_order(field_: AbelianField) -> BirchTateReport:
    """Predicted |K_2(O_F)| = w_2(F) |zeta_F(-1)| for totally real F."""
    F = field_
    if not F.is_totally_real:
        raise NotTotallyReal(f"{F} is not totally real")
    z = dedekind_zeta_minus_one(F)
    w2 = w_invariant(2, F)
    order = w2 * abs(z)
    if order.denominator != 1 or order <= 0:
        raise NonIntegralResult(f"w_2 |zeta_F(-1)| = {order} is not a positive integer")
    return BirchTateReport(int(order), w2, z)


def classical_theta(p: int) -> list[Fraction]:
    """Coefficients of sum_a (a/p) sigma_a^{-1} over a = 1..p-1, indexed by sigma_1..sigma_{p-1}."""
    coeffs = [Fraction(0)] * (p - 1)
    for a in range(1, p):
        coeffs[pow(a, -1, p) - 1] = Fraction(a, p)
    return coeffs


def _convolve(x: list, y: list, p: int) -> list:
    out = [0] * (p - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    out[(i + 1) * (j + 1) % p - 1] += a * b
    return out


def stickelberger_generators(p: int) -> list[list[int]]:
    """Integer vectors sigma_a (c - sigma_c) theta spanning the Stickelberger ideal of Q(mu_p)."""
    theta = classical_theta(p)
    gens = []
    for c in range(2, p + 2):
        if c == p:
            continue
        twist = [0] * (p - 1)
        twist[0] += c
        twist[c % p - 1] -= 1
        base = _convolve(twist, theta, p)
        for a in range(1, p):
            sa = [0] * (p - 1)
            sa[a - 1] = 1
            v = _convolve(sa, base, p)
            assert all(Fraction(x).denominator == 1 for x in v)
            gens.append([int(x) for x in v])
    return gens


def stickelberger_index(p: int) -> int:
    """[R^- : S^-] for R = Z[G(Q(mu_p)/Q)], S = Z[G] theta cap Z[G], minus parts taken as jx = -x."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    half = (p - 1) // 2
    S = lattice_basis(stickelberger_generators(p))
    # theta dies under the nontrivial even characters
    if len(S) != half + 1:
        raise NonIntegralResult("Stickelberger lattice has unexpected rank", {"p": p})
    # x in R^- iff x_a + x_{-a} = 0 for every a
    plus_part = [[row[a - 1] + row[p - a - 1] for a in range(1, half + 1)] for row in S]
    K = integer_kernel(plus_part)
    minus_basis = [[sum(k * row[a] for k, row in zip(kv, S)) for a in range(half)] for kv in K]
    if len(minus_basis) != half:
        raise NonIntegralResult("minus part has the wrong rank", {"p": p})
    return abs(bareiss_det(minus_basis))


@dataclass
class DivisibilityReport:
    label: str
    l: int
    value: CyclotomicNumber
    norm: Fraction
    valuation: float | int

    def to_json(self) -> dict:
        v = self.valuation
        return {
            "chi": self.label,
            "l": self.l,
            "value": self.value.to_json(),
            "norm": f"{self.norm.numerator}/{self.norm.denominator}",
            "valuation": "+inf" if v == inf else v,
        }


def annihilation_divisibility_check(
    th: StickelbergerElement, chi: DirichletCharacter, l: int
) -> DivisibilityReport:
    """l-adic valuation of N_{Q(zeta_d)/Q}(chi(Theta)), d the order of chi."""
    if l == 2 or not is_prime(l):
        raise ValueError(f"{l} is not an odd prime")
    value = character_eval(th, chi)
    norm = Fraction(0) if value.is_zero() else value.norm()
    return DivisibilityReport(chi.label, l, value, norm, valuation(norm, l))
