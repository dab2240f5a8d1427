from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles_brute import bernoulli_by_recurrence, units_mod
from stickelberger.bernoulli import bernoulli_number, bernoulli_poly
from stickelberger.characters import (
    DirichletCharacter,
    character_by_label,
    conductor_of,
    enumerate_characters,
    gen_bernoulli,
    l_value,
)
from stickelberger.cyclotomic import CyclotomicNumber, cyclotomic_poly
from stickelberger.errors import NonPrimitive
from stickelberger.groupring import cyclotomic_field, make_field


# bernoulli ------------------------------------------------------------------

@pytest.mark.parametrize(
    "n, value",
    [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, 0), (4, Fraction(-1, 30)),
     (6, Fraction(1, 42)), (10, Fraction(5, 66)), (12, Fraction(-691, 2730))],
)
def test_bernoulli_numbers(n, value):
    assert bernoulli_number(n) == value


def test_bernoulli_matches_recurrence_oracle():
    for n in range(31):
        assert bernoulli_number(n) == bernoulli_by_recurrence(n)


def test_bernoulli_polynomials():
    assert bernoulli_poly(1, Fraction(1, 3)) == Fraction(-1, 6)
    assert bernoulli_poly(2, Fraction(1, 3)) == Fraction(-1, 18)
    for n in range(21):
        assert bernoulli_poly(n, 0) == bernoulli_number(n)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.fractions(min_value=-3, max_value=3, max_denominator=12))
def test_bernoulli_poly_difference(n, x):
    # B_n(x+1) - B_n(x) = n x^(n-1)
    assert bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == n * x ** (n - 1)


# cyclotomic numbers ---------------------------------------------------------

def test_cyclotomic_poly():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_basics():
    z3 = CyclotomicNumber.zeta_power(3, 1)
    assert 1 + z3 + z3 * z3 == 0
    assert z3 * z3 * z3 == 1
    # zeta_6 = -zeta_3^2, across orders
    assert CyclotomicNumber.zeta_power(6, 1) == -(z3 * z3)
    assert CyclotomicNumber.zeta_power(4, 1).norm() == 1
    assert (1 - z3).norm() == 3
    assert (z3 * 2 - 1).norm() == 7
    assert CyclotomicNumber.rational(Fraction(5, 7), 9).to_rational() == Fraction(5, 7)


def test_cyclotomic_json_roundtrip():
    x = CyclotomicNumber(12, [Fraction(1, 2), 3, 0, Fraction(-7, 5)])
    assert CyclotomicNumber.from_json(x.to_json()) == x


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([3, 4, 5, 8, 12]),
    st.lists(st.integers(-5, 5), min_size=1, max_size=6),
    st.lists(st.integers(-5, 5), min_size=1, max_size=6),
)
def test_galois_is_multiplicative(d, xs, ys):
    x, y = CyclotomicNumber(d, xs), CyclotomicNumber(d, ys)
    for k in units_mod(d):
        assert (x * y).galois(k) == x.galois(k) * y.galois(k)
    assert (x * y).norm() == x.norm() * y.norm()


# characters -----------------------------------------------------------------

def test_characters_of_q3():
    chars = enumerate_characters(cyclotomic_field(3))
    assert len(chars) == 2
    triv, odd = chars
    assert triv.is_trivial and triv.is_even
    assert not odd.is_even and odd(2) == -1


def test_characters_of_sqrt5_are_even():
    chars = enumerate_characters(make_field(5, {1, 4}))
    assert len(chars) == 2 and all(c.is_even for c in chars)


def test_conductors():
    assert DirichletCharacter.trivial(15).conductor == 1
    odd3 = enumerate_characters(cyclotomic_field(3))[1]
    assert odd3.conductor == 3
    induced = DirichletCharacter(15, 2, {a: 0 if a % 3 == 1 else 1 for a in units_mod(15)})
    assert conductor_of(induced) == 3
    assert induced.primitive() == odd3


@pytest.mark.parametrize("f", [1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24])
def test_orthogonality_by_direct_summation(f):
    F = cyclotomic_field(f)
    chars = enumerate_characters(F)
    us = units_mod(f)
    assert len(chars) == len(us)
    assert len({c.label for c in chars}) == len(chars)
    for i, c in enumerate(chars):
        for j, d in enumerate(chars):
            s = sum((c(a) * d.conjugate()(a) for a in us), CyclotomicNumber.rational(0))
            assert s == (len(us) if i == j else 0)
    for a in us:
        s = sum((c(a) for c in chars), CyclotomicNumber.rational(0))
        assert s == (len(us) if a % f == 1 % f else 0)


@pytest.mark.parametrize("f, H", [(7, {1, 6}), (13, {1, 3, 9}), (15, {1, 4}), (16, {1, 15})])
def test_characters_of_subfields_kill_H(f, H):
    F = make_field(f, H)
    chars = enumerate_characters(F)
    assert len(chars) == F.degree
    assert all(c.kills(H) for c in chars)
    for c in chars:
        assert character_by_label(F, c.label) == c
        assert DirichletCharacter.from_json(c.to_json()) == c


def test_character_constructor_validates():
    with pytest.raises(ValueError):
        DirichletCharacter(5, 4, {1: 0, 2: 1, 3: 1, 4: 2})
    with pytest.raises(ValueError):
        DirichletCharacter(5, 4, {1: 0, 2: 2, 3: 2, 4: 0})


def test_generalized_bernoulli_examples():
    odd3 = enumerate_characters(cyclotomic_field(3))[1]
    assert gen_bernoulli(1, odd3) == Fraction(-1, 3)
    even5 = [c for c in enumerate_characters(make_field(5, {1, 4})) if not c.is_trivial][0]
    assert gen_bernoulli(2, even5) == Fraction(4, 5)
    assert gen_bernoulli(2, DirichletCharacter.trivial(1)) == Fraction(1, 6)
    # B_{1, trivial} = +1/2 under the B_1(1) convention
    assert gen_bernoulli(1, DirichletCharacter.trivial(1)) == Fraction(1, 2)


def test_gen_bernoulli_needs_primitive():
    with pytest.raises(NonPrimitive):
        gen_bernoulli(1, DirichletCharacter.trivial(3))


def test_l_value_examples():
    odd3 = enumerate_characters(cyclotomic_field(3))[1]
    assert l_value(0, odd3) == Fraction(1, 3)
    triv = DirichletCharacter.trivial(1)
    assert l_value(0, triv, [3]) == 0
    assert l_value(-1, triv) == Fraction(-1, 12)
    assert l_value(-1, triv, [2]) == Fraction(-1, 12) * (1 - 2)


def test_l_value_parity_vanishing():
    # L(-n, chi) = 0 when chi(-1) != (-1)^n, away from the trivial character at s = 0
    for f in (3, 4, 5, 7, 8, 11, 12):
        for chi in enumerate_characters(cyclotomic_field(f)):
            p = chi.primitive()
            for n in range(1, 5):
                if p.is_even != (n % 2 == 1):
                    assert l_value(-n, p).is_zero()
