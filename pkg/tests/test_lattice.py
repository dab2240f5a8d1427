from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stickelberger.lattice import bareiss_det, integer_kernel, lattice_basis, xgcd


def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def test_xgcd():
    for a in range(-20, 21):
        for b in range(-20, 21):
            g, s, t = xgcd(a, b)
            assert s * a + t * b == g >= 0
            if a or b:
                assert a % g == 0 and b % g == 0


def test_det_examples():
    assert bareiss_det([]) == 1
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    with pytest.raises(ValueError):
        bareiss_det([[1, 2]])


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=150, deadline=None)
@given(square)
def test_det_matches_leibniz(M):
    assert bareiss_det(M) == leibniz_det(M)


vectors = st.integers(1, 4).flatmap(
    lambda m: st.lists(st.lists(st.integers(-6, 6), min_size=m, max_size=m), min_size=1, max_size=6)
)


def _in_span(v, basis):
    """Exact rational solve against an echelon basis, then integrality check."""
    v = [Fraction(x) for x in v]
    for row in basis:
        col = next(i for i, x in enumerate(row) if x)
        q = v[col] / row[col]
        if q.denominator != 1:
            return False
        v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


@settings(max_examples=150, deadline=None)
@given(vectors)
def test_lattice_basis_spans(vs):
    B = lattice_basis(vs)
    assert all(_in_span(v, B) for v in vs)
    # basis rows are themselves Z-combinations: the lattice index is preserved for full rank squares
    if len(B) == len(vs[0]) == len(vs):
        assert abs(bareiss_det(B)) == abs(leibniz_det(vs))


@settings(max_examples=150, deadline=None)
@given(vectors)
def test_integer_kernel(rows):
    K = integer_kernel(rows)
    m = len(rows[0])
    for k in K:
        assert any(k)
        assert all(sum(k[i] * rows[i][j] for i in range(len(rows))) == 0 for j in range(m))
    rank = len(lattice_basis(rows))
    assert len(K) == len(rows) - rank
