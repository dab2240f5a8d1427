"""Integer lattice helpers: echelon bases, integer kernels, fraction-free determinants."""

from __future__ import annotations

from typing import Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    M = [list(row) for row in matrix]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


class EchelonBasis:
    """Row-echelon Z-basis of the lattice spanned by inserted vectors.

    Only the first ``width`` coordinates drive the elimination; any trailing
    coordinates ride along, which is how kernels are tracked.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, list[int]] = {}
        self.null: list[list[int]] = []

    def insert(self, v: Sequence[int]) -> None:
        v = list(v)
        for col in range(self.width):
            if v[col] == 0:
                continue
            row = self.pivots.get(col)
            if row is None:
                if v[col] < 0:
                    v = [-x for x in v]
                self.pivots[col] = v
                self._reduce_above(col)
                return
            g, s, t = xgcd(row[col], v[col])
            a, b = row[col] // g, v[col] // g
            new_row = [s * x + t * y for x, y in zip(row, v)]
            v = [a * y - b * x for x, y in zip(row, v)]
            self.pivots[col] = new_row
            self._reduce_above(col)
        self.null.append(v)

    def _reduce_above(self, col: int) -> None:
        piv = self.pivots[col]
        for c, row in self.pivots.items():
            if c < col and row[col]:
                q = row[col] // piv[col]
                if q:
                    self.pivots[c] = [x - q * y for x, y in zip(row, piv)]

    def rows(self) -> list[list[int]]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def lattice_basis(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    if not vectors:
        return []
    eb = EchelonBasis(len(vectors[0]))
    for v in vectors:
        eb.insert(v)
    return eb.rows()


def integer_kernel(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Z-basis of {x in Z^r : sum_i x_i rows[i] = 0}."""
    r = len(rows)
    if r == 0:
        return []
    m = len(rows[0])
    eb = EchelonBasis(m)
    for i, row in enumerate(rows):
        eb.insert(list(row) + [int(i == j) for j in range(r)])
    return lattice_basis([v[m:] for v in eb.null]) if eb.null else []
