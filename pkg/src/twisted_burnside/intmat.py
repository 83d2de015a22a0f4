"""Exact integer matrices and Smith normal form.

Entries are Python ints, so powers of hyperbolic matrices and their
determinants never overflow.  The Smith routine tracks the unimodular
transforms U, V explicitly (smallest-absolute-value pivoting keeps
intermediate growth moderate) and re-verifies S = U*A*V by multiplication
before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        return IntegerMatrix(data)

    @staticmethod
    def identity(n: int) -> "IntegerMatrix":
        return IntegerMatrix(tuple(tuple(1 if i == j else 0 for j in range(n))
                                   for i in range(n)))

    @staticmethod
    def zeros(r: int, c: int) -> "IntegerMatrix":
        return IntegerMatrix(tuple((0,) * c for _ in range(r)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._same_shape(other)
        return IntegerMatrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                                   for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._same_shape(other)
        return IntegerMatrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                                   for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        cols_t = list(zip(*other.entries))
        return IntegerMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols_t)
            for row in self.entries))

    def scale(self, k: int) -> "IntegerMatrix":
        return IntegerMatrix(tuple(tuple(k * a for a in row) for row in self.entries))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.entries)))

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return IntegerMatrix(tuple(ra + rb for ra, rb in
                                   zip(self.entries, other.entries)))

    def power(self, n: int) -> "IntegerMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative power")
        result = IntegerMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return result

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.rows))

    def det(self) -> int:
        """Fraction-free Bareiss elimination; exact for any size."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        return f"IntegerMatrix({self.to_lists()})"


def unimodular_inverse(u: IntegerMatrix) -> IntegerMatrix:
    """Exact inverse of a matrix with determinant +/-1."""
    n = u.rows
    if not u.is_square:
        raise ValueError("inverse of a non-square matrix")
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(u.entries)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    inv_rows = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            v = aug[i][j]
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(v.numerator)
        inv_rows.append(row)
    return IntegerMatrix.from_rows(inv_rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """S = U * A * V with U, V unimodular and S in Smith normal form."""

    u: IntegerMatrix
    s: IntegerMatrix
    v: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        k = min(self.s.rows, self.s.cols)
        return tuple(self.s.entries[i][i] for i in range(k))

    @property
    def nonzero_invariants(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.nonzero_invariants)


def _swap_rows(s, u, a, b):
    if a != b:
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]


def _swap_cols(s, v, a, b):
    if a != b:
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]


def _add_row(s, u, dst, src, factor):
    """row dst += factor * row src."""
    s[dst] = [x + factor * y for x, y in zip(s[dst], s[src])]
    u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]


def _add_col(s, v, dst, src, factor):
    for row in s:
        row[dst] += factor * row[src]
    for row in v:
        row[dst] += factor * row[src]


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Exact Smith normal form with explicit transforms.

    Pivoting picks the smallest nonzero absolute value in the remaining
    block; a divisibility sweep folds non-divisible entries into the pivot
    row, so the diagonal satisfies s_i | s_(i+1) on exit.  U and V are
    products of elementary transvections, swaps, and row negations, so
    their determinants (tracked through the run) are +/-1 by construction;
    S = U*A*V is re-verified by multiplication before returning.
    """
    r, c = a.rows, a.cols
    s = a.to_lists()
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]
    det_u = det_v = 1
    for t in range(min(r, c)):
        piv, best = None, None
        for i in range(t, r):
            for j in range(t, c):
                val = abs(s[i][j])
                if val and (best is None or val < best):
                    best, piv = val, (i, j)
        if piv is None:
            break
        if piv[0] != t:
            _swap_rows(s, u, t, piv[0])
            det_u = -det_u
        if piv[1] != t:
            _swap_cols(s, v, t, piv[1])
            det_v = -det_v
        while True:
            progress = False
            for i in range(t + 1, r):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    if q:
                        _add_row(s, u, i, t, -q)
                    if s[i][t]:
                        _swap_rows(s, u, t, i)
                        det_u = -det_u
                        progress = True
            for j in range(t + 1, c):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    if q:
                        _add_col(s, v, j, t, -q)
                    if s[t][j]:
                        _swap_cols(s, v, t, j)
                        det_v = -det_v
                        progress = True
            if progress:
                continue
            pivot = s[t][t]
            bad = None
            for i in range(t + 1, r):
                if any(x % pivot for x in s[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            _add_row(s, u, t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
            det_u = -det_u

    _verify_smith(a.entries, u, s, v, det_u, det_v)
    return SmithDecomposition(u=IntegerMatrix.from_rows(u),
                              s=IntegerMatrix.from_rows(s),
                              v=IntegerMatrix.from_rows(v))


def _verify_smith(a, u, s, v, det_u, det_v):
    rows = len(s)
    cols = len(s[0]) if s else 0
    # U*A*V == S, multiplied out on plain lists
    ua = [[sum(ur[k] * a[k][j] for k in range(rows)) for j in range(cols)]
          for ur in u]
    for i in range(rows):
        row = ua[i]
        srow = s[i]
        for j in range(cols):
            if sum(row[k] * v[k][j] for k in range(cols)) != srow[j]:
                raise AssertionError("Smith verification failed: S != U*A*V")
    for i in range(rows):
        for j in range(cols):
            if i != j and s[i][j] != 0:
                raise AssertionError("Smith verification failed: S not diagonal")
    diag = [s[i][i] for i in range(min(rows, cols))]
    for d in diag:
        if d < 0:
            raise AssertionError("Smith verification failed: negative diagonal")
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            raise AssertionError("Smith verification failed: zero before nonzero")
        if x != 0 and y % x != 0:
            raise AssertionError("Smith verification failed: divisibility chain")
    if abs(det_u) != 1 or abs(det_v) != 1:
        raise AssertionError("Smith verification failed: transform not unimodular")
