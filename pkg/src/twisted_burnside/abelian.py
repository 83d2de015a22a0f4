"""Finitely generated abelian groups and the cokernel formula.

For an endomorphism phi of an abelian group G the twisted conjugacy class
of the identity is the subgroup H = im(1 - phi) and the other classes are
its cosets, so R(phi) = [G : im(1 - phi)].  The index is computed exactly
as the product of nonzero invariant factors of the presentation matrix of
the quotient, with Infinite as a first-class result when the quotient has
positive rank.  The finiteness criterion det(I - A_free) != 0 (1 not in the
spectrum of the free-part restriction) is computed independently and
cross-checked on every call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterator, Union

import numpy as np

from .errors import InfiniteClasses, NotAHomomorphism, SearchLimitExceeded
from .infinite import INFINITE, InfiniteType, is_infinite
from .intmat import IntegerMatrix, smith_normal_form, unimodular_inverse

ReidemeisterValue = Union[int, InfiniteType]


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/d_1 + ... + Z/d_t with the divisibility chain d_i | d_(i+1).

    Generators are indexed free part first, then torsion generators in
    chain order."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion invariant {d} must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain, "
                    f"got {a} before {b}")

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> ReidemeisterValue:
        return prod(self.torsion) if self.is_finite else INFINITE

    @cached_property
    def relation_columns(self) -> IntegerMatrix:
        """ngens x t matrix whose columns span the relation lattice."""
        g, t = self.ngens, len(self.torsion)
        rows = [[0] * t for _ in range(g)]
        for j, d in enumerate(self.torsion):
            rows[self.rank + j][j] = d
        return IntegerMatrix.from_rows(rows)

    def __repr__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return "FgAbelianGroup(" + (" + ".join(parts) or "0") + ")"


@dataclass(frozen=True, eq=False)
class AbelianEndo:
    """An endomorphism given by its matrix on the generators (columns are
    generator images).  Construct through ``abelian_endo``."""

    group: FgAbelianGroup
    matrix: IntegerMatrix


def abelian_endo(group: FgAbelianGroup, matrix) -> AbelianEndo:
    """Validate a generator matrix against the relations of the group.

    A torsion generator of order d_j must map to an element killed by d_j:
    the free coordinates of column rank+j must vanish and the torsion
    coordinate in a row of order d_i must be divisible by d_i / gcd(d_i, d_j).
    """
    if not isinstance(matrix, IntegerMatrix):
        matrix = IntegerMatrix.from_rows(matrix)
    g = group.ngens
    if matrix.rows != g or matrix.cols != g:
        raise ValueError(f"matrix must be {g}x{g} for this group")
    r = group.rank
    for j, dj in enumerate(group.torsion):
        col = r + j
        for i in range(r):
            if matrix.entries[i][col] != 0:
                raise NotAHomomorphism(
                    i, col, f"torsion generator {col} maps onto the free part")
        for i, di in enumerate(group.torsion):
            need = di // gcd(di, dj)
            if matrix.entries[r + i][col] % need != 0:
                raise NotAHomomorphism(
                    r + i, col,
                    f"entry must be divisible by {need} to respect the "
                    f"relation {dj}*g_{col} = 0")
    return AbelianEndo(group=group, matrix=matrix)


def cokernel_order(group: FgAbelianGroup, m: IntegerMatrix) -> ReidemeisterValue:
    """Order of G / im(m), where the columns of m are in generator
    coordinates; Infinite when the quotient has positive rank.

    The quotient is presented by the columns of m stacked with the relation
    columns of the group; its order is the product of the nonzero invariant
    factors when the presentation has full rank."""
    g = group.ngens
    if m.rows != g:
        raise ValueError(f"matrix must have {g} rows")
    pres = m.hstack(group.relation_columns) if group.torsion else m
    dec = smith_normal_form(pres)
    if dec.rank < g:
        return INFINITE
    return prod(dec.nonzero_invariants)


def _free_block(endo: AbelianEndo) -> IntegerMatrix:
    r = endo.group.rank
    return IntegerMatrix.from_rows(
        [row[:r] for row in endo.matrix.entries[:r]])


def reidemeister_abelian(group: FgAbelianGroup,
                         endo: AbelianEndo) -> ReidemeisterValue:
    """R(phi) = [G : im(1 - phi)], or Infinite.

    Infinite exactly when det(I - A_free) = 0; both criteria are computed
    and cross-checked."""
    one_minus = IntegerMatrix.identity(group.ngens) - endo.matrix
    value = cokernel_order(group, one_minus)
    det_free = (IntegerMatrix.identity(group.rank) - _free_block(endo)).det()
    if (det_free == 0) != is_infinite(value):
        raise AssertionError(
            "finiteness criteria disagree: cokernel vs free-part spectrum")
    return value


def reidemeister_abelian_sequence(group: FgAbelianGroup, endo: AbelianEndo,
                                  n_max: int) -> list[ReidemeisterValue]:
    """R(phi^n) for n = 1..n_max, with exact matrix powers."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    power = endo.matrix
    for _ in range(n_max):
        out.append(reidemeister_abelian(group, AbelianEndo(group, power)))
        power = power @ endo.matrix
    return out


def lattice_coset_reps(m: IntegerMatrix) -> list[tuple[int, ...]]:
    """Coset representatives of the column lattice of m inside Z^rows.

    Requires the quotient to be finite (full rank); representatives are
    enumerated through the Smith basis, so there are exactly
    prod(invariant factors) = |det| of them for square m."""
    dec = smith_normal_form(m)
    g = m.rows
    if dec.rank < g:
        raise InfiniteClasses("the quotient by the lattice is infinite")
    u_inv = unimodular_inverse(dec.u)
    reps = []
    for combo in itertools.product(*(range(d) for d in dec.diagonal)):
        vec = tuple(sum(u_inv.entries[i][k] * combo[k] for k in range(g))
                    for i in range(g))
        reps.append(vec)
    return reps


def twisted_class_reps_abelian(group: FgAbelianGroup,
                               endo: AbelianEndo) -> list[tuple[int, ...]]:
    """One representative per coset of im(1 - phi), via the Smith basis.

    Torsion coordinates are reduced modulo their invariant factor; the
    result is sorted lexicographically."""
    value = reidemeister_abelian(group, endo)
    if is_infinite(value):
        raise InfiniteClasses("R(phi) is infinite; no finite representative set")
    one_minus = IntegerMatrix.identity(group.ngens) - endo.matrix
    pres = (one_minus.hstack(group.relation_columns)
            if group.torsion else one_minus)
    dec = smith_normal_form(pres)
    u_inv = unimodular_inverse(dec.u)
    g = group.ngens
    r = group.rank
    reps = set()
    for combo in itertools.product(*(range(d) for d in dec.diagonal[:g])):
        vec = [sum(u_inv.entries[i][k] * combo[k] for k in range(g))
               for i in range(g)]
        for j, d in enumerate(group.torsion):
            vec[r + j] %= d
        reps.add(tuple(vec))
    if len(reps) != value:
        raise AssertionError("representative count does not match R(phi)")
    return sorted(reps)


# ---------------------------------------------------------------------------
# Bridges to the element-level representation (finite groups only)

def enumerate_abelian_endos(group: FgAbelianGroup,
                            cap: int = 500_000) -> Iterator[AbelianEndo]:
    """All endomorphisms of a finite abelian group, by valid matrix columns.

    The count is prod over (i, j) of gcd(d_i, d_j); raises
    SearchLimitExceeded when that exceeds cap."""
    if not group.is_finite:
        raise ValueError("endomorphism enumeration requires a finite group")
    ds = group.torsion
    t = len(ds)
    total = prod(gcd(di, dj) for di in ds for dj in ds) if t else 1
    if total > cap:
        raise SearchLimitExceeded(
            f"{total} endomorphisms exceed the cap {cap}")
    if t == 0:
        yield AbelianEndo(group, IntegerMatrix.identity(0))
        return
    entry_choices = [[list(range(0, di, di // gcd(di, dj)))
                      for dj in ds] for di in ds]
    row_choices = [list(itertools.product(*per_row)) for per_row in entry_choices]
    for rows in itertools.product(*row_choices):
        yield AbelianEndo(group, IntegerMatrix.from_rows(rows))


def count_abelian_endos(group: FgAbelianGroup) -> int:
    return prod(gcd(di, dj) for di in group.torsion for dj in group.torsion)


def as_finite_group(group: FgAbelianGroup):
    """The same group as an element-indexed FiniteGroup (rank 0 only),
    with the mixed-radix indexing of groups.abelian_group."""
    from .groups import abelian_group
    if not group.is_finite:
        raise ValueError("only finite abelian groups have a Cayley table")
    return abelian_group(group.torsion)


def endo_image_table(group: FgAbelianGroup, endo: AbelianEndo) -> np.ndarray:
    """Total element image map of the endomorphism under the mixed-radix
    element indexing (rank 0 only)."""
    if not group.is_finite:
        raise ValueError("element tables require a finite group")
    ds = list(group.torsion)
    if not ds:
        return np.zeros(1, dtype=np.int32)
    coords = np.indices(ds).reshape(len(ds), -1).T        # (n, t)
    mat = np.array(endo.matrix.to_lists(), dtype=np.int64)
    imgs = coords @ mat.T
    imgs %= np.array(ds, dtype=np.int64)[None, :]
    weights = np.cumprod([1] + ds[::-1][:-1])[::-1]
    return (imgs @ weights).astype(np.int32)
