"""Mobius inversion for Reidemeister sequences, and torus maps.

When all R(phi^n) are finite they count fixed points of iterates of the
dual map, so P_n = sum over d | n of mu(d) R(phi^(n/d)) counts dual points
of least period n and must be a nonnegative multiple of n.  This module
computes the P_n and checks those congruences; an Infinite entry poisons
only the specific n that need it (maps with some eigenvalue a root of
unity legitimately produce mixed finite/infinite sequences).

For a torus map f with induced matrix A on the fundamental group,
R(f^n) = |det(I - A^n)|, Infinite when the determinant vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import InfiniteEntry
from .groups import FiniteGroup, GroupMap, reidemeister_number
from .infinite import INFINITE, InfiniteType, is_infinite
from .intmat import IntegerMatrix

SeqValue = Union[int, InfiniteType]


def mobius(d: int) -> int:
    """mu(d) by trial factorization: 1 for d = 1, 0 unless squarefree,
    else (-1)^(number of prime factors)."""
    if d < 1:
        raise ValueError("mobius is defined on positive integers")
    sign = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            sign = -sign
        p += 1
    if d > 1:
        sign = -sign
    return sign


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True, eq=False)
class ReidemeisterSequence:
    """R(phi^n) for n = 1..n_max; entries may be Infinite."""

    values: tuple[SeqValue, ...]
    source: str = ""

    @property
    def n_max(self) -> int:
        return len(self.values)

    def value(self, n: int) -> SeqValue:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n = {n} outside 1..{self.n_max}")
        return self.values[n - 1]


def sequence_from_values(values: Sequence[SeqValue],
                         source: str = "") -> ReidemeisterSequence:
    vals = []
    for v in values:
        if is_infinite(v):
            vals.append(INFINITE)
        else:
            v = int(v)
            if v < 1:
                raise ValueError("Reidemeister numbers are positive")
            vals.append(v)
    return ReidemeisterSequence(values=tuple(vals), source=source)


def _periodic_count(seq: ReidemeisterSequence, n: int) -> int:
    """P_n = sum over d | n of mu(d) R(phi^(n/d)); raises InfiniteEntry
    when a needed value (one with mu(d) != 0) is Infinite."""
    total = 0
    for d in divisors(n):
        mu = mobius(d)
        if mu == 0:
            continue
        val = seq.value(n // d)
        if is_infinite(val):
            raise InfiniteEntry(n // d)
        total += mu * val
    return total


def periodic_class_counts(seq: ReidemeisterSequence) -> list[int]:
    """All P_n for n = 1..n_max; every needed value must be finite."""
    return [_periodic_count(seq, n) for n in range(1, seq.n_max + 1)]


@dataclass(frozen=True)
class CongruenceLine:
    n: int
    p_n: Optional[int]          # None when poisoned by an Infinite entry
    passes: Optional[bool]

    @property
    def skipped(self) -> bool:
        return self.p_n is None


@dataclass(frozen=True, eq=False)
class CongruenceReport:
    lines: tuple[CongruenceLine, ...]
    source: str = ""

    @property
    def all_pass(self) -> bool:
        return all(line.passes for line in self.lines if not line.skipped)

    @property
    def checked(self) -> int:
        return sum(1 for line in self.lines if not line.skipped)


def congruence_check(seq: ReidemeisterSequence) -> CongruenceReport:
    """Verdicts P_n >= 0 and n | P_n for each n; Infinite entries skip
    exactly the n whose sum needs them."""
    lines = []
    for n in range(1, seq.n_max + 1):
        try:
            p_n = _periodic_count(seq, n)
        except InfiniteEntry:
            lines.append(CongruenceLine(n=n, p_n=None, passes=None))
            continue
        lines.append(CongruenceLine(n=n, p_n=p_n,
                                    passes=p_n >= 0 and p_n % n == 0))
    return CongruenceReport(lines=tuple(lines), source=seq.source)


def torus_map_reidemeister(a: IntegerMatrix, n_max: int) -> ReidemeisterSequence:
    """R(f^n) = |det(I - A^n)| for the torus map with induced matrix A."""
    if not isinstance(a, IntegerMatrix):
        a = IntegerMatrix.from_rows(a)
    if not a.is_square:
        raise ValueError("A must be square")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    eye = IntegerMatrix.identity(a.rows)
    values: list[SeqValue] = []
    power = a
    for _ in range(n_max):
        d = (eye - power).det()
        values.append(INFINITE if d == 0 else abs(d))
        power = power @ a
    return ReidemeisterSequence(values=tuple(values),
                                source=f"torus A={a.to_lists()}")


def reidemeister_sequence(G: FiniteGroup, phi: GroupMap,
                          n_max: int) -> ReidemeisterSequence:
    """R(phi^n) on a finite group by exhaustive orbit counting per iterate."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    values = []
    image = phi.image
    for _ in range(n_max):
        it = GroupMap(source=G, target=G, image=image,
                      is_bijective=phi.is_bijective)
        values.append(reidemeister_number(G, it))
        image = phi.image[image]
    return ReidemeisterSequence(values=tuple(values),
                                source=f"finite group {G.name}")


def finite_group_congruence_suite(G: FiniteGroup, phi: GroupMap,
                                  n_max: int) -> CongruenceReport:
    """Congruence report for the sequence R(phi^n) on a finite group,
    where every entry is finite by construction."""
    return congruence_check(reidemeister_sequence(G, phi, n_max))
