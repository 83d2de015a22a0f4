"""The desk-scale verification corpus and sweep machinery.

The corpus is every built-in group of order <= 24 that the test battery
exercises: cyclic 1..24, dihedral 3..8, S3, S4, A4, Q8, Z/2+Z/4 and
Z/2+Z/2+Z/2.  A sweep enumerates all endomorphisms of each group and checks
R(phi) = S(phi) per pair (plus the divisor-sum congruences when n_max >= 1).
Pairs are independent, so sweeps parallelize across groups and merge
deterministically in corpus order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .chartable import character_table, fixed_points_count
from .groups import (
    FiniteGroup,
    abelian_group,
    cyclic_group,
    dihedral_group,
    enumerate_endomorphisms,
    group_from_permutations,
    quaternion_group,
    reidemeister_number,
    symmetric_group,
)
from .mobius import finite_group_congruence_suite


def alternating_group4() -> FiniteGroup:
    """A4 as the closure of two 3-cycles (not a named builtin)."""
    return group_from_permutations(4, [[1, 2, 0, 3], [0, 2, 3, 1]],
                                   name="alternating(4)")


def _builders():
    builders = {}
    for n in range(1, 25):
        builders[f"cyclic({n})"] = (cyclic_group, (n,), n)
    for n in range(3, 9):
        builders[f"dihedral({n})"] = (dihedral_group, (n,), 2 * n)
    builders["symmetric(3)"] = (symmetric_group, (3,), 6)
    builders["symmetric(4)"] = (symmetric_group, (4,), 24)
    builders["alternating(4)"] = (alternating_group4, (), 12)
    builders["quaternion8"] = (quaternion_group, (), 8)
    builders["abelian(2,4)"] = (abelian_group, ([2, 4],), 8)
    builders["abelian(2,2,2)"] = (abelian_group, ([2, 2, 2],), 8)
    return builders


_BUILDERS = _builders()


def corpus_names(max_order: int = 24) -> list[str]:
    return [name for name, (_, _, order) in _BUILDERS.items()
            if order <= max_order]


def corpus_group(name: str) -> FiniteGroup:
    fn, args, _ = _BUILDERS[name]
    return fn(*args)


def corpus_groups(max_order: int = 24) -> list[FiniteGroup]:
    return [corpus_group(name) for name in corpus_names(max_order)]


@dataclass(frozen=True)
class SweepRow:
    group: str
    endo_index: int
    image: tuple[int, ...]
    r: int
    s: int
    equal: bool
    congruence_ok: Optional[bool]      # None when congruences were skipped


def sweep_group(name: str, automorphisms_only: bool = False,
                n_max: int = 0) -> list[SweepRow]:
    """All (endomorphism, check) rows for one corpus group."""
    G = corpus_group(name)
    table = character_table(G)
    rows = []
    for idx, phi in enumerate(enumerate_endomorphisms(G, automorphisms_only)):
        r = reidemeister_number(G, phi)
        s = fixed_points_count(table, phi)
        cong = None
        if n_max >= 1:
            cong = finite_group_congruence_suite(G, phi, n_max).all_pass
        rows.append(SweepRow(group=name, endo_index=idx,
                             image=tuple(int(v) for v in phi.image),
                             r=r, s=s, equal=r == s, congruence_ok=cong))
    return rows


@dataclass(frozen=True)
class CorpusSummary:
    groups: int
    pairs: int
    burnside_failures: tuple[SweepRow, ...]
    congruence_failures: tuple[SweepRow, ...]

    @property
    def ok(self) -> bool:
        return not self.burnside_failures and not self.congruence_failures


def run_corpus(max_order: int = 24, automorphisms_only: bool = False,
               n_max: int = 0, jobs: int = 1,
               inject_failure: bool = False):
    """Sweep the whole corpus; returns (rows, CorpusSummary).

    Output order is canonical (corpus order, then endomorphism order)
    regardless of jobs.  inject_failure corrupts the first pair's S value,
    a negative control proving the failure path is live."""
    names = corpus_names(max_order)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(sweep_group, name, automorphisms_only, n_max)
                       for name in names]
            per_group = [f.result() for f in futures]
    else:
        per_group = [sweep_group(name, automorphisms_only, n_max)
                     for name in names]
    rows = [row for group_rows in per_group for row in group_rows]
    if inject_failure and rows:
        first = rows[0]
        rows[0] = SweepRow(group=first.group, endo_index=first.endo_index,
                           image=first.image, r=first.r, s=first.s + 1,
                           equal=False, congruence_ok=first.congruence_ok)
    summary = CorpusSummary(
        groups=len(names),
        pairs=len(rows),
        burnside_failures=tuple(row for row in rows if not row.equal),
        congruence_failures=tuple(row for row in rows
                                  if row.congruence_ok is False),
    )
    return rows, summary
