"""Exact irreducible character tables and the dual action on them.

Tables are computed by the modular method: simultaneous eigenvectors of the
class-algebra structure-constant matrices over F_p (p prime, p = 1 mod e for
e the group exponent, p > 2*sqrt(|G|)), followed by a discrete-Fourier lift
of eigenvalue multiplicities to exact values in Q(zeta_e).  Both
orthogonality relations are verified exactly before a table is returned, so
a bug upstream surfaces as LiftFailure rather than as wrong fixed-point
counts.

Characters stand in for points of the unitary dual: two irreducible
representations are equivalent iff their characters are equal, which is
decidable exactly, so the dual map rho -> rho . phi is classified per
irreducible as fixed, mapped to another irreducible, or reducible with an
exact multiplicity vector.  S(phi) counts the fixed ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Union

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import LiftFailure, OrderLimitExceeded
from . import config
from .groups import (FiniteGroup, GroupMap, identity_map, same_group,
                     twisted_classes)


@dataclass(frozen=True, eq=False)
class ConjugacyData:
    """Ordinary conjugacy classes, ordered by least element index."""

    class_of: np.ndarray            # (order,) int32, element -> class index
    reps: tuple[int, ...]           # least element of each class
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]  # class index of the inverse class
    exponent: int                   # lcm of element orders

    @property
    def n_classes(self) -> int:
        return len(self.reps)


@lru_cache(maxsize=None)
def conjugacy_data(G: FiniteGroup) -> ConjugacyData:
    part = twisted_classes(G, identity_map(G))
    inverse_class = tuple(int(part.class_of[G.inv[rep]]) for rep in part.class_reps)
    exponent = 1
    for rep in part.class_reps:
        exponent = math.lcm(exponent, G.element_order(rep))
    return ConjugacyData(class_of=part.class_of, reps=part.class_reps,
                         sizes=part.class_sizes, inverse_class=inverse_class,
                         exponent=exponent)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """All irreducible characters of a finite group, with exact values.

    chars[i][k] is the value of the i-th character on the k-th conjugacy
    class.  Rows are sorted by degree, then lexicographically on values, so
    tables are byte-for-byte reproducible.
    """

    group: FiniteGroup
    classes: ConjugacyData
    chars: tuple[tuple[Cyclotomic, ...], ...]
    degrees: tuple[int, ...]

    @property
    def n_irreducibles(self) -> int:
        return len(self.chars)

    @cached_property
    def _conj_rows(self) -> tuple[tuple[Cyclotomic, ...], ...]:
        return tuple(tuple(v.conj() for v in row) for row in self.chars)

    @cached_property
    def _row_index(self) -> dict:
        return {tuple(v.key() for v in row): i
                for i, row in enumerate(self.chars)}

    def inner_product(self, u, v_conj_row_index: int) -> Cyclotomic:
        """<u, chi_j> = (1/|G|) sum_k |C_k| u[k] conj(chi_j[k]), exact."""
        conj_row = self._conj_rows[v_conj_row_index]
        acc = Cyclotomic.zero(1)
        for size, a, b in zip(self.classes.sizes, u, conj_row):
            acc = acc + size * (a * b)
        return acc / self.group.order

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group.order,
            "degrees": list(self.degrees),
            "class_reps": list(self.classes.reps),
            "class_sizes": list(self.classes.sizes),
            "values": [
                [{"order": v.order, "coeffs": [str(c) for c in v.coeffs]}
                 for v in row]
                for row in self.chars
            ],
        }


# ---------------------------------------------------------------------------
# Modular arithmetic helpers

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p*p > 4*order."""
    k = 1
    while True:
        p = k * exponent + 1
        if p * p > 4 * order and p > 2 and _is_prime(p):
            return p
        k += 1


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise LiftFailure(f"no primitive root mod {p}")


def _sqrt_mod(a: int, p: int) -> int:
    """Tonelli-Shanks; raises LiftFailure for non-residues."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise LiftFailure(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def _rref_mod(M: np.ndarray, p: int):
    M = M.copy() % p
    rows, cols = M.shape
    piv_cols = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        M = (M - np.outer(col, M[r])) % p
        piv_cols.append(c)
        r += 1
    return M, piv_cols


def _nullspace_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning ker(M) over F_p."""
    R, piv = _rref_mod(M, p)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for i, f in enumerate(free):
        basis[f, i] = 1
        for row, c in enumerate(piv):
            basis[c, i] = (-int(R[row, f])) % p
    return basis


def _restriction_mod(M: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """R with M @ B = B @ R (B full column rank, columns span an
    M-invariant subspace)."""
    d = B.shape[1]
    A = np.concatenate([B, (M @ B) % p], axis=1)
    R, piv = _rref_mod(A, p)
    if piv[:d] != list(range(d)):
        raise LiftFailure("restriction basis is not full column rank")
    return R[:d, d:]


# ---------------------------------------------------------------------------
# The table computation

def _class_matrices(G: FiniteGroup, cd: ConjugacyData) -> np.ndarray:
    """a[i, j, k] = #{x in C_i : x^-1 z_k in C_j} for class reps z_k."""
    r = cd.n_classes
    n = G.order
    class_of = cd.class_of.astype(np.int64)
    a = np.empty((r, r, r), dtype=np.int64)
    for k, z in enumerate(cd.reps):
        j_vec = class_of[G.mul[G.inv, z]]
        flat = class_of * r + j_vec
        a[:, :, k] = np.bincount(flat, minlength=r * r).reshape(r, r)
    return a


def _common_eigenvectors(mats: np.ndarray, idc: int, p: int) -> np.ndarray:
    """Columns: one common eigenvector per irreducible character, over F_p."""
    r = mats.shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for mi in range(r):
        if mi == idc:
            continue
        if all(B.shape[1] == 1 for B in spaces):
            break
        M = mats[mi] % p
        nxt = []
        for B in spaces:
            d = B.shape[1]
            if d == 1:
                nxt.append(B)
                continue
            R = _restriction_mod(M, B, p)
            found = 0
            for lam in range(p):
                if found == d:
                    break
                NS = _nullspace_mod((R - lam * np.eye(d, dtype=np.int64)) % p, p)
                if NS.shape[1]:
                    nxt.append((B @ NS) % p)
                    found += NS.shape[1]
            if found != d:
                raise LiftFailure("class matrix is not diagonalizable mod p")
        spaces = nxt
    if len(spaces) != r or any(B.shape[1] != 1 for B in spaces):
        raise LiftFailure("could not split the class algebra into "
                          "one-dimensional common eigenspaces")
    return np.concatenate(spaces, axis=1)


def _character_table_uncached(G: FiniteGroup) -> CharacterTable:
    cap = config.order_cap()
    if G.order > cap:
        raise OrderLimitExceeded(G.order, cap)
    cd = conjugacy_data(G)
    r = cd.n_classes
    n = G.order
    e = cd.exponent
    p = _dixon_prime(n, e)
    idc = int(cd.class_of[G.identity])

    mats = _class_matrices(G, cd)
    W = _common_eigenvectors(mats, idc, p)

    size_inv = [pow(s, p - 2, p) for s in cd.sizes]
    x = pow(_primitive_root(p), (p - 1) // e, p)
    x_inv_pow = [pow(x, (e - 1) * j, p) for j in range(e)]  # x^(-j) table

    # power map: pm[k][t] = class of reps[k]**t
    pm = []
    for rep in cd.reps:
        row, cur = [], G.identity
        for _ in range(e):
            row.append(int(cd.class_of[cur]))
            cur = int(G.mul[cur, rep])
        pm.append(row)

    rows = []
    for col in range(r):
        w = [int(v) % p for v in W[:, col]]
        if w[idc] == 0:
            raise LiftFailure("eigenvector vanishes on the identity class")
        scale = pow(w[idc], p - 2, p)
        w = [v * scale % p for v in w]
        s = 0
        for k in range(r):
            s = (s + w[k] * w[cd.inverse_class[k]] * size_inv[k]) % p
        if s == 0:
            raise LiftFailure("degree normalization sum vanished")
        d2 = n * pow(s, p - 2, p) % p
        root = _sqrt_mod(d2, p)
        degree = min(root, p - root)
        if degree == 0 or degree * degree > n:
            raise LiftFailure(f"implausible degree {degree}")
        chi_p = [degree * w[k] * size_inv[k] % p for k in range(r)]

        e_inv = pow(e, p - 2, p)
        values = []
        for k in range(r):
            mults = []
            for i in range(e):
                acc = 0
                for t in range(e):
                    acc += chi_p[pm[k][t]] * x_inv_pow[(i * t) % e]
                mults.append(acc * e_inv % p)
            if sum(mults) != degree:
                raise LiftFailure("eigenvalue multiplicities do not sum "
                                  "to the degree")
            val = Cyclotomic.zero(e)
            for i, m in enumerate(mults):
                if m:
                    val = val + m * Cyclotomic.root_of_unity(e, i)
            values.append(val)
        rows.append((degree, tuple(values)))

    rows.sort(key=lambda dr: (dr[0], tuple(v.key() for v in dr[1])))
    degrees = tuple(d for d, _ in rows)
    chars = tuple(vals for _, vals in rows)

    if sum(d * d for d in degrees) != n:
        raise LiftFailure("sum of squared degrees differs from the group order")
    if any(n % d != 0 for d in degrees):
        raise LiftFailure("a degree does not divide the group order")
    table = CharacterTable(group=G, classes=cd, chars=chars, degrees=degrees)
    _verify_orthogonality(table)
    return table


def _verify_orthogonality(table: CharacterTable) -> None:
    cd = table.classes
    n = table.group.order
    r = cd.n_classes
    chars = table.chars
    conj = table._conj_rows
    for i in range(r):
        for j in range(i, r):
            acc = Cyclotomic.zero(1)
            for k in range(r):
                acc = acc + cd.sizes[k] * (chars[i][k] * conj[j][k])
            expect = n if i == j else 0
            if acc != expect:
                raise LiftFailure(f"row orthogonality failed at ({i}, {j})")
    for k in range(r):
        for l in range(k, r):
            acc = Cyclotomic.zero(1)
            for i in range(r):
                acc = acc + chars[i][k] * conj[i][l]
            expect = n // cd.sizes[k] if k == l else 0
            if acc != expect:
                raise LiftFailure(f"column orthogonality failed at ({k}, {l})")


character_table = lru_cache(maxsize=None)(_character_table_uncached)
character_table.__doc__ = """Exact character table of G (cached per group object)."""


# ---------------------------------------------------------------------------
# Dual action

@dataclass(frozen=True)
class FixedBy:
    index: int


@dataclass(frozen=True)
class MappedTo:
    index: int


@dataclass(frozen=True)
class Reducible:
    multiplicities: tuple[int, ...]


DualFate = Union[FixedBy, MappedTo, Reducible]


@dataclass(frozen=True, eq=False)
class DualAction:
    """Classification of chi -> chi . phi for every irreducible chi."""

    results: tuple[DualFate, ...]

    @property
    def fixed_count(self) -> int:
        return sum(1 for f in self.results if isinstance(f, FixedBy))

    @property
    def has_reducible(self) -> bool:
        return any(isinstance(f, Reducible) for f in self.results)


def dual_action(table: CharacterTable, phi: GroupMap) -> DualAction:
    """Compose every irreducible character with phi and classify the result.

    chi . phi is again a class function; it is decomposed by exact inner
    products, so non-bijective endomorphisms (where it can be reducible)
    come for free.
    """
    G = table.group
    if not phi.is_endomorphism or not same_group(phi.source, G):
        raise ValueError("phi must be an endomorphism of the table's group")
    cd = table.classes
    target_class = [int(cd.class_of[phi.image[rep]]) for rep in cd.reps]
    results: list[DualFate] = []
    for i, row in enumerate(table.chars):
        u = tuple(row[tc] for tc in target_class)
        hit = table._row_index.get(tuple(v.key() for v in u))
        if hit is not None:
            results.append(FixedBy(i) if hit == i else MappedTo(hit))
            continue
        mults = []
        for j in range(table.n_irreducibles):
            m = table.inner_product(u, j).as_integer()
            if m < 0:
                raise LiftFailure("negative multiplicity in dual action")
            mults.append(m)
        for k in range(cd.n_classes):
            acc = Cyclotomic.zero(1)
            for j, m in enumerate(mults):
                if m:
                    acc = acc + m * table.chars[j][k]
            if acc != u[k]:
                raise LiftFailure("multiplicity vector does not reconstruct "
                                  "the composed character")
        results.append(Reducible(tuple(mults)))
    return DualAction(tuple(results))


def fixed_points_count(table: CharacterTable, phi: GroupMap) -> int:
    """S(phi): the number of irreducibles with chi . phi = chi exactly."""
    return dual_action(table, phi).fixed_count


@dataclass(frozen=True)
class BurnsideReport:
    r: int
    s: int
    equal: bool


def burnside_check(G: FiniteGroup, phi: GroupMap) -> BurnsideReport:
    """Compute R(phi) by orbit counting and S(phi) on the character side,
    independently, and compare.

    Inequality on a finite group is reported, never corrected: it would
    indicate an implementation defect.
    """
    from .groups import reidemeister_number
    r = reidemeister_number(G, phi)
    s = fixed_points_count(character_table(G), phi)
    return BurnsideReport(r=r, s=s, equal=r == s)
