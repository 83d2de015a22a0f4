"""Finite groups as index tables, their endomorphisms, and twisted conjugacy.

Elements of a group of order n are the indices 0..n-1.  A group is a Cayley
table plus derived identity and inverse tables; everything is validated at
construction (fully below order 512, by deterministic sampling above, with a
flag to force the full audit).  All values are immutable after construction
and safe to share across threads; the operations here are pure functions.

The central operation is ``twisted_classes``: the orbit partition of G under
g . x = g x phi(g)^-1, computed by union-find seeded from a generating set
(the action law (gh) . x = g . (h . x) makes generator seeding sufficient;
the naive all-element scan is kept in the test suite as an oracle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from . import config, kernels
from .errors import (
    NoIdentity,
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotGenerating,
    OrderLimitExceeded,
    SearchLimitExceeded,
    UnknownName,
)


def _frozen(arr, dtype=np.int32):
    out = np.ascontiguousarray(arr, dtype=dtype)
    out.setflags(write=False)
    return out


def same_group(a: "FiniteGroup", b: "FiniteGroup") -> bool:
    """Structural equality: identical multiplication tables (element
    indexing included)."""
    return a is b or (a.order == b.order and np.array_equal(a.mul, b.mul))


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group on indices 0..order-1 with exact table multiplication."""

    order: int
    mul: np.ndarray          # (order, order) int32, mul[a, b] = a*b
    identity: int
    inv: np.ndarray          # (order,) int32
    labels: Optional[tuple[str, ...]] = None
    name: str = "G"

    @property
    def elements(self) -> range:
        return range(self.order)

    def multiply(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(int(self.inv[a]), -k)
        acc = self.identity
        for _ in range(k):
            acc = int(self.mul[acc, a])
        return acc

    def element_order(self, a: int) -> int:
        k, cur = 1, a
        while cur != self.identity:
            cur = int(self.mul[cur, a])
            k += 1
        return k

    @cached_property
    def generating_set(self) -> tuple[int, ...]:
        """Greedy small generating set: repeatedly adjoin the least element
        outside the current closure."""
        if self.order == 1:
            return ()
        gens: list[int] = []
        closed = np.zeros(self.order, dtype=bool)
        closed[self.identity] = True
        for x in range(self.order):
            if closed[x]:
                continue
            gens.append(x)
            closed = _closure_mask(self.mul, self.identity, gens)
            if closed.all():
                break
        return tuple(gens)

    @cached_property
    def _bfs_tree(self):
        return _spanning_tree(self, self.generating_set)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True, eq=False)
class GroupMap:
    """A homomorphism between finite groups as a total index map.

    Construct through the factory functions (``endo_from_images``,
    ``endo_from_image_map``, ``identity_map``, ``enumerate_endomorphisms``),
    which validate the homomorphism law; the constructor itself trusts its
    arguments.
    """

    source: FiniteGroup
    target: FiniteGroup
    image: np.ndarray        # (source.order,) int32
    is_bijective: bool

    def apply(self, x: int) -> int:
        return int(self.image[x])

    @property
    def is_endomorphism(self) -> bool:
        return self.source is self.target

    def __repr__(self):
        kind = "automorphism" if self.is_bijective else "homomorphism"
        return f"GroupMap({kind} of {self.source.name}, {list(self.image)})"


@dataclass(frozen=True, eq=False)
class TwistedPartition:
    """Partition of a group into twisted conjugacy classes.

    ``count`` is the Reidemeister number R(phi).  Classes are indexed in
    order of their least element, and each representative is that least
    element.
    """

    class_of: np.ndarray          # (order,) int32, element -> class index
    class_reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    count: int


# ---------------------------------------------------------------------------
# Cayley-table validation

def _check_table_shape(table) -> np.ndarray:
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"Cayley table must be square and nonempty, "
                         f"got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("Cayley table entries must be integers")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("Cayley table entries must lie in 0..order-1")
    return _frozen(arr)


def _audit_associativity(mul: np.ndarray, full: bool) -> None:
    n = mul.shape[0]
    if full:
        witness = kernels.first_nonassociative(mul)
        if witness[0] >= 0:
            raise NotAssociative(*map(int, witness))
        return
    rng = np.random.default_rng(config.AUDIT_SEED)
    m = config.AUDIT_SAMPLE_COUNT
    a, b, c = rng.integers(0, n, size=(3, m))
    bad = np.nonzero(mul[mul[a, b], c] != mul[a, mul[b, c]])[0]
    if bad.size:
        i = int(bad[0])
        raise NotAssociative(int(a[i]), int(b[i]), int(c[i]))


def _derive_identity_inverse(mul: np.ndarray) -> tuple[int, np.ndarray]:
    n = mul.shape[0]
    base = np.arange(n, dtype=mul.dtype)
    rows = np.nonzero((mul == base[None, :]).all(axis=1))[0]
    identity = -1
    for e in rows:
        if (mul[:, e] == base).all():
            identity = int(e)
            break
    if identity < 0:
        raise NoIdentity()
    right = mul == identity
    has_right = right.any(axis=1)
    if not has_right.all():
        raise NoInverse(int(np.nonzero(~has_right)[0][0]))
    inv = np.argmax(right, axis=1)
    two_sided = mul[inv, base] == identity
    if not two_sided.all():
        raise NoInverse(int(np.nonzero(~two_sided)[0][0]))
    return identity, _frozen(inv)


def group_from_cayley(table, labels=None, *, full_audit: Optional[bool] = None,
                      name: str = "cayley") -> FiniteGroup:
    """Build and validate a group from a raw multiplication table.

    full_audit=None checks all order**3 triples below order 512 and a
    deterministic 2**16 sample above; True forces the full audit.
    """
    mul = _check_table_shape(table)
    n = mul.shape[0]
    cap = config.order_cap()
    if n > cap:
        raise OrderLimitExceeded(n, cap)
    if full_audit is None:
        full_audit = n <= config.FULL_AUDIT_MAX_ORDER
    _audit_associativity(mul, full_audit)
    identity, inv = _derive_identity_inverse(mul)
    labels = _check_labels(labels, n)
    return FiniteGroup(order=n, mul=mul, identity=identity, inv=inv,
                       labels=labels, name=name)


def _check_labels(labels, n) -> Optional[tuple[str, ...]]:
    if labels is None:
        return None
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    return labels


def _trusted_group(mul, labels, name) -> FiniteGroup:
    """For builtin constructions that are correct by construction: derive
    identity/inverses but skip the associativity audit."""
    mul = _frozen(mul)
    identity, inv = _derive_identity_inverse(mul)
    return FiniteGroup(order=mul.shape[0], mul=mul, identity=identity,
                       inv=inv, labels=_check_labels(labels, mul.shape[0]),
                       name=name)


# ---------------------------------------------------------------------------
# Constructions

def group_from_permutations(degree: int, generators: Sequence[Sequence[int]],
                            *, name: Optional[str] = None) -> FiniteGroup:
    """Closure of permutations of {0..degree-1} under composition.

    Elements are enumerated breadth-first from the identity (index 0), so
    indexing is deterministic.  Product p*q acts by q first, then p.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    gens = []
    base = np.arange(degree, dtype=np.int32)
    for g in generators:
        arr = np.asarray(g, dtype=np.int32)
        if arr.shape != (degree,) or not np.array_equal(np.sort(arr), base):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {list(g)}")
        gens.append(arr)
    cap = config.order_cap()

    elems = [base]
    index = {base.tobytes(): 0}
    head = 0
    while head < len(elems):
        w = elems[head]
        head += 1
        for g in gens:
            new = w[g]
            key = new.tobytes()
            if key not in index:
                if len(elems) >= cap:
                    raise OrderLimitExceeded(len(elems) + 1, cap)
                index[key] = len(elems)
                elems.append(new)
    n = len(elems)
    perms = np.stack(elems)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        composed = perms[i][perms]          # (n, degree): apply perms[j] first
        for j in range(n):
            mul[i, j] = index[composed[j].tobytes()]
    labels = tuple(str(tuple(int(v) for v in p)) for p in perms)
    return _trusted_group(mul, labels, name or f"perm(deg={degree})")


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_order(n)
    base = np.arange(n)
    mul = (base[:, None] + base[None, :]) % n
    return _trusted_group(mul, tuple(str(i) for i in range(n)), f"cyclic({n})")


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r^i (indices 0..n-1) and
    reflections r^i s (indices n..2n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_order(2 * n)
    order = 2 * n
    idx = np.arange(order)
    i, f = idx % n, idx // n
    # r^i s^f * r^j s^g = r^(i + (-1)^f j) s^(f+g)
    sign = 1 - 2 * f[:, None]
    rot = (i[:, None] + sign * i[None, :]) % n
    flip = (f[:, None] + f[None, :]) % 2
    mul = rot + n * flip
    labels = []
    for x in range(order):
        rpart = "e" if x % n == 0 else ("r" if x % n == 1 else f"r{x % n}")
        if x < n:
            labels.append(rpart)
        else:
            labels.append("s" if x % n == 0 else rpart + "s")
    return _trusted_group(mul, tuple(labels), f"dihedral({n})")


def symmetric_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_order(math.factorial(n))
    if n == 1:
        return group_from_permutations(1, [], name="symmetric(1)")
    transposition = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    gens = [transposition] if n == 2 else [transposition, cycle]
    return group_from_permutations(n, gens, name=f"symmetric({n})")


def quaternion_group() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k in that index order."""
    units = ("1", "i", "j", "k")
    # unit_mul[a][b] = (sign, unit) for the product of basis units a*b
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    mul = np.empty((8, 8), dtype=np.int32)
    for x in range(8):
        ux, sx = x // 2, x % 2
        for y in range(8):
            uy, sy = y // 2, y % 2
            s, u = unit_mul[(ux, uy)]
            mul[x, y] = 2 * u + (s + sx + sy) % 2
    labels = []
    for x in range(8):
        u, s = units[x // 2], x % 2
        labels.append(("-" if s else "") + u)
    return _trusted_group(mul, tuple(labels), "quaternion8")


def abelian_group(invariants: Sequence[int]) -> FiniteGroup:
    """Direct sum of cyclic groups Z/d for d in invariants (1s are dropped).

    Element index is the mixed-radix encoding of the coordinate tuple, most
    significant digit first."""
    ds = [int(d) for d in invariants if int(d) != 1]
    if any(d < 1 for d in ds):
        raise ValueError("invariants must be positive")
    if not ds:
        return cyclic_group(1)
    order = math.prod(ds)
    _require_order(order)
    coords = np.indices(ds).reshape(len(ds), -1)
    weights = np.cumprod([1] + ds[::-1][:-1])[::-1]
    mul = np.zeros((order, order), dtype=np.int64)
    for di, ei, wi in zip(ds, coords, weights):
        mul += ((ei[:, None] + ei[None, :]) % di) * wi
    labels = tuple(str(tuple(int(v) for v in coords[:, x]))
                   for x in range(order))
    return _trusted_group(mul, labels,
                          f"abelian({','.join(str(d) for d in ds)})")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    order = a.order * b.order
    _require_order(order)
    ia = np.arange(order) // b.order
    ib = np.arange(order) % b.order
    mul = a.mul[np.ix_(ia, ia)].astype(np.int64) * b.order + b.mul[np.ix_(ib, ib)]
    labels = tuple(f"({a.label(int(x))},{b.label(int(y))})"
                   for x, y in zip(ia, ib))
    return _trusted_group(mul, labels, f"direct_product({a.name},{b.name})")


def _require_order(n: int) -> None:
    cap = config.order_cap()
    if n > cap:
        raise OrderLimitExceeded(n, cap)


def builtin_group(name: str, params: Sequence = ()) -> FiniteGroup:
    """Named constructions: cyclic(n), dihedral(n), symmetric(n),
    quaternion8, direct_product(a, b), abelian(invariants)."""
    if name == "cyclic":
        return cyclic_group(_one_int(name, params))
    if name == "dihedral":
        return dihedral_group(_one_int(name, params))
    if name == "symmetric":
        return symmetric_group(_one_int(name, params))
    if name == "quaternion8":
        if list(params):
            raise ValueError("quaternion8 takes no parameters")
        return quaternion_group()
    if name == "abelian":
        if not params:
            raise ValueError("abelian requires a list of invariants")
        return abelian_group([int(d) for d in params])
    if name == "direct_product":
        if len(params) != 2:
            raise ValueError("direct_product takes exactly two factors")
        return direct_product(_as_group(params[0]), _as_group(params[1]))
    raise UnknownName(name)


def _one_int(name, params) -> int:
    if len(params) != 1:
        raise ValueError(f"{name} takes exactly one integer parameter")
    return int(params[0])


def _as_group(value) -> FiniteGroup:
    if isinstance(value, FiniteGroup):
        return value
    if isinstance(value, dict):
        return builtin_group(value["name"], value.get("params", ()))
    raise ValueError(f"cannot interpret {value!r} as a group factor")


# ---------------------------------------------------------------------------
# Closure helpers

def _closure_mask(mul: np.ndarray, identity: int, gens: Sequence[int]) -> np.ndarray:
    n = mul.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[identity] = True
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                y = int(mul[w, g])
                if not seen[y]:
                    seen[y] = True
                    nxt.append(y)
        frontier = nxt
    return seen


def _spanning_tree(G: FiniteGroup, gens: Sequence[int]):
    """BFS spanning data over right multiplication by the generators.

    Returns (tree_elem, parent_elem, tree_gen) int32 arrays of length
    G.order; tree_elem[0] is the identity and
    tree_elem[m] = mul[parent_elem[m], gens[tree_gen[m]]].
    Raises NotGenerating when the closure is proper.
    """
    n = G.order
    gens = [int(g) for g in gens]
    tree_elem = np.empty(n, dtype=np.int32)
    parent_elem = np.zeros(n, dtype=np.int32)
    tree_gen = np.zeros(n, dtype=np.int32)
    seen = np.zeros(n, dtype=bool)
    tree_elem[0] = G.identity
    seen[G.identity] = True
    count, head = 1, 0
    while head < count:
        w = int(tree_elem[head])
        for q, g in enumerate(gens):
            y = int(G.mul[w, g])
            if not seen[y]:
                seen[y] = True
                tree_elem[count] = y
                parent_elem[count] = w
                tree_gen[count] = q
                count += 1
        head += 1
    if count != n:
        raise NotGenerating(count, n)
    return _frozen(tree_elem), _frozen(parent_elem), _frozen(tree_gen)


# ---------------------------------------------------------------------------
# Homomorphisms

def identity_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(source=G, target=G,
                    image=_frozen(np.arange(G.order)), is_bijective=True)


def _hom_audit(G: FiniteGroup, image: np.ndarray,
               full: Optional[bool] = None) -> None:
    if int(image[G.identity]) != G.identity:
        raise NotAHomomorphism(G.identity, G.identity,
                               "the identity is not preserved")
    if full is None:
        full = G.order <= config.FULL_AUDIT_MAX_ORDER
    if full:
        witness = kernels.first_hom_violation(G.mul, image)
        if witness[0] >= 0:
            raise NotAHomomorphism(int(witness[0]), int(witness[1]))
        return
    rng = np.random.default_rng(config.AUDIT_SEED)
    m = config.AUDIT_SAMPLE_COUNT
    x, y = rng.integers(0, G.order, size=(2, m))
    bad = np.nonzero(image[G.mul[x, y]] != G.mul[image[x], image[y]])[0]
    if bad.size:
        i = int(bad[0])
        raise NotAHomomorphism(int(x[i]), int(y[i]))


def endo_from_image_map(G: FiniteGroup, image: Sequence[int],
                        *, full_audit: Optional[bool] = None) -> GroupMap:
    """Validate a total element map as an endomorphism of G."""
    arr = np.asarray(image)
    if arr.shape != (G.order,):
        raise ValueError(f"image map must have length {G.order}")
    if not np.issubdtype(arr.dtype, np.integer) or arr.min() < 0 or arr.max() >= G.order:
        raise ValueError("image entries must be element indices")
    arr = _frozen(arr)
    _hom_audit(G, arr, full_audit)
    bij = np.unique(arr).size == G.order
    return GroupMap(source=G, target=G, image=arr, is_bijective=bij)


def endo_from_images(G: FiniteGroup, generators: Sequence[int],
                     images: Sequence[int]) -> GroupMap:
    """The unique endomorphism sending each generator to its image,
    if the assignment extends to a homomorphism.

    The extension is computed along a BFS spanning tree over the given
    generators; the full homomorphism law is then verified on all pairs.
    """
    gens = [int(g) for g in generators]
    imgs = [int(v) for v in images]
    if len(gens) != len(imgs):
        raise ValueError("generators and images must have equal length")
    for v in gens + imgs:
        if not 0 <= v < G.order:
            raise ValueError(f"element index {v} out of range")
    tree = _spanning_tree(G, gens)        # raises NotGenerating
    gen_images = np.asarray([imgs], dtype=np.int32)
    image = kernels.batch_extend(G.mul, *tree, gen_images)[0]
    for g, v in zip(gens, imgs):
        if int(image[g]) != v:
            raise NotAHomomorphism(G.identity, g,
                                   "inconsistent generator images")
    image = _frozen(image)
    _hom_audit(G, image, full=None)
    bij = np.unique(image).size == G.order
    return GroupMap(source=G, target=G, image=image, is_bijective=bij)


def compose(f: GroupMap, g: GroupMap) -> GroupMap:
    """f after g."""
    if not same_group(f.source, g.target):
        raise ValueError("compose requires f.source to be g.target")
    image = _frozen(f.image[g.image])
    return GroupMap(source=g.source, target=f.target, image=image,
                    is_bijective=f.is_bijective and g.is_bijective)


def iterate_map(phi: GroupMap, n: int) -> GroupMap:
    """phi^n by repeated composition, n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not phi.is_endomorphism:
        raise ValueError("iterate_map requires an endomorphism")
    image = phi.image
    for _ in range(n - 1):
        image = phi.image[image]
    image = _frozen(image)
    bij = bool(np.unique(image).size == phi.source.order)
    return GroupMap(source=phi.source, target=phi.target, image=image,
                    is_bijective=bij)


def enumerate_endomorphisms(G: FiniteGroup, automorphisms_only: bool = False,
                            *, max_generators: int = config.DEFAULT_MAX_GENERATORS,
                            candidate_cap: int = config.DEFAULT_CANDIDATE_CAP,
                            ) -> list[GroupMap]:
    """All distinct endomorphisms (or automorphisms) of G.

    Exhausts image tuples for the greedy generating set, extends each along
    the BFS spanning tree, and keeps the tuples satisfying the homomorphism
    law on all (element, generator) pairs, which extends to all pairs by
    induction on word length.  Results are deduplicated by total image map
    and returned in lexicographic order of the image map.
    """
    n = G.order
    if n == 1:
        return [identity_map(G)]
    gens = G.generating_set
    if len(gens) > max_generators:
        raise SearchLimitExceeded(
            f"greedy generating set has {len(gens)} > {max_generators} elements")
    total = n ** len(gens)
    if total > candidate_cap:
        raise SearchLimitExceeded(
            f"{total} candidate image tuples exceed the cap {candidate_cap}")
    tree = G._bfs_tree
    gens_arr = np.asarray(gens, dtype=np.int32)
    base = np.arange(n, dtype=np.int32)

    kept = []
    chunk = 1 << 14
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        flat = np.arange(start, stop, dtype=np.int64)
        cand = np.empty((stop - start, len(gens)), dtype=np.int32)
        for q in range(len(gens) - 1, -1, -1):
            cand[:, q] = flat % n
            flat //= n
        images = kernels.batch_extend(G.mul, *tree, cand)
        valid = kernels.batch_edge_check(G.mul, gens_arr, cand, images)
        if automorphisms_only:
            valid &= (np.sort(images, axis=1) == base).all(axis=1)
        if valid.any():
            kept.append(images[valid])
    if not kept:
        return []
    all_images = np.unique(np.concatenate(kept, axis=0), axis=0)
    maps = []
    for row in all_images:
        bij = bool(np.unique(row).size == n)
        maps.append(GroupMap(source=G, target=G, image=_frozen(row),
                             is_bijective=bij))
    return maps


# ---------------------------------------------------------------------------
# Twisted conjugacy

def twisted_action_tables(G: FiniteGroup, image: np.ndarray,
                          seeds: Sequence[int]) -> np.ndarray:
    """Per-seed permutation tables x -> g x phi(g)^-1 for g in seeds."""
    acts = np.empty((len(seeds), G.order), dtype=np.int32)
    for qi, g in enumerate(seeds):
        acts[qi] = G.mul[G.mul[g], int(G.inv[image[g]])]
    return acts


def _partition_from_labels(labels: np.ndarray) -> TwistedPartition:
    reps = np.unique(labels)                       # sorted least elements
    class_of = np.searchsorted(reps, labels).astype(np.int32)
    sizes = np.bincount(class_of, minlength=reps.size)
    return TwistedPartition(
        class_of=_frozen(class_of),
        class_reps=tuple(int(r) for r in reps),
        class_sizes=tuple(int(s) for s in sizes),
        count=int(reps.size),
    )


def twisted_classes(G: FiniteGroup, phi: GroupMap) -> TwistedPartition:
    """Orbit partition of G under g . x = g x phi(g)^-1.

    With phi the identity these are the ordinary conjugacy classes.
    """
    if not phi.is_endomorphism or not same_group(phi.source, G):
        raise ValueError("phi must be an endomorphism of G")
    acts = twisted_action_tables(G, phi.image, G.generating_set)
    labels = kernels.orbit_labels(acts)
    return _partition_from_labels(labels)


def reidemeister_number(G: FiniteGroup, phi: GroupMap) -> int:
    """R(phi): the number of twisted conjugacy classes."""
    return twisted_classes(G, phi).count


# ---------------------------------------------------------------------------
# Eventual image

@dataclass(frozen=True, eq=False)
class EventualImage:
    """The stabilized image H = phi^n(G), its inclusion into G, and the
    restriction of phi to H.  steps is the least n with
    phi^n(G) = phi^(n+1)(G).

    H is indexed by ascending parent element index, so runs reproduce
    exactly."""

    subgroup: FiniteGroup
    embedding: GroupMap
    restricted: GroupMap
    steps: int


def eventual_image(G: FiniteGroup, phi: GroupMap) -> EventualImage:
    if not phi.is_endomorphism or not same_group(phi.source, G):
        raise ValueError("phi must be an endomorphism of G")
    cur = np.arange(G.order)
    steps = 0
    while True:
        nxt = np.unique(phi.image[cur])
        if nxt.size == cur.size:
            break
        cur = nxt
        steps += 1
    h2g = cur.astype(np.int32)
    m = h2g.size
    g2h = np.full(G.order, -1, dtype=np.int32)
    g2h[h2g] = np.arange(m, dtype=np.int32)
    mul_h = g2h[G.mul[np.ix_(h2g, h2g)]]
    inv_h = g2h[G.inv[h2g]]
    labels = tuple(G.label(int(x)) for x in h2g) if G.labels else None
    H = FiniteGroup(order=m, mul=_frozen(mul_h), identity=int(g2h[G.identity]),
                    inv=_frozen(inv_h), labels=labels,
                    name=f"{G.name}.eventual_image")
    embedding = GroupMap(source=H, target=G, image=_frozen(h2g),
                         is_bijective=(m == G.order))
    restricted_img = g2h[phi.image[h2g]]
    restricted = GroupMap(source=H, target=H, image=_frozen(restricted_img),
                          is_bijective=bool(np.unique(restricted_img).size == m))
    return EventualImage(subgroup=H, embedding=embedding,
                         restricted=restricted, steps=steps)
