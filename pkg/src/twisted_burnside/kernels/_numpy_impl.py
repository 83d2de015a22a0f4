"""Pure-numpy kernels.

Semantics must match kernels._numba_impl exactly; tests compare the two
backends output-for-output.  Batch functions materialize (C, n) temporaries,
so callers chunk the candidate axis.
"""

import numpy as np


def orbit_labels(acts):
    """Partition {0..n-1} into orbits of the given bijective actions.

    acts: (k, n) int32, each row a permutation of 0..n-1.
    Returns (n,) int32; labels[x] is the least element of the orbit of x.
    Uses min-label propagation along edges in both directions plus pointer
    doubling, which converges in O(log n) sweeps.
    """
    k, n = acts.shape
    labels = np.arange(n, dtype=np.int32)
    if k == 0 or n <= 1:
        return labels
    inv_acts = np.argsort(acts, axis=1).astype(np.int32)
    while True:
        prev = labels
        for a in range(k):
            labels = np.minimum(labels, labels[acts[a]])
            labels = np.minimum(labels, labels[inv_acts[a]])
        labels = labels[labels]
        if np.array_equal(labels, prev):
            return labels


def batch_orbit_counts(mul, inv, images, gens):
    """Number of twisted conjugacy classes for a batch of endomorphisms.

    mul: (n, n) int32 Cayley table; inv: (n,) int32 inverses.
    images: (C, n) int32, one total endomorphism image map per row.
    gens: (k,) int32 generator element indices.
    Returns (C,) int64 class counts, one per endomorphism.
    """
    C, n = images.shape
    if C == 0:
        return np.empty(0, dtype=np.int64)
    base = np.arange(n, dtype=np.int32)
    if gens.shape[0] == 0 or n <= 1:
        return np.full(C, n, dtype=np.int64)
    acts = np.empty((gens.shape[0], C, n), dtype=np.int32)
    for qi, g in enumerate(gens):
        ipg = inv[images[:, g]]
        # act[c, x] = mul[mul[g, x], inv[images[c, g]]]
        acts[qi] = mul[mul[g]][:, ipg].T
    iacts = np.argsort(acts, axis=2).astype(np.int32)
    labels = np.broadcast_to(base, (C, n)).copy()
    while True:
        prev = labels
        for qi in range(gens.shape[0]):
            labels = np.minimum(labels, np.take_along_axis(labels, acts[qi], axis=1))
            labels = np.minimum(labels, np.take_along_axis(labels, iacts[qi], axis=1))
        labels = np.take_along_axis(labels, labels, axis=1)
        if np.array_equal(labels, prev):
            break
    return (labels == base).sum(axis=1).astype(np.int64)


def batch_extend(mul, tree_elem, parent_elem, tree_gen, gen_images):
    """Extend generator images to total maps along a BFS spanning tree.

    tree_elem[m] is the m-th discovered element (tree_elem[0] = identity),
    reached as mul[parent_elem[m], gens[tree_gen[m]]].
    gen_images: (C, k) candidate images of the generators.
    Returns (C, n) int32 total image maps.
    """
    C = gen_images.shape[0]
    n = mul.shape[0]
    img = np.empty((C, n), dtype=np.int32)
    img[:, tree_elem[0]] = tree_elem[0]
    for m in range(1, n):
        img[:, tree_elem[m]] = mul[img[:, parent_elem[m]],
                                   gen_images[:, tree_gen[m]]]
    return img


def batch_edge_check(mul, gens, gen_images, images):
    """Homomorphism filter: f(x*g) == f(x)*f(g) for all x and generators g.

    Also requires images[:, g] == the candidate generator images, which
    rejects candidates that assign conflicting images to repeated or
    identity generators.  Returns (C,) bool.
    """
    C, n = images.shape
    valid = np.ones(C, dtype=bool)
    for q in range(gens.shape[0]):
        g = gens[q]
        valid &= images[:, g] == gen_images[:, q]
    for q in range(gens.shape[0]):
        g = gens[q]
        lhs = images[:, mul[:, g]]
        rhs = mul[images, images[:, g][:, None]]
        valid &= (lhs == rhs).all(axis=1)
    return valid


def first_nonassociative(mul):
    """First triple (a, b, c) with (ab)c != a(bc), or (-1, -1, -1)."""
    n = mul.shape[0]
    for a in range(n):
        lhs = mul[mul[a]]
        rhs = mul[a][mul]
        neq = lhs != rhs
        if neq.any():
            b, c = np.argwhere(neq)[0]
            return (int(a), int(b), int(c))
    return (-1, -1, -1)


def first_hom_violation(mul, image):
    """First pair (x, y) with f(xy) != f(x)f(y), or (-1, -1)."""
    n = mul.shape[0]
    chunk = max(1, (1 << 22) // max(n, 1))
    for x0 in range(0, n, chunk):
        x1 = min(n, x0 + chunk)
        lhs = image[mul[x0:x1]]
        rhs = mul[image[x0:x1, None], image[None, :]]
        neq = lhs != rhs
        if neq.any():
            dx, y = np.argwhere(neq)[0]
            return (int(x0 + dx), int(y))
    return (-1, -1)
