"""Numba kernels: union-find orbit enumeration and batched endomorphism
search.  Same contracts as kernels._numpy_impl."""

import numpy as np
from numba import njit


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def orbit_labels(acts):
    k, n = acts.shape
    parent = np.arange(n, dtype=np.int32)
    for a in range(k):
        for x in range(n):
            rx = _find(parent, x)
            ry = _find(parent, acts[a, x])
            if rx < ry:
                parent[ry] = rx
            elif ry < rx:
                parent[rx] = ry
    labels = np.empty(n, dtype=np.int32)
    for x in range(n):
        labels[x] = _find(parent, x)
    return labels


@njit(cache=True)
def batch_orbit_counts(mul, inv, images, gens):
    C, n = images.shape
    k = gens.shape[0]
    counts = np.empty(C, dtype=np.int64)
    parent = np.empty(n, dtype=np.int32)
    for c in range(C):
        for x in range(n):
            parent[x] = x
        for qi in range(k):
            g = gens[qi]
            ipg = inv[images[c, g]]
            for x in range(n):
                y = mul[mul[g, x], ipg]
                rx = _find(parent, x)
                ry = _find(parent, y)
                if rx < ry:
                    parent[ry] = rx
                elif ry < rx:
                    parent[rx] = ry
        cnt = 0
        for x in range(n):
            if parent[x] == x:
                cnt += 1
        counts[c] = cnt
    return counts


@njit(cache=True)
def batch_extend(mul, tree_elem, parent_elem, tree_gen, gen_images):
    C = gen_images.shape[0]
    n = mul.shape[0]
    img = np.empty((C, n), dtype=np.int32)
    e0 = tree_elem[0]
    for c in range(C):
        img[c, e0] = e0
        for m in range(1, n):
            img[c, tree_elem[m]] = mul[img[c, parent_elem[m]],
                                       gen_images[c, tree_gen[m]]]
    return img


@njit(cache=True)
def batch_edge_check(mul, gens, gen_images, images):
    C, n = images.shape
    k = gens.shape[0]
    valid = np.ones(C, dtype=np.bool_)
    for c in range(C):
        ok = True
        for q in range(k):
            if images[c, gens[q]] != gen_images[c, q]:
                ok = False
                break
        if ok:
            for q in range(k):
                g = gens[q]
                fg = images[c, g]
                for x in range(n):
                    if images[c, mul[x, g]] != mul[images[c, x], fg]:
                        ok = False
                        break
                if not ok:
                    break
        valid[c] = ok
    return valid


@njit(cache=True)
def first_nonassociative(mul):
    n = mul.shape[0]
    for a in range(n):
        for b in range(n):
            ab = mul[a, b]
            for c in range(n):
                if mul[ab, c] != mul[a, mul[b, c]]:
                    return (a, b, c)
    return (-1, -1, -1)


@njit(cache=True)
def first_hom_violation(mul, image):
    n = mul.shape[0]
    for x in range(n):
        fx = image[x]
        for y in range(n):
            if image[mul[x, y]] != mul[fx, image[y]]:
                return (x, y)
    return (-1, -1)
