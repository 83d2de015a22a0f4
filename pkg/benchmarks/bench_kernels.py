#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Covers the three hot loops: orbit union-find, batched endomorphism
extension + homomorphism filtering, and the full associativity audit.
Run as `python benchmarks/bench_kernels.py` (add --quick for a fast smoke
pass, as used by the test suite).
"""

import argparse
import time

import numpy as np

from twisted_burnside import abelian, groups
from twisted_burnside.kernels import numba_backend, numpy_backend


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def scenario_orbit(quick):
    n = 256 if quick else 1024
    G = groups.dihedral_group(n // 2)
    acts = groups.twisted_action_tables(
        G, np.arange(G.order, dtype=np.int32), G.generating_set)

    def run(impl):
        return lambda: impl.orbit_labels(acts)

    return f"orbit_labels, conjugation on dihedral({n // 2})", run


def scenario_endo_search(quick):
    invariants = [4, 4] if quick else [4, 4, 4]
    G = groups.abelian_group(invariants)
    gens = np.asarray(G.generating_set, dtype=np.int32)
    tree = G._bfs_tree
    k = len(gens)
    total = G.order ** k
    chunk = 1 << 14

    def run(impl):
        def inner():
            valid_total = 0
            for start in range(0, total, chunk):
                stop = min(total, start + chunk)
                flat = np.arange(start, stop, dtype=np.int64)
                cand = np.empty((stop - start, k), dtype=np.int32)
                for q in range(k - 1, -1, -1):
                    cand[:, q] = flat % G.order
                    flat //= G.order
                images = impl.batch_extend(G.mul, *tree, cand)
                valid = impl.batch_edge_check(G.mul, gens, cand, images)
                valid_total += int(valid.sum())
            return valid_total
        return inner

    return f"endomorphism search on abelian({invariants})", run


def scenario_orbit_counts(quick):
    G = groups.abelian_group([4, 4, 4])
    fg_group = abelian.FgAbelianGroup(0, (4, 4, 4))
    limit = 4096 if quick else 65536
    images = []
    for endo in abelian.enumerate_abelian_endos(fg_group):
        images.append(abelian.endo_image_table(fg_group, endo))
        if len(images) >= limit:
            break
    images = np.stack(images)
    gens = np.asarray(G.generating_set, dtype=np.int32)
    chunk = 4096

    def run(impl):
        def inner():
            acc = 0
            for start in range(0, images.shape[0], chunk):
                acc += int(impl.batch_orbit_counts(
                    G.mul, G.inv, images[start:start + chunk], gens).sum())
            return acc
        return inner

    return f"batch_orbit_counts on {limit} endomorphisms of (Z/4)^3", run


def scenario_associativity(quick):
    n = 128 if quick else 400
    G = groups.cyclic_group(n)

    def run(impl):
        return lambda: impl.first_nonassociative(G.mul)

    return f"full associativity audit, order {n}", run


SCENARIOS = [scenario_orbit, scenario_endo_search, scenario_orbit_counts,
             scenario_associativity]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true",
                    help="small sizes, one repeat (smoke test)")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    repeats = 1 if args.quick else args.repeats

    impl_np = numpy_backend()
    try:
        impl_nb = numba_backend()
    except ImportError:
        impl_nb = None
        print("numba unavailable; benchmarking the numpy fallback only")

    rows = []
    for scenario in SCENARIOS:
        label, run = scenario(args.quick)
        fn_np = run(impl_np)
        res_np = fn_np()                       # warm + reference result
        t_np = best_of(fn_np, repeats)
        if impl_nb is not None:
            fn_nb = run(impl_nb)
            res_nb = fn_nb()                   # warm (includes JIT)
            if not np.array_equal(res_np, res_nb):
                raise AssertionError(f"backend mismatch in: {label}")
            t_nb = best_of(fn_nb, repeats)
            rows.append((label, t_nb * 1e3, t_np * 1e3, t_np / t_nb))
        else:
            rows.append((label, float("nan"), t_np * 1e3, float("nan")))

    header = f"{'scenario':55s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for label, nb_ms, np_ms, speed in rows:
        print(f"{label:55s} {nb_ms:10.2f} {np_ms:10.2f} {speed:8.2f}")


if __name__ == "__main__":
    main()
