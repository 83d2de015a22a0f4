"""Backend equivalence: the numba kernels and the pure-numpy fallback must
agree output-for-output on the same inputs."""

import subprocess
import sys

import numpy as np
import pytest

from twisted_burnside import abelian, groups
from twisted_burnside.kernels import numba_backend, numpy_backend

IMPLS = [numpy_backend()]
try:
    IMPLS.append(numba_backend())
except ImportError:
    pass

needs_both = pytest.mark.skipif(len(IMPLS) < 2, reason="numba unavailable")


def _sample_groups():
    return [
        groups.cyclic_group(1),
        groups.cyclic_group(12),
        groups.dihedral_group(6),
        groups.symmetric_group(4),
        groups.abelian_group([2, 4]),
        groups.quaternion_group(),
    ]


@needs_both
def test_orbit_labels_agree():
    a, b = IMPLS
    for G in _sample_groups():
        for phi in groups.enumerate_endomorphisms(G)[:10]:
            acts = groups.twisted_action_tables(G, phi.image,
                                                G.generating_set)
            assert np.array_equal(a.orbit_labels(acts), b.orbit_labels(acts))


@needs_both
def test_batch_extend_and_check_agree():
    a, b = IMPLS
    for G in _sample_groups():
        if G.order == 1:
            continue
        gens = np.asarray(G.generating_set, dtype=np.int32)
        tree = G._bfs_tree
        rng = np.random.default_rng(99)
        cand = rng.integers(0, G.order,
                            size=(257, len(gens))).astype(np.int32)
        img_a = a.batch_extend(G.mul, *tree, cand)
        img_b = b.batch_extend(G.mul, *tree, cand)
        assert np.array_equal(img_a, img_b)
        ok_a = a.batch_edge_check(G.mul, gens, cand, img_a)
        ok_b = b.batch_edge_check(G.mul, gens, cand, img_b)
        assert np.array_equal(ok_a, ok_b)


@needs_both
def test_batch_orbit_counts_agree():
    a, b = IMPLS
    g = abelian.FgAbelianGroup(0, (2, 4))
    fg = abelian.as_finite_group(g)
    images = np.stack([abelian.endo_image_table(g, e)
                       for e in abelian.enumerate_abelian_endos(g)])
    gens = np.asarray(fg.generating_set, dtype=np.int32)
    assert np.array_equal(a.batch_orbit_counts(fg.mul, fg.inv, images, gens),
                          b.batch_orbit_counts(fg.mul, fg.inv, images, gens))


@needs_both
def test_first_nonassociative_agree():
    a, b = IMPLS
    good = groups.cyclic_group(9).mul
    assert tuple(a.first_nonassociative(good)) == (-1, -1, -1)
    assert tuple(b.first_nonassociative(good)) == (-1, -1, -1)
    bad = np.array([[0, 1, 2], [1, 0, 0], [2, 0, 0]], dtype=np.int32)
    wa = tuple(int(v) for v in a.first_nonassociative(bad))
    wb = tuple(int(v) for v in b.first_nonassociative(bad))
    for x, y, z in (wa, wb):
        assert bad[bad[x, y], z] != bad[x, bad[y, z]]


@needs_both
def test_first_hom_violation_agree():
    a, b = IMPLS
    G = groups.cyclic_group(4)
    hom = np.array([0, 2, 0, 2], dtype=np.int32)
    assert tuple(a.first_hom_violation(G.mul, hom)) == (-1, -1)
    assert tuple(b.first_hom_violation(G.mul, hom)) == (-1, -1)
    non_hom = np.array([0, 1, 1, 1], dtype=np.int32)
    for impl in (a, b):
        x, y = (int(v) for v in impl.first_hom_violation(G.mul, non_hom))
        assert non_hom[G.mul[x, y]] != G.mul[non_hom[x], non_hom[y]]


def test_numpy_fallback_env_flag():
    code = ("import twisted_burnside.kernels as k; print(k.BACKEND)")
    out = subprocess.run([sys.executable, "-c", code],
                         env={"PATH": "/usr/bin:/bin", "TWB_NO_NUMBA": "1"},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_whole_stack_on_numpy_backend():
    """The corpus spot-check must pass identically with numba disabled."""
    code = (
        "from twisted_burnside.corpus import run_corpus\n"
        "rows, summary = run_corpus(max_order=8)\n"
        "assert summary.ok and summary.pairs > 100, summary\n"
        "print(summary.pairs)\n"
    )
    out = subprocess.run([sys.executable, "-c", code],
                         env={"PATH": "/usr/bin:/bin", "TWB_NO_NUMBA": "1"},
                         capture_output=True, text=True, check=True)
    assert int(out.stdout.strip()) > 100


def test_benchmark_smoke():
    from pathlib import Path
    script = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run(
        [sys.executable, str(script), "--quick"],
        capture_output=True, text=True, check=True)
    assert "orbit_labels" in out.stdout
