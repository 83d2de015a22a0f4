import pytest

import oracles
from twisted_burnside.abelian import FgAbelianGroup, abelian_endo, reidemeister_abelian
from twisted_burnside.errors import IncompatibleTwist, InfiniteClasses
from twisted_burnside.extension import (
    fiber_class_reps,
    lattice_extension,
    reidemeister_extension,
    validate_extension_endo,
)
from twisted_burnside.infinite import is_infinite
from twisted_burnside.intmat import IntegerMatrix

THETA = [[2, 1], [1, 1]]
B_QUARTER_TURN = [[0, 1], [-1, 0]]


class TestValidation:
    def test_quarter_turn_is_compatible(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, B_QUARTER_TURN, -1)
        assert endo.eps == -1

    def test_identity_b_incompatible_with_eps_minus(self):
        G = lattice_extension(THETA)        # theta != theta^-1
        with pytest.raises(IncompatibleTwist):
            validate_extension_endo(G, [[1, 0], [0, 1]], -1)

    def test_b_equals_theta_commutes(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, THETA, 1)
        assert endo.eps == 1

    def test_rejects_non_unimodular_theta(self):
        with pytest.raises(ValueError):
            lattice_extension([[2, 0], [0, 1]])

    def test_rejects_bad_eps(self):
        G = lattice_extension(THETA)
        with pytest.raises(ValueError):
            validate_extension_endo(G, B_QUARTER_TURN, 2)


class TestReidemeister:
    def test_flagship_value_is_four(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, B_QUARTER_TURN, -1)
        assert reidemeister_extension(G, endo) == 4

    def test_eps_plus_one_always_infinite(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, THETA, 1)
        assert is_infinite(reidemeister_extension(G, endo))

    def test_other_quarter_turn_with_lattice_point_oracle(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, [[0, -1], [1, 0]], -1)
        assert reidemeister_extension(G, endo) == 4
        eye = IntegerMatrix.identity(2)
        theta = IntegerMatrix.from_rows(THETA)
        b = IntegerMatrix.from_rows([[0, -1], [1, 0]])
        by_points = (oracles.lattice_index_by_point_count(eye - b)
                     + oracles.lattice_index_by_point_count(eye - theta @ b))
        assert by_points == 4

    def test_result_at_least_quotient_classes(self):
        # with eps = -1 the quotient Z has exactly 2 twisted classes and
        # classes upstairs surject onto them
        G = lattice_extension(THETA)
        for b in ([[0, 1], [-1, 0]], [[0, -1], [1, 0]]):
            endo = validate_extension_endo(G, b, -1)
            value = reidemeister_extension(G, endo)
            assert is_infinite(value) or value >= 2


class TestFiberReps:
    def test_flagship_representatives(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, B_QUARTER_TURN, -1)
        reps = fiber_class_reps(G, endo)
        assert len(reps) == 4
        by_fiber = {0: [], 1: []}
        for vec, n0 in reps:
            by_fiber[n0].append(vec)
        assert len(by_fiber[0]) == 2 and len(by_fiber[1]) == 2
        # representatives within a fiber lie in distinct lattice cosets
        eye = IntegerMatrix.identity(2)
        theta = IntegerMatrix.from_rows(THETA)
        b = IntegerMatrix.from_rows(B_QUARTER_TURN)
        for n0, lat in ((0, eye - b), (1, eye - theta @ b)):
            u, v = by_fiber[n0]
            diff = [u[i] - v[i] for i in range(2)]
            det = lat.det()
            # solve lat * t = diff over Q; integral t would mean same coset
            adj = IntegerMatrix.from_rows(
                [[lat.entries[1][1], -lat.entries[0][1]],
                 [-lat.entries[1][0], lat.entries[0][0]]])
            t = [sum(adj.entries[i][j] * diff[j] for j in range(2))
                 for i in range(2)]
            assert any(ti % det for ti in t)

    def test_eps_plus_one_raises(self):
        G = lattice_extension(THETA)
        endo = validate_extension_endo(G, THETA, 1)
        with pytest.raises(InfiniteClasses):
            fiber_class_reps(G, endo)

    def test_degenerate_theta_identity_rank_one(self):
        # theta = [1]: the group is Z + Z; phi = diag(-1, -1) on Z^2
        G = lattice_extension([[1]])
        endo = validate_extension_endo(G, [[-1]], -1)
        assert reidemeister_extension(G, endo) == 4
        reps = sorted(fiber_class_reps(G, endo))
        assert reps == [((0,), 0), ((0,), 1), ((1,), 0), ((1,), 1)]
        z2 = FgAbelianGroup(2)
        block = abelian_endo(z2, [[-1, 0], [0, -1]])
        assert reidemeister_abelian(z2, block) == 4

    def test_degenerate_theta_identity_cross_check_random(self):
        import numpy as np
        rng = np.random.default_rng(3)
        eye2 = [[1, 0], [0, 1]]
        found = 0
        while found < 12:
            b = rng.integers(-3, 4, size=(2, 2)).tolist()
            G = lattice_extension(eye2)
            endo = validate_extension_endo(G, b, -1)  # theta = I commutes
            value = reidemeister_extension(G, endo)
            z3 = FgAbelianGroup(3)
            block = [[b[0][0], b[0][1], 0],
                     [b[1][0], b[1][1], 0],
                     [0, 0, -1]]
            expected = reidemeister_abelian(z3, abelian_endo(z3, block))
            if is_infinite(expected):
                assert is_infinite(value)
            else:
                assert value == expected
            found += 1
