import numpy as np
import pytest

import oracles
from twisted_burnside import (
    FixedBy,
    MappedTo,
    Reducible,
    abelian_group,
    burnside_check,
    character_table,
    conjugacy_data,
    cyclic_group,
    dihedral_group,
    dual_action,
    endo_from_image_map,
    endo_from_images,
    enumerate_endomorphisms,
    fixed_points_count,
    identity_map,
    quaternion_group,
    symmetric_group,
)
from twisted_burnside.corpus import alternating_group4
from twisted_burnside.cyclotomic import Cyclotomic


class TestConjugacyData:
    def test_trivial(self):
        cd = conjugacy_data(cyclic_group(1))
        assert cd.n_classes == 1 and cd.exponent == 1

    def test_s3(self):
        cd = conjugacy_data(symmetric_group(3))
        assert sorted(cd.sizes) == [1, 2, 3]
        assert cd.exponent == 6
        # inverse_class is an involution
        assert all(cd.inverse_class[cd.inverse_class[k]] == k
                   for k in range(cd.n_classes))

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_cyclic_all_singletons(self, n):
        cd = conjugacy_data(cyclic_group(n))
        assert cd.n_classes == n and set(cd.sizes) == {1}

    def test_classes_ordered_by_least_element(self):
        cd = conjugacy_data(symmetric_group(4))
        assert list(cd.reps) == sorted(cd.reps)


class TestCharacterTable:
    def test_trivial_table(self):
        tab = character_table(cyclic_group(1))
        assert tab.degrees == (1,)
        assert tab.chars[0][0] == 1

    def test_z3_matches_direct_construction(self):
        tab = character_table(cyclic_group(3))
        produced = {tuple(v.key() for v in row) for row in tab.chars}
        direct = {
            tuple(Cyclotomic.root_of_unity(3, (j * k) % 3).key()
                  for k in range(3))
            for j in range(3)
        }
        assert produced == direct

    def test_s3_degrees_and_standard_value(self):
        G = symmetric_group(3)
        tab = character_table(G)
        assert tab.degrees == (1, 1, 2)
        cd = tab.classes
        three_cycles = next(k for k in range(3) if cd.sizes[k] == 2)
        assert tab.chars[2][three_cycles] == -1

    def test_s4_degrees(self):
        assert sorted(character_table(symmetric_group(4)).degrees) == [1, 1, 2, 3, 3]

    def test_a4_degrees(self):
        assert sorted(character_table(alternating_group4()).degrees) == [1, 1, 1, 3]

    def test_d4_q8_same_degree_multiset(self):
        d4 = character_table(dihedral_group(4)).degrees
        q8 = character_table(quaternion_group()).degrees
        assert sorted(d4) == sorted(q8) == [1, 1, 1, 1, 2]

    def test_row_sorting_is_deterministic(self):
        a = character_table(cyclic_group(12))
        b = character_table(cyclic_group(12))   # distinct object, fresh run
        assert [tuple(v.key() for v in row) for row in a.chars] == \
               [tuple(v.key() for v in row) for row in b.chars]

    @pytest.mark.parametrize("builder", [
        lambda: cyclic_group(7),
        lambda: dihedral_group(6),
        lambda: abelian_group([2, 4]),
        lambda: symmetric_group(4),
        lambda: quaternion_group(),
        lambda: cyclic_group(24),
    ])
    def test_matches_regular_representation_oracle(self, builder):
        G = builder()
        tab = character_table(G)
        got = sorted(tuple(v.key() for v in row) for row in tab.chars)
        want = sorted(tuple(v.key() for v in row)
                      for row in oracles.regular_representation_table(G))
        assert got == want

    def test_values_at_identity_equal_degrees(self):
        G = symmetric_group(4)
        tab = character_table(G)
        idc = int(tab.classes.class_of[G.identity])
        assert all(row[idc].as_integer() == d
                   for row, d in zip(tab.chars, tab.degrees))

    def test_json_round_trippable_shape(self):
        doc = character_table(symmetric_group(3)).to_json_dict()
        assert doc["degrees"] == [1, 1, 2]
        assert len(doc["values"]) == 3
        assert all(isinstance(c, str)
                   for row in doc["values"] for v in row for c in v["coeffs"])


class TestDualAction:
    def test_identity_fixes_everything(self):
        G = symmetric_group(3)
        da = dual_action(character_table(G), identity_map(G))
        assert all(isinstance(f, FixedBy) and f.index == i
                   for i, f in enumerate(da.results))

    def test_z3_inversion_swaps_nontrivial_characters(self):
        G = cyclic_group(3)
        da = dual_action(character_table(G),
                         endo_from_images(G, [1], [2]))
        fixed = [f for f in da.results if isinstance(f, FixedBy)]
        swapped = [f for f in da.results if isinstance(f, MappedTo)]
        assert len(fixed) == 1 and len(swapped) == 2
        assert {f.index for f in swapped} == {
            i for i, f in enumerate(da.results) if isinstance(f, MappedTo)}

    def test_z4_doubling_classification(self):
        G = cyclic_group(4)
        tab = character_table(G)
        phi = endo_from_images(G, [1], [2])
        da = dual_action(tab, phi)
        # chi_j . phi = chi_(2j mod 4): exactly the trivial character is fixed
        assert da.fixed_count == 1
        assert sum(isinstance(f, MappedTo) for f in da.results) == 3
        assert fixed_points_count(tab, phi) == 1

    def test_collapse_endo_is_reducible(self):
        G = symmetric_group(3)
        t = next(x for x in G.elements if G.element_order(x) == 2)
        phi = endo_from_image_map(
            G, [G.identity if G.element_order(x) % 2 else t
                for x in G.elements])
        da = dual_action(character_table(G), phi)
        red = [f for f in da.results if isinstance(f, Reducible)]
        assert len(red) == 1
        assert red[0].multiplicities == (1, 1, 0)

    def test_automorphisms_never_reducible(self):
        for G in (symmetric_group(4), quaternion_group(), cyclic_group(12)):
            tab = character_table(G)
            for phi in enumerate_endomorphisms(G, automorphisms_only=True):
                assert not dual_action(tab, phi).has_reducible


class TestBurnside:
    def test_s3_identity(self):
        rep = burnside_check(symmetric_group(3),
                             identity_map(symmetric_group(3)))
        assert (rep.r, rep.s, rep.equal) == (3, 3, True)

    def test_z3_inversion(self):
        G = cyclic_group(3)
        rep = burnside_check(G, endo_from_images(G, [1], [2]))
        assert (rep.r, rep.s, rep.equal) == (1, 1, True)

    def test_z4_doubling(self):
        G = cyclic_group(4)
        rep = burnside_check(G, endo_from_images(G, [1], [2]))
        assert (rep.r, rep.s, rep.equal) == (1, 1, True)

    def test_trivial_group(self):
        G = cyclic_group(1)
        rep = burnside_check(G, identity_map(G))
        assert (rep.r, rep.s, rep.equal) == (1, 1, True)


class TestCorpusWideDualInvariants:
    def test_corpus_automorphisms_never_reducible(self, corpus_pairs):
        for G, endos in corpus_pairs:
            tab = character_table(G)
            for phi in endos:
                if phi.is_bijective:
                    assert not dual_action(tab, phi).has_reducible

    def test_relabeled_identity_table(self):
        import numpy as np
        from twisted_burnside import group_from_cayley
        s3 = symmetric_group(3)
        perm = np.array([3, 1, 2, 0, 4, 5])
        new_mul = np.empty((6, 6), dtype=np.int32)
        for a in range(6):
            for b in range(6):
                new_mul[perm[a], perm[b]] = perm[s3.mul[a, b]]
        G = group_from_cayley(new_mul.tolist())
        tab = character_table(G)
        assert tab.degrees == (1, 1, 2)
        rep = burnside_check(G, identity_map(G))
        assert rep.equal and rep.r == 3


class TestHarderGroups:
    """Non-corpus groups with higher-degree irreducibles and richer
    cyclotomy (the C7:C3 cubics involve (-1 +/- sqrt(-7))/2)."""

    CASES = [
        ("frobenius20", 5, [[1, 2, 3, 4, 0], [0, 2, 4, 1, 3]],
         20, [1, 1, 1, 1, 4]),
        ("C7:C3", 7, [[1, 2, 3, 4, 5, 6, 0], [0, 2, 4, 6, 1, 3, 5]],
         21, [1, 1, 1, 3, 3]),
    ]

    @pytest.mark.parametrize("name,degree,gens,order,degrees", CASES)
    def test_table_and_burnside(self, name, degree, gens, order, degrees):
        from twisted_burnside.groups import group_from_permutations
        G = group_from_permutations(degree, gens, name=name)
        assert G.order == order
        tab = character_table(G)
        assert sorted(tab.degrees) == degrees
        got = sorted(tuple(v.key() for v in row) for row in tab.chars)
        want = sorted(tuple(v.key() for v in row)
                      for row in oracles.regular_representation_table(G))
        assert got == want
        for phi in enumerate_endomorphisms(G):
            assert burnside_check(G, phi).equal

    def test_sl_2_3(self):
        from twisted_burnside.groups import group_from_permutations
        vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
        idx = {v: i for i, v in enumerate(vecs)}

        def act(m):
            return [idx[((m[0][0] * a + m[0][1] * b) % 3,
                         (m[1][0] * a + m[1][1] * b) % 3)] for a, b in vecs]

        G = group_from_permutations(
            8, [act([[1, 1], [0, 1]]), act([[0, 2], [1, 0]])], name="SL(2,3)")
        assert G.order == 24
        tab = character_table(G)
        assert sorted(tab.degrees) == [1, 1, 1, 2, 2, 2, 3]
        for phi in enumerate_endomorphisms(G):
            assert burnside_check(G, phi).equal


class TestModularPhase:
    def test_prime_selection_deterministic(self):
        from twisted_burnside.chartable import _dixon_prime
        assert _dixon_prime(1, 1) == 3        # smallest odd prime > 2*sqrt(1)
        assert _dixon_prime(6, 6) == 7        # 7 = 1 mod 6, 7 > 2*sqrt(6)
        assert _dixon_prime(24, 12) == 13     # 13 = 1 mod 12, 13 > 2*sqrt(24)
        assert _dixon_prime(24, 24) == 73

    def test_order_cap_applies(self, monkeypatch):
        from twisted_burnside.errors import OrderLimitExceeded
        G = cyclic_group(12)
        monkeypatch.setenv("TWB_ORDER_CAP", "8")
        with pytest.raises(OrderLimitExceeded):
            from twisted_burnside.chartable import _character_table_uncached
            _character_table_uncached(G)


class TestClassicalTables:
    def test_s4_exact_values(self):
        G = symmetric_group(4)
        tab = character_table(G)
        cd = tab.classes
        # classes identified by (element order of rep, class size)
        keys = [(G.element_order(rep), size)
                for rep, size in zip(cd.reps, cd.sizes)]
        classical = [
            {(1, 1): 1, (2, 6): 1, (2, 3): 1, (3, 8): 1, (4, 6): 1},
            {(1, 1): 1, (2, 6): -1, (2, 3): 1, (3, 8): 1, (4, 6): -1},
            {(1, 1): 2, (2, 6): 0, (2, 3): 2, (3, 8): -1, (4, 6): 0},
            {(1, 1): 3, (2, 6): 1, (2, 3): -1, (3, 8): 0, (4, 6): -1},
            {(1, 1): 3, (2, 6): -1, (2, 3): -1, (3, 8): 0, (4, 6): 1},
        ]
        produced = sorted(
            tuple(sorted((key, row[k].as_integer())
                         for k, key in enumerate(keys)))
            for row in tab.chars)
        wanted = sorted(tuple(sorted(d.items())) for d in classical)
        assert produced == wanted

    def test_q8_exact_values(self):
        G = quaternion_group()
        tab = character_table(G)
        cd = tab.classes
        keys = []
        for rep, size in zip(cd.reps, cd.sizes):
            keys.append((G.element_order(rep), size, G.label(rep).lstrip("-")))
        # five classes: 1, -1, {i,-i}, {j,-j}, {k,-k}
        classical = [
            {(1, 1, "1"): 1, (2, 1, "1"): 1, (4, 2, "i"): 1, (4, 2, "j"): 1, (4, 2, "k"): 1},
            {(1, 1, "1"): 1, (2, 1, "1"): 1, (4, 2, "i"): 1, (4, 2, "j"): -1, (4, 2, "k"): -1},
            {(1, 1, "1"): 1, (2, 1, "1"): 1, (4, 2, "i"): -1, (4, 2, "j"): 1, (4, 2, "k"): -1},
            {(1, 1, "1"): 1, (2, 1, "1"): 1, (4, 2, "i"): -1, (4, 2, "j"): -1, (4, 2, "k"): 1},
            {(1, 1, "1"): 2, (2, 1, "1"): -2, (4, 2, "i"): 0, (4, 2, "j"): 0, (4, 2, "k"): 0},
        ]
        produced = sorted(
            tuple(sorted((key, row[k].as_integer())
                         for k, key in enumerate(keys)))
            for row in tab.chars)
        wanted = sorted(tuple(sorted(d.items())) for d in classical)
        assert produced == wanted
