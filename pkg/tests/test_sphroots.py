from fractions import Fraction

import pytest

from wmsmooth.errors import NotGSaturated
from wmsmooth.exactla import IntegerLattice
from wmsmooth.monoid import WeightMonoid
from wmsmooth.rootsys import build_group
from wmsmooth.sl2c import family_instance, sigma_n_sl2c
from wmsmooth.sphroots import (
    compatible_with_sp,
    s_gamma,
    s_gamma_witness,
    sigma_n_general,
    sigma_n_gsat,
    sigma_sc,
)

from fixtures import gl2_model, gsat_fixtures


def coeffs(roots):
    return {r.coeffs for r in roots}


def root(group, c):
    return next(r for r in sigma_sc(group) if r.coeffs == c)


class TestSphericallyClosed:
    def test_g2(self):
        assert coeffs(sigma_sc(build_group(["G2"]))) == {(1, 0), (2, 0), (0, 1), (0, 2), (4, 2), (1, 1)}

    def test_b2(self):
        assert coeffs(sigma_sc(build_group(["B2"]))) == {(1, 0), (2, 0), (0, 1), (0, 2), (1, 1), (2, 2)}

    def test_a1_with_torus(self):
        assert coeffs(sigma_sc(build_group(["A1"], 1))) == {(1,), (2,)}

    def test_a3_contains_middle_pattern(self):
        sc = coeffs(sigma_sc(build_group(["A3"])))
        assert (1, 2, 1) in sc and (1, 1, 1) in sc and (1, 1, 0) in sc

    def test_orthogonal_pair(self):
        sc = coeffs(sigma_sc(build_group(["A1", "A1"])))
        assert (1, 1) in sc

    def test_all_supported_on_connected_or_pair(self):
        for kind, n in [("B", 3), ("C", 3), ("D", 4), ("F", 4)]:
            g = build_group([(kind, n)])
            for r in sigma_sc(g):
                assert all(c >= 0 for c in r.coeffs) and any(r.coeffs)


class TestCompatibility:
    def test_b3_string(self):
        g = build_group(["B3"])
        sigma = root(g, (1, 1, 1))
        assert compatible_with_sp(g, sigma, {1})
        assert not compatible_with_sp(g, sigma, set())

    def test_doubled_simple_always(self):
        g = build_group(["B3"])
        sigma = root(g, (0, 2, 0))
        assert compatible_with_sp(g, sigma, set())
        assert compatible_with_sp(g, sigma, {0, 2})


class TestSigmaN:
    def test_gsat_examples(self):
        a1 = build_group(["A1"])
        assert coeffs(sigma_n_gsat(WeightMonoid(a1, [(2,)]))) == {(2,)}
        assert coeffs(sigma_n_gsat(WeightMonoid(a1, [(1,)]))) == set()
        a2 = build_group(["A2"])
        m = WeightMonoid.saturated(a2, IntegerLattice.standard(2).scaled(2))
        assert coeffs(sigma_n_gsat(m)) == {(2, 0), (0, 2)}

    def test_gsat_refuses_other_monoids(self):
        with pytest.raises(NotGSaturated):
            sigma_n_gsat(gl2_model(1))

    def test_general_examples_rank_one_with_torus(self):
        a1t = build_group(["A1"], 1)
        assert coeffs(sigma_n_general(WeightMonoid(a1t, [(2, 0), (1, 1)]))) == {(1,)}
        assert coeffs(sigma_n_general(WeightMonoid(a1t, [(2, 1), (0, 2)]))) == {(2,)}
        assert coeffs(sigma_n_general(WeightMonoid(a1t, [(1, 1)]))) == set()

    def test_reflective_example_is_s(self):
        for a in (1, 2, 3):
            assert coeffs(sigma_n_general(gl2_model(a))) == {(1,)}

    def test_general_equals_gsat_on_every_saturated_fixture(self):
        for name, m in gsat_fixtures():
            assert sigma_n_general(m) == sigma_n_gsat(m), name

    def test_general_matches_closed_form_on_rank_two_families(self):
        for item, params in [(4, {"b": 3}), (6, {"c": 1, "b": 4}), (7, {"a": 2, "b": 3}), (10, {"a": 3, "b": 2}),
                             (11, {"a": 1, "b": 1}), (12, {"b": 2}), (13, {"b": 1, "c": 3}), (14, {"b": 1})]:
            m = family_instance(item, **params)
            assert coeffs(sigma_n_general(m)) == set(sigma_n_sl2c(m)), (item, params)


class TestSGamma:
    def test_a3_case_three(self):
        a3 = build_group(["A3"])
        alpha = a3.simple_roots
        lat = IntegerLattice.spanned_by(
            [tuple(x + y for x, y in zip(alpha[1], alpha[2])), (0, 2, 0), (0, 0, 1)], 3
        )
        m = WeightMonoid.saturated(a3, lat)
        assert coeffs(sigma_n_gsat(m)) == {(1, 1, 0), (0, 1, 1)}
        assert s_gamma(m) == {0, 2}

    def test_a2_doubled_weights(self):
        m = WeightMonoid.saturated(build_group(["A2"]), IntegerLattice.standard(2).scaled(2))
        assert s_gamma(m) == frozenset()

    def test_c2_weight_lattice(self):
        m = WeightMonoid.saturated(build_group(["C2"]), IntegerLattice.standard(2))
        assert coeffs(sigma_n_gsat(m)) == {(1, 1)}
        assert s_gamma(m) == {0}

    def test_union_of_feasible_subsets_is_feasible_on_every_fixture(self):
        for name, m in gsat_fixtures():
            group = m.group
            sigma = sigma_n_gsat(m)
            union = s_gamma(m, sigma)
            if not union:
                continue
            c = s_gamma_witness(m, union, sigma)
            assert c is not None, name
            assert all(x >= 1 for x in c)
            combo = [sum(ci * Fraction(group.coroots[i][k]) for ci, i in zip(c, sorted(union)))
                     for k in range(group.rank)]
            for s in sigma:
                assert sum(x * y for x, y in zip(combo, s.weight(group))) <= 0, name
