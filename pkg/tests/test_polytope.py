import random
from fractions import Fraction
from math import gcd

import pytest

from wmsmooth.errors import InvalidLocalModel, NotAVertex, VertexOutsideChamber
from wmsmooth.exactla import IntegerLattice, RationalCone
from wmsmooth.polytope import (
    SATISFIED,
    UNDECIDED,
    VIOLATED,
    LocalModel,
    Polytope,
    check_pair,
    is_delzant,
    is_reflective_polytope,
    local_monoid,
    tangent_cone,
)
from wmsmooth.rootsys import build_group, gl2, torus
from wmsmooth.sl2c import classify_sl2c, sl2c_group
from wmsmooth.verdict import Outcome, Route

A1 = build_group(["A1"])
A2 = build_group(["A2"])
TRIANGLE = Polytope(A2, [(0, 0), (1, 0), (0, 1)])
WEIGHTS = IntegerLattice.standard(2)
DOUBLED = WEIGHTS.scaled(2)


def su3_models():
    target = sl2c_group()
    return [
        LocalModel((Fraction(1), Fraction(0)), target, ((0, 1), (-2, -1)), ((1, 0),)),
        LocalModel((Fraction(0), Fraction(1)), target, ((1, 0), (-1, -2)), ((0, 0),)),
    ]


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def primitive_int(v):
    g = gcd(*v)
    return tuple(x // g for x in v)


class TestTangentCone:
    def test_su3_vertices(self):
        c = tangent_cone(TRIANGLE, (1, 0))
        assert c.same_as(RationalCone.from_generators([(-1, 0), (-1, 1)], 2))
        assert tangent_cone(TRIANGLE, (0, 0)).same_as(RationalCone.from_generators([(1, 0), (0, 1)], 2))

    def test_not_a_vertex(self):
        with pytest.raises(NotAVertex):
            tangent_cone(TRIANGLE, (Fraction(1, 2), Fraction(1, 2)))

    def test_outside_chamber(self):
        with pytest.raises(VertexOutsideChamber):
            Polytope(A2, [(0, 0), (-1, 1), (0, 1)])

    def test_rational_vertices(self):
        p = Polytope(A1, [(Fraction(1, 2),), (Fraction(3, 2),)])
        assert p.dim == 1
        assert tangent_cone(p, (Fraction(1, 2),)).same_as(RationalCone.from_generators([(1,)], 1))


class TestLocalMonoid:
    def test_su3_weight_lattice(self):
        m = local_monoid(TRIANGLE, WEIGHTS, (1, 0))
        assert set(m.generators) == {(-1, 0), (-1, 1)}
        assert m.group.semisimple_rank == 1
        assert set(local_monoid(TRIANGLE, WEIGHTS, (0, 0)).generators) == {(1, 0), (0, 1)}

    def test_su3_doubled_lattice(self):
        m = local_monoid(TRIANGLE, DOUBLED, (0, 0))
        assert set(m.generators) == {(2, 0), (0, 2)}
        assert m.group == A2

    def test_pushed_forward_models(self):
        for model in su3_models():
            for lat, want in ((WEIGHTS, 13), (DOUBLED, 12)):
                m = local_monoid(TRIANGLE, lat, model.vertex)
                model.validate(A2, lat)
                fam = classify_sl2c(model.push_forward(m))
                assert fam is not None and fam.item == want, (model.vertex, lat)


class TestDelzant:
    def test_examples(self):
        assert is_delzant(TRIANGLE, WEIGHTS)[0]
        assert is_delzant(TRIANGLE, DOUBLED)[0]
        t2 = torus(2)
        ok, diag = is_delzant(Polytope(t2, [(0, 0), (1, 0), (1, 2)]), WEIGHTS)
        assert not ok and diag["non_delzant_vertices"]
        assert not is_delzant(Polytope(A1, [(0,), (1,)]), WEIGHTS)[0]

    def test_random_lattice_triangles_against_determinants(self):
        rng = random.Random(3)
        t2 = torus(2)
        checked = 0
        while checked < 60:
            pts = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(3)]
            if det2([b - a for a, b in zip(pts[0], pts[1])], [b - a for a, b in zip(pts[0], pts[2])]) == 0:
                continue
            want = True
            for i in range(3):
                a, b, c = pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]
                u = primitive_int(tuple(x - y for x, y in zip(b, a)))
                v = primitive_int(tuple(x - y for x, y in zip(c, a)))
                want &= abs(det2(u, v)) == 1
            assert is_delzant(Polytope(t2, pts), WEIGHTS)[0] == want, pts
            checked += 1


class TestReflective:
    def test_su3_triangle_touches_walls(self):
        ok, diag = is_reflective_polytope(TRIANGLE)
        assert not ok and not diag["facets_meet_open_chamber"]

    def test_segment_away_from_wall(self):
        assert is_reflective_polytope(Polytope(A1, [(1,), (2,)]))[0]
        assert not is_reflective_polytope(Polytope(A1, [(0,), (1,)]))[0]

    def test_gl2_triangle(self):
        for a in (1, 2, 3):
            p = Polytope(gl2(), [(0, 0), (1, a), (1, -(a + 1))])
            assert is_reflective_polytope(p)[0], a

    def test_lower_dimensional_is_not_reflective(self):
        assert not is_reflective_polytope(Polytope(A2, [(1, 1), (2, 2)]))[0]


class TestCheckPair:
    @pytest.mark.parametrize("lattice", [WEIGHTS, DOUBLED], ids=["weights", "doubled"])
    def test_su3(self, lattice):
        report = check_pair(TRIANGLE, lattice, su3_models())
        assert report.overall == SATISFIED
        assert not report.global_route
        by_vertex = {tuple(v.vertex): v for v in report.vertices}
        origin = by_vertex[(0, 0)]
        assert origin.verdict.route is Route.GSATURATED and origin.verdict.smooth
        for v in ((1, 0), (0, 1)):
            assert by_vertex[v].via_local_model and by_vertex[v].verdict.route is Route.SL2CX
        assert all(v.lattice_matches for v in report.vertices)

    def test_su3_without_models_is_undecided(self):
        report = check_pair(TRIANGLE, WEIGHTS)
        assert report.overall == UNDECIDED

    def test_non_smooth_vertex_is_violated(self):
        p = Polytope(A2, [(0, 0), (3, 0), (0, 3)])
        report = check_pair(p, WEIGHTS.scaled(3))
        assert report.overall == VIOLATED
        origin = report.vertices[0]
        assert origin.verdict.outcome is Outcome.NOT_SMOOTH
        assert origin.verdict.failed_condition == "(a) part-of-basis"

    def test_gl2_triangle_global_route(self):
        for a in (1, 2):
            lam1, lam2 = (1, a), (1, -(a + 1))
            p = Polytope(gl2(), [(0, 0), lam1, lam2])
            report = check_pair(p, IntegerLattice.spanned_by([lam1, lam2], 2))
            assert report.global_route and report.overall == SATISFIED

    def test_torus_polytope(self):
        t2 = torus(2)
        good = check_pair(Polytope(t2, [(0, 0), (1, 0), (0, 1)]), WEIGHTS)
        assert good.overall == SATISFIED
        bad = check_pair(Polytope(t2, [(0, 0), (1, 0), (1, 2)]), WEIGHTS)
        assert bad.overall == VIOLATED

    def test_invalid_model(self):
        bad = LocalModel((Fraction(1), Fraction(0)), sl2c_group(), ((1, 0), (0, 1)), ((1, 0),))
        with pytest.raises(InvalidLocalModel):
            check_pair(TRIANGLE, WEIGHTS, [bad])

    def test_report_serializes(self):
        d = check_pair(TRIANGLE, WEIGHTS, su3_models()).to_dict()
        assert d["overall"] == SATISFIED and len(d["vertices"]) == 3
        assert d["vertices"][0]["vertex"] == ["0", "0"]
