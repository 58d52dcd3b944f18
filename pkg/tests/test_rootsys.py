import pytest
from hypothesis import given
from hypothesis import strategies as st

from wmsmooth.errors import InvalidComponent, NotInRootLattice, NotSimpleRoot
from wmsmooth.rootsys import build_group, cartan_matrix, gl2, identify, torus

ALL_TYPES = [("A", 1), ("A", 3), ("B", 2), ("B", 4), ("C", 3), ("D", 4), ("D", 5),
             ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


def test_a1_root_is_twice_fundamental_weight():
    g = build_group(["A1"])
    assert g.simple_roots == ((2,),)


def test_a1_with_torus_dominant_chamber():
    g = build_group(["A1"], 1)
    assert g.rank == 2
    assert g.is_dominant((1, 0)) and g.is_dominant((0, 1)) and g.is_dominant((0, -1))
    assert not g.is_dominant((-1, 0))
    assert g.coroot_pairing(0, (1, 0)) == 1
    assert g.coroot_pairing(0, (0, 1)) == 0
    assert g.is_standard_sl2_torus()


def test_a2_simple_root():
    g = build_group([("A", 2)])
    assert g.simple_roots[0] == (2, -1)


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_cartan_diagonal_and_symmetrizable(kind, n):
    a = cartan_matrix(kind, n)
    assert all(a[i][i] == 2 for i in range(n))
    for i in range(n):
        for j in range(n):
            assert (a[i][j] == 0) == (a[j][i] == 0)


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_identify_round_trip(kind, n):
    g = build_group([(kind, n)])
    comp = identify(g.cartan, range(n), kind)
    if (kind, n) == ("B", 2):
        assert comp.kind in "BC"
    else:
        assert (comp.kind, comp.rank) == (kind, n)


def test_bourbaki_short_and_long_roots():
    b3 = cartan_matrix("B", 3)
    assert b3[2][1] == -2 and b3[1][2] == -1
    c3 = cartan_matrix("C", 3)
    assert c3[1][2] == -2 and c3[2][1] == -1
    g2 = cartan_matrix("G", 2)
    assert {g2[0][1], g2[1][0]} == {-1, -3}


def test_support_and_types():
    a3 = build_group(["A3"])
    assert a3.support(a3.root_weight((1, 2, 1))) == {0, 1, 2}
    assert a3.support((0, 0, 0)) == frozenset()
    b2 = build_group(["B2"])
    assert b2.support(b2.root_weight((2, 0))) == {0}
    assert build_group(["B4"]).support_type([1, 2, 3]) == "B3"
    assert a3.support_type([0, 2]) == "A1xA1"
    assert build_group(["G2"]).support_type([0, 1]) == "G2"


def test_not_in_root_lattice():
    with pytest.raises(NotInRootLattice):
        build_group(["A1"]).root_coefficients((1,))


def test_reflections():
    a1 = build_group(["A1"], 1)
    assert a1.simple_reflection(0, (1, 0)) == (-1, 0)
    assert a1.simple_reflection(0, (0, 1)) == (0, 1)
    with pytest.raises(NotSimpleRoot):
        a1.simple_reflection(3, (1, 0))
    g = gl2()
    lam1, lam2 = (1, 1), (1, -2)
    assert g.simple_reflection(0, lam1) == tuple(-x for x in lam2)
    assert g.simple_reflection(0, lam2) == tuple(-x for x in lam1)


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_reflection_is_involution(x, y, z):
    g = build_group(["B3"])
    for i in g.simple:
        w = (x, y, z)
        assert g.simple_reflection(i, g.simple_reflection(i, w)) == w
        assert g.coroot_pairing(i, g.simple_reflection(i, w)) == -g.coroot_pairing(i, w)


def test_diagram_automorphisms():
    a3 = build_group(["A3"])
    assert len(a3.diagram_automorphisms(a3.components[0])) == 2
    d4 = build_group(["D4"])
    auts = d4.diagram_automorphisms(d4.components[0])
    assert len(auts) == 6
    assert all(a[1] == 1 for a in auts)
    b3 = build_group(["B3"])
    assert len(b3.diagram_automorphisms(b3.components[0])) == 1


def test_levi_roots():
    a2 = build_group(["A2"])
    assert a2.levi_simple_roots((1, 0)) == {1}
    assert a2.levi_simple_roots((0, 0)) == {0, 1}
    assert a2.levi_simple_roots((1, 1)) == frozenset()
    levi = a2.levi([1])
    assert levi.rank == 2 and levi.semisimple_rank == 1


def test_labels_for_products():
    g = build_group(["A2", "D5"])
    assert g.labels[:3] == ("a1", "a2", "a1'")


def test_invalid_components():
    with pytest.raises(InvalidComponent):
        build_group(["D3"])
    with pytest.raises(InvalidComponent):
        build_group(["E9"])
    with pytest.raises(InvalidComponent):
        build_group(["A1"], -1)


def test_torus():
    t = torus(2)
    assert t.is_torus and t.rank == 2
