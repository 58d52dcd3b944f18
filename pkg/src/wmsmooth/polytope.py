"""Moment-polytope checks: tangent cones, local monoids, Delzant and reflective tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .errors import (
    DegenerateDimension,
    InputError,
    InvalidLocalModel,
    NotAVertex,
    NotDominant,
    VertexOutsideChamber,
)
from .exactla import IntegerLattice, RationalCone, hilbert_basis, integer_kernel, part_of_basis, primitive
from .exactla.intmat import dot, rank
from .monoid import WeightMonoid
from .rootsys import GroupDatum
from .verdict import Outcome, Verdict, hyperplane_key, meets_open_chamber, smooth_verdict, w_invariant_lattice

Point = tuple[Fraction, ...]


def _point(v: Sequence) -> Point:
    return tuple(Fraction(x) for x in v)


class Polytope:
    """Convex hull of finitely many dominant rational points.

    Every given point must be a vertex.  Facets are stored as integer pairs
    ``(normal, offset)`` describing ``normal . x + offset >= 0``.
    """

    def __init__(self, group: GroupDatum, vertices: Sequence[Sequence]):
        self.group = group
        pts = []
        for v in vertices:
            p = _point(v)
            if len(p) != group.rank:
                raise InputError(f"vertex {v} does not have length {group.rank}")
            if not group.is_dominant(p):
                raise VertexOutsideChamber(f"vertex {tuple(map(str, p))} is not dominant")
            if p not in pts:
                pts.append(p)
        if not pts:
            raise InputError("a polytope needs at least one vertex")
        n = group.rank
        homog = RationalCone.from_generators([p + (Fraction(1),) for p in pts], n + 1)
        ray_dirs = {r for r in homog.rays}
        for p in pts:
            if primitive(p + (Fraction(1),)) not in ray_dirs:
                raise InputError(f"point {tuple(map(str, p))} is not a vertex of the hull")
        self.vertices: tuple[Point, ...] = tuple(pts)
        self.facets = tuple((f[:n], f[n]) for f in homog.facets if any(f[:n]))
        self.equations = tuple((e[:n], e[n]) for e in homog.equations)
        self.dim = n - len(self.equations)

    def __repr__(self) -> str:
        verts = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope({verts})"

    def incident(self, facet, v: Point) -> bool:
        normal, offset = facet
        return dot(normal, v) + offset == 0

    def facet_vertices(self, facet) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.vertices) if self.incident(facet, v))

    def faces(self) -> list[frozenset[int]]:
        """Vertex sets of all nonempty faces, the polytope itself included."""
        whole = frozenset(range(len(self.vertices)))
        found = {whole}
        frontier = [whole]
        facet_sets = [self.facet_vertices(f) for f in self.facets]
        while frontier:
            nxt = []
            for face in frontier:
                for fs in facet_sets:
                    sub = face & fs
                    if sub and sub not in found:
                        found.add(sub)
                        nxt.append(sub)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def barycenter(self, face: frozenset[int]) -> Point:
        k = len(face)
        return tuple(sum(self.vertices[i][j] for i in face) / k for j in range(self.group.rank))

    def vertex_index(self, a: Sequence) -> int:
        a = _point(a)
        try:
            return self.vertices.index(a)
        except ValueError:
            raise NotAVertex(f"{tuple(map(str, a))} is not a vertex") from None

    def levi_roots(self, a: Sequence) -> frozenset[int]:
        try:
            return self.group.levi_simple_roots(_point(a))
        except NotDominant as exc:
            raise VertexOutsideChamber(str(exc)) from None


def tangent_cone(polytope: Polytope, a: Sequence) -> RationalCone:
    i = polytope.vertex_index(a)
    base = polytope.vertices[i]
    diffs = [tuple(x - y for x, y in zip(v, base)) for v in polytope.vertices]
    return RationalCone.from_generators([d for d in diffs if any(d)], polytope.group.rank)


def _lattice_in_span(lattice: IntegerLattice, cone: RationalCone) -> IntegerLattice:
    """Λ_0 intersected with the linear span of the cone."""
    if not cone.equations:
        return lattice
    m = [[dot(e, b) for b in lattice.basis] for e in cone.equations]
    kernel = integer_kernel(m, lattice.rank)
    return IntegerLattice.spanned_by([lattice.from_coordinates(k) for k in kernel], lattice.dim)


def local_monoid(polytope: Polytope, lattice: IntegerLattice, a: Sequence, group: GroupDatum | None = None) -> WeightMonoid:
    """C_aP ∩ Λ_0 as a monoid for the Levi subgroup at ``a`` (or for ``group``)."""
    cone = tangent_cone(polytope, a)
    sub = _lattice_in_span(lattice, cone)
    if sub.rank != cone.span_dim:
        raise DegenerateDimension(
            f"lattice has rank {sub.rank} in the {cone.span_dim}-dimensional span of the tangent cone"
        )
    if group is None:
        group = polytope.group.levi(polytope.levi_roots(a))
    units, irr = hilbert_basis(cone, sub)
    gens = list(units) + [tuple(-x for x in u) for u in units] + list(irr)
    return WeightMonoid(group, gens, normal=True)


def is_delzant(polytope: Polytope, lattice: IntegerLattice) -> tuple[bool, dict[str, Any]]:
    diag: dict[str, Any] = {"dim": polytope.dim, "lattice_rank": lattice.rank}
    if polytope.dim != lattice.rank:
        diag["reason"] = "dimension differs from lattice rank"
        return False, diag
    bad = []
    for v in polytope.vertices:
        cone = tangent_cone(polytope, v)
        sub = _lattice_in_span(lattice, cone)
        if sub != lattice or not cone.is_pointed:
            bad.append(v)
            continue
        _, irr = hilbert_basis(cone, lattice)
        coords = [lattice.integer_coordinates(h) for h in irr]
        if len(irr) != lattice.rank or not part_of_basis(coords):
            bad.append(v)
    if bad:
        diag["non_delzant_vertices"] = [[str(x) for x in v] for v in bad]
    return not bad, diag


def is_reflective_polytope(polytope: Polytope) -> tuple[bool, dict[str, Any]]:
    """Full dimension, wall stability at every point, and facets meeting the open chamber.

    The walls of the dominant chamber meet the polytope in faces, so the
    simple roots fixing a point and the facets through it only depend on the
    face containing it in its relative interior; one barycenter per face is
    checked.
    """
    group = polytope.group
    diag: dict[str, Any] = {"full_dimensional": polytope.dim == group.rank}
    if polytope.dim != group.rank:
        return False, diag
    facet_sets = [polytope.facet_vertices(f) for f in polytope.facets]
    unstable = []
    for face in polytope.faces():
        a = polytope.barycenter(face)
        through = [f for f, fs in zip(polytope.facets, facet_sets) if face <= fs]
        if not through:
            continue
        keys = {hyperplane_key(f[0]) for f in through}
        for i in group.simple:
            if group.coroot_pairing(i, a) != 0:
                continue
            for normal, _ in through:
                if hyperplane_key(group.reflect_functional(i, normal)) not in keys:
                    unstable.append({"point": [str(x) for x in a], "root": group.labels[i], "facet": list(normal)})
    diag["walls_stable"] = not unstable
    if unstable:
        diag["unstable"] = unstable
    closed = []
    for f, fs in zip(polytope.facets, facet_sets):
        if not meets_open_chamber(group, [polytope.vertices[i] for i in fs]):
            closed.append(list(f[0]) + [f[1]])
    diag["facets_meet_open_chamber"] = not closed
    if closed:
        diag["facets_missing_open_chamber"] = closed
    return not unstable and not closed, diag


@dataclass(frozen=True)
class LocalModel:
    """A lattice map from ambient weight coordinates to the weights of a target group.

    ``matrix`` has one row per target coordinate; ``root_correspondence``
    pairs ambient simple-root indices with target simple-root indices.
    """

    vertex: tuple[Fraction, ...]
    target: GroupDatum
    matrix: tuple[tuple[int, ...], ...]
    root_correspondence: tuple[tuple[int, int], ...] = ()

    def apply(self, w: Sequence[int]) -> tuple[int, ...]:
        return tuple(dot(row, w) for row in self.matrix)

    def validate(self, source: GroupDatum, lattice: IntegerLattice) -> None:
        if len(self.matrix) != self.target.rank or any(len(r) != source.rank for r in self.matrix):
            raise InvalidLocalModel(f"matrix must be {self.target.rank} x {source.rank}")
        images = [self.apply(b) for b in lattice.basis]
        if rank(images) != lattice.rank:
            raise InvalidLocalModel("the map is not injective on the lattice")
        for src, tgt in self.root_correspondence:
            for b, img in zip(lattice.basis, images):
                if source.coroot_pairing(src, b) != self.target.coroot_pairing(tgt, img):
                    raise InvalidLocalModel(
                        f"pairing with {source.labels[src]} is not preserved on lattice vector {list(b)}"
                    )

    def push_forward(self, gamma: WeightMonoid) -> WeightMonoid:
        return WeightMonoid(self.target, [self.apply(g) for g in gamma.generators], normal=True)


@dataclass
class VertexReport:
    vertex: Point
    levi_roots: list[str]
    monoid_generators: list[list[int]]
    lattice_matches: bool
    verdict: Verdict
    via_local_model: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertex": [str(x) for x in self.vertex],
            "levi_roots": self.levi_roots,
            "monoid_generators": self.monoid_generators,
            "lattice_matches": self.lattice_matches,
            "via_local_model": self.via_local_model,
            "verdict": self.verdict.to_dict(),
        }


@dataclass
class PolytopeReport:
    overall: str
    reflective: bool
    delzant: bool
    global_route: bool
    vertices: list[VertexReport] = field(default_factory=list)
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "overall": self.overall,
            "reflective": self.reflective,
            "delzant": self.delzant,
            "global_route": self.global_route,
            "vertices": [v.to_dict() for v in self.vertices],
            "diagnostics": self.diagnostics,
        }


SATISFIED, VIOLATED, UNDECIDED = "Satisfied", "Violated", "Undecided"


def _levi_lattice_ok(polytope: Polytope, lattice: IntegerLattice) -> bool:
    group = polytope.group
    for v in polytope.vertices:
        levi = polytope.levi_roots(v)
        if not all(lattice.contains(group.simple_roots[i]) for i in levi):
            return False
        if not w_invariant_lattice(lattice, group.levi(levi)):
            return False
    return True


def check_pair(
    polytope: Polytope, lattice: IntegerLattice, local_models: Sequence[LocalModel] = ()
) -> PolytopeReport:
    group = polytope.group
    for model in local_models:
        model.validate(group, lattice)
    reflective, rdiag = is_reflective_polytope(polytope)
    delzant, ddiag = is_delzant(polytope, lattice)
    levi_ok = _levi_lattice_ok(polytope, lattice)
    global_route = reflective and delzant and levi_ok
    diag = {"reflective": rdiag, "delzant": ddiag, "levi_lattice_conditions": levi_ok}

    reports = []
    for v in polytope.vertices:
        levi = sorted(polytope.levi_roots(v))
        gamma = local_monoid(polytope, lattice, v)
        matches = gamma.lattice == lattice
        verdict = smooth_verdict(gamma)
        via = False
        if verdict.outcome is Outcome.UNDECIDED:
            model = next((m for m in local_models if m.vertex == v), None)
            if model is not None:
                verdict = smooth_verdict(model.push_forward(gamma))
                via = True
        reports.append(
            VertexReport(
                v,
                [group.labels[i] for i in levi],
                [list(g) for g in gamma.generators],
                matches,
                verdict,
                via,
            )
        )

    if global_route:
        overall = SATISFIED
    elif any(r.verdict.outcome is Outcome.NOT_SMOOTH or not r.lattice_matches for r in reports):
        overall = VIOLATED
    elif all(r.verdict.smooth for r in reports):
        overall = SATISFIED
    else:
        overall = UNDECIDED
    return PolytopeReport(overall, reflective, delzant, global_route, reports, diag)
