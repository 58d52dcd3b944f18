"""Rational polyhedral cones: double description and Hilbert bases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .intmat import (
    Vector,
    dot,
    from_columns,
    integer_kernel,
    inverse,
    matvec,
    primitive,
    rank,
    smith_normal_form,
    solve,
)
from .lattice import IntegerLattice


def _neg(v: Vector) -> Vector:
    return tuple(-x for x in v)


def _combine(a: int, u: Vector, b: int, v: Vector) -> Vector:
    return primitive([a * x + b * y for x, y in zip(u, v)])


def double_description(constraints: Sequence[Sequence[int]], dim: int) -> tuple[list[Vector], list[Vector]]:
    """Lineality basis and extremal rays of ``{x : a.x >= 0 for a in constraints}``.

    Rays are primitive integer vectors and are only defined modulo the
    lineality space.
    """
    lin: list[Vector] = [tuple(int(i == j) for i in range(dim)) for j in range(dim)]
    rays: list[Vector] = []
    done: list[Vector] = []
    for a in constraints:
        a = tuple(int(x) for x in a)
        if not any(a):
            continue
        k = next((i for i, l in enumerate(lin) if dot(a, l)), None)
        if k is not None:
            l0 = lin[k]
            v0 = dot(a, l0)
            if v0 < 0:
                l0, v0 = _neg(l0), -v0
            lin = [_combine(v0, l, -dot(a, l), l0) for i, l in enumerate(lin) if i != k]
            rays = [_combine(v0, r, -dot(a, r), l0) for r in rays] + [primitive(l0)]
            rays = list(dict.fromkeys(r for r in rays if any(r)))
            done.append(a)
            continue
        vals = [dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        keep = [r for r, v in zip(rays, vals) if v >= 0]
        if neg and pos:
            zero_sets = {r: frozenset(i for i, c in enumerate(done) if dot(c, r) == 0) for r in rays}
            for p in pos:
                for n in neg:
                    common = zero_sets[p] & zero_sets[n]
                    if any(common <= zero_sets[r] for r in rays if r != p and r != n):
                        continue
                    keep.append(_combine(dot(a, p), n, -dot(a, n), p))
        rays = list(dict.fromkeys(keep))
        done.append(a)
    return lin, rays


@dataclass(frozen=True)
class RationalCone:
    """A rational polyhedral cone in Q^dim in double description.

    ``facets`` are irredundant primitive inequalities ``f.x >= 0``;
    ``equations`` span the orthogonal complement of the linear span;
    ``rays`` generate the cone modulo ``lineality``, which is a basis of the
    saturated lattice of integer points in the lineality space.
    """

    dim: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    equations: tuple[Vector, ...]

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence], dim: int) -> "RationalCone":
        gens = [primitive(g) for g in generators]
        gens = [g for g in gens if any(g)]
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"generator {g} does not have length {dim}")
        dual_lin, dual_rays = double_description(gens, dim)
        facets = sorted(set(dual_rays))
        equations = [primitive(e) for e in dual_lin]
        cons = facets + equations + [_neg(e) for e in equations]
        _, rays = double_description(cons, dim)
        lineality = integer_kernel(facets + equations, dim) if cons else []
        if not cons:
            lineality = [tuple(int(i == j) for i in range(dim)) for j in range(dim)]
        lineality = [v for v in IntegerLattice.spanned_by(lineality, dim).basis]
        rays = sorted(set(rays)) if facets else []
        return cls(dim, tuple(rays), tuple(lineality), tuple(facets), tuple(equations))

    @classmethod
    def from_inequalities(
        cls, inequalities: Sequence[Sequence[int]], dim: int, equations: Sequence[Sequence[int]] = ()
    ) -> "RationalCone":
        eqs = [tuple(e) for e in equations]
        cons = [tuple(a) for a in inequalities] + eqs + [_neg(e) for e in eqs]
        lin, rays = double_description(cons, dim)
        return cls.from_generators(list(rays) + list(lin) + [_neg(l) for l in lin], dim)

    # -- queries ---------------------------------------------------------

    @property
    def span_dim(self) -> int:
        return self.dim - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def generators(self) -> list[Vector]:
        return list(self.rays) + list(self.lineality) + [_neg(v) for v in self.lineality]

    def contains(self, x: Sequence) -> bool:
        return all(dot(f, x) >= 0 for f in self.facets) and all(dot(e, x) == 0 for e in self.equations)

    def in_relative_interior(self, x: Sequence) -> bool:
        return all(dot(f, x) > 0 for f in self.facets) and all(dot(e, x) == 0 for e in self.equations)

    def dual(self) -> "RationalCone":
        eqs = list(self.equations)
        return RationalCone.from_generators(list(self.facets) + eqs + [_neg(e) for e in eqs], self.dim)

    def same_as(self, other: "RationalCone") -> bool:
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators
        )

    def facet_rays(self, facet: Vector) -> list[Vector]:
        return [r for r in self.rays if dot(facet, r) == 0]


def extremal_rays(cone: RationalCone) -> list[Vector]:
    return list(cone.rays)


def dual_cone(generators: Sequence[Sequence[int]], lattice: IntegerLattice) -> RationalCone:
    """The dual cone, in coordinates dual to the lattice basis.

    A functional is written as its values on the basis vectors, so primitive
    vectors here are primitive in the dual lattice.
    """
    coords = []
    for g in generators:
        c = lattice.coordinates(g)
        if c is None:
            raise ValueError(f"generator {tuple(g)} is outside the lattice span")
        coords.append(primitive(c))
    return RationalCone.from_generators(coords, lattice.rank).dual()


# ---------------------------------------------------------------------------
# Hilbert bases
# ---------------------------------------------------------------------------

def triangulate(rays: Sequence[Vector], facets: Sequence[Vector], dim: int) -> list[tuple[int, ...]]:
    """Pulling triangulation of a pointed full-dimensional cone.

    Returns index tuples into ``rays``; each tuple spans a simplicial cone and
    together they cover the cone.
    """

    @lru_cache(maxsize=None)
    def faces_below(face: frozenset, k: int) -> frozenset:
        out = set()
        for f in facets:
            g = frozenset(i for i in face if dot(f, rays[i]) == 0)
            if g != face and g and rank([rays[i] for i in g]) == k - 1:
                out.add(g)
        return frozenset(out)

    @lru_cache(maxsize=None)
    def tri(face: frozenset, k: int) -> tuple:
        if len(face) == k:
            return (tuple(sorted(face)),)
        apex = min(face)
        res = []
        for g in faces_below(face, k):
            if apex in g:
                continue
            for s in tri(g, k - 1):
                res.append(tuple(sorted(s + (apex,))))
        return tuple(res)

    if not rays:
        return []
    return list(tri(frozenset(range(len(rays))), dim))


def parallelepiped_points(gens: Sequence[Vector]) -> list[Vector]:
    """Integer points of the half-open parallelepiped spanned by ``gens``."""
    m = len(gens)
    mat = from_columns(gens, m)
    d, u, _ = smith_normal_form(mat)
    u_inv = inverse(u)
    divisors = [abs(d[i][i]) for i in range(m)]
    out = []
    for y in product(*(range(k) for k in divisors)):
        x = matvec(u_inv, y)
        c = solve(gens, x)
        frac = [ci - (ci.numerator // ci.denominator) for ci in c]
        p = tuple(int(sum(f * g[i] for f, g in zip(frac, gens))) for i in range(m))
        if any(p):
            out.append(p)
    return out


def _pointed_hilbert_basis(cone: RationalCone) -> list[Vector]:
    dim = cone.dim
    rays = list(cone.rays)
    if not rays:
        return []
    candidates = set(rays)
    for simplex in triangulate(rays, cone.facets, dim):
        candidates.update(parallelepiped_points([rays[i] for i in simplex]))
    grading = [sum(col) for col in zip(*cone.facets)]
    ordered = sorted(candidates, key=lambda x: (dot(grading, x), x))
    basis: list[Vector] = []
    for x in ordered:
        if any(cone.contains(tuple(a - b for a, b in zip(x, h))) for h in basis):
            continue
        basis.append(x)
    return basis


def reduce_modulo(v: Sequence[int], lattice: IntegerLattice) -> Vector:
    """Canonical representative of ``v`` modulo an HNF lattice."""
    x = list(v)
    for b in lattice.basis:
        p = next(i for i, t in enumerate(b) if t)
        q = x[p] // b[p]
        if q:
            x = [xi - q * bi for xi, bi in zip(x, b)]
    return tuple(x)


def hilbert_basis(cone: RationalCone, lattice: IntegerLattice | None = None) -> tuple[list[Vector], list[Vector]]:
    """Hilbert basis of the monoid ``cone ∩ lattice``.

    Returns ``(units, irreducibles)``: units form a basis of the lattice points
    of the lineality space, irreducibles are the minimal generators of the
    pointed part, lifted canonically modulo the units.
    """
    if lattice is None:
        lattice = IntegerLattice.standard(cone.dim)
    r = lattice.rank
    gens = []
    for g in cone.generators:
        c = lattice.coordinates(g)
        if c is None:
            raise ValueError("cone is not contained in the lattice span")
        gens.append(primitive(c))
    local = RationalCone.from_generators(gens, r)
    if local.equations:
        raise ValueError("cone does not span the lattice")
    units_local = list(local.lineality)
    k = len(units_local)
    if k == 0:
        irr_local = _pointed_hilbert_basis(local)
    else:
        d, p, _ = smith_normal_form(from_columns(units_local, r))
        p_inv = inverse(p)
        proj = p[k:]
        quot = RationalCone.from_generators([matvec(proj, g) for g in local.rays], r - k)
        irr_q = _pointed_hilbert_basis(quot)
        irr_local = [tuple(int(x) for x in matvec(p_inv, (0,) * k + q)) for q in irr_q]
    units_amb = [lattice.from_coordinates(u) for u in units_local]
    unit_lattice = IntegerLattice.spanned_by(units_amb, lattice.dim)
    irreducibles = sorted(
        {reduce_modulo(lattice.from_coordinates(v), unit_lattice) for v in irr_local}
    )
    return list(unit_lattice.basis), irreducibles


def lattice_points_in_box(cone: RationalCone, lattice: IntegerLattice, radius: int) -> set[Vector]:
    """Brute-force lattice points of the cone with sup-norm at most ``radius``."""
    out = set()
    for x in product(range(-radius, radius + 1), repeat=cone.dim):
        if cone.contains(x) and lattice.contains(x):
            out.add(x)
    return out


def fractions_to_ints(v: Sequence[Fraction]) -> Vector:
    if any(Fraction(x).denominator != 1 for x in v):
        raise ValueError(f"{v} is not integral")
    return tuple(int(x) for x in v)
