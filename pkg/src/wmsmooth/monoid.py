"""Weight monoids: finitely generated submonoids of the dominant weights."""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Sequence

from .errors import AlphaNotInLattice, DimensionMismatch, NotDominant, NotNormal
from .exactla import IntegerLattice, RationalCone, hilbert_basis
from .exactla.intmat import Vector, dot
from .rootsys import GroupDatum


def _neg(v):
    return tuple(-x for x in v)


class WeightMonoid:
    """A finitely generated monoid Γ of dominant weights.

    Functionals on ZΓ (E(Γ), a(α), restricted coroots) are always written in
    coordinates dual to the HNF basis of ZΓ.

    Derived data is computed on first use and cached; instances are never
    mutated after that, so sharing them between threads is safe.
    """

    def __init__(self, group: GroupDatum, generators: Sequence[Sequence[int]], *, normal: bool | None = None):
        self.group = group
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != group.rank:
                raise DimensionMismatch(f"generator {g} does not have length {group.rank}")
            if not group.is_dominant(g):
                raise NotDominant(f"generator {g} is not dominant")
            if any(g) and g not in gens:
                gens.append(g)
        self._generators: tuple[Vector, ...] | None = tuple(gens)
        self.lattice = IntegerLattice.spanned_by(gens, group.rank)
        coords = [self.lattice.integer_coordinates(g) for g in gens]
        self.local_cone = RationalCone.from_generators(coords, self.lattice.rank)
        self._normal = normal

    @classmethod
    def saturated(cls, group: GroupDatum, lattice: IntegerLattice | Sequence[Sequence[int]]) -> "WeightMonoid":
        """The G-saturated monoid ZΓ ∩ Λ^+ for a given lattice ZΓ."""
        if not isinstance(lattice, IntegerLattice):
            lattice = IntegerLattice.spanned_by(lattice, group.rank)
        self = cls.__new__(cls)
        self.group = group
        self._generators = None
        restricted = [lattice.restrict(c) for c in group.coroots]
        local = RationalCone.from_inequalities(restricted, lattice.rank)
        if local.equations:
            raise ValueError("lattice meets the dominant cone in a lower-dimensional set")
        self.lattice = lattice
        self.local_cone = local
        self._normal = True
        return self

    # -- basic data ------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def full_rank(self) -> bool:
        return self.lattice.rank == self.group.rank

    @cached_property
    def cone(self) -> RationalCone:
        """The cone Q≥0Γ in ambient weight coordinates."""
        gens = [self.lattice.from_coordinates(g) for g in self.local_cone.generators]
        return RationalCone.from_generators(gens, self.group.rank)

    @cached_property
    def hilbert_basis(self) -> tuple[list[Vector], list[Vector]]:
        """Units and irreducibles of ZΓ ∩ Q≥0Γ."""
        return hilbert_basis(self.cone, self.lattice)

    @property
    def generators(self) -> tuple[Vector, ...]:
        if self._generators is None:
            units, irr = self.hilbert_basis
            self._generators = tuple(list(units) + [_neg(u) for u in units] + list(irr))
        return self._generators

    def coordinates(self, w: Sequence) -> Vector | None:
        return self.lattice.integer_coordinates(w)

    def restrict(self, functional: Sequence[int]) -> Vector:
        return self.lattice.restrict(functional)

    def restricted_coroot(self, i: int) -> Vector:
        return self.lattice.restrict(self.group.coroots[i])

    def __repr__(self) -> str:
        gens = self._generators if self._generators is not None else "saturated"
        return f"WeightMonoid({self.group!r}, {gens})"

    # -- membership and normality ----------------------------------------

    def in_cone_and_lattice(self, w: Sequence) -> bool:
        c = self.lattice.integer_coordinates(w)
        return c is not None and self.local_cone.contains(c)

    def member(self, w: Sequence) -> bool:
        w = tuple(w)
        if not self.in_cone_and_lattice(w):
            return False
        if self._normal:
            return True
        return self._generated_member(w)

    def _generated_member(self, w: Vector) -> bool:
        """N-combination search over the generators.

        Generators inside the lineality space generate a group; every other
        generator has positive height under the sum of the facet normals, so
        the height of ``w`` bounds how often it can be used.
        """
        facets = self.local_cone.facets
        height_form = [sum(col) for col in zip(*facets)] if facets else [0] * self.rank
        coords = [self.lattice.integer_coordinates(g) for g in self.generators]
        flat = [c for c in coords if all(dot(f, c) == 0 for f in facets)]
        steep = [c for c in coords if any(dot(f, c) != 0 for f in facets)]
        unit_group = IntegerLattice.spanned_by(flat, self.rank)
        heights = [dot(height_form, c) for c in steep]

        @lru_cache(maxsize=None)
        def search(idx: int, rem: Vector) -> bool:
            h = dot(height_form, rem)
            if h < 0:
                return False
            if idx == len(steep):
                return unit_group.contains(rem) if unit_group.rank else not any(rem)
            g = steep[idx]
            for k in range(h // heights[idx] + 1):
                if search(idx + 1, tuple(r - k * x for r, x in zip(rem, g))):
                    return True
            return False

        return search(0, self.lattice.integer_coordinates(w))

    def is_normal(self) -> bool:
        if self._normal is None:
            units, irr = self.hilbert_basis
            elems = list(irr) + list(units) + [_neg(u) for u in units]
            self._normal = all(self._generated_member(tuple(e)) for e in elems)
        return self._normal

    def require_normal(self) -> None:
        if not self.is_normal():
            raise NotNormal(f"{self!r} is not normal")

    def dominant_cone(self) -> RationalCone:
        """ZΓ ⊗ Q ∩ dominant chamber, in lattice coordinates."""
        restricted = [self.lattice.restrict(c) for c in self.group.coroots]
        return RationalCone.from_inequalities(restricted, self.rank)

    def is_G_saturated(self) -> bool:
        self.require_normal()
        return all(self.local_cone.contains(g) for g in self.dominant_cone().generators)

    # -- combinatorial invariants ----------------------------------------

    def s_p(self) -> frozenset[int]:
        return frozenset(i for i in self.group.simple if not any(self.restricted_coroot(i)))

    def e_of(self) -> list[Vector]:
        """Primitive generators of the extremal rays of Γ∨ in (ZΓ)*."""
        return list(self.local_cone.facets)

    def a_of(self, i: int) -> list[Vector]:
        alpha = self.group.simple_roots[i]
        c = self.lattice.integer_coordinates(alpha)
        if c is None:
            raise AlphaNotInLattice(f"{self.group.labels[i]} is not in ZΓ")
        cor = self.restricted_coroot(i)
        out = []
        for e in self.e_of():
            if dot(e, c) == 1:
                for d in (e, tuple(x - y for x, y in zip(cor, e))):
                    if d not in out:
                        out.append(d)
        return sorted(out)

    def pairs_nonnegatively(self, functional: Sequence[int]) -> bool:
        """Whether a functional on ZΓ (lattice coordinates) is >= 0 on Γ."""
        return all(dot(functional, g) >= 0 for g in self.local_cone.generators)
