"""Sublattices of Z^n with a canonical HNF basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .intmat import Vector, dot, hnf_basis, solve


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of ``Z^dim``.

    ``basis`` holds the nonzero columns of the column Hermite normal form, so
    two lattices are equal exactly when their bases are.
    """

    dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence[int]], dim: int) -> "IntegerLattice":
        vecs = [tuple(int(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != dim:
                raise ValueError(f"vector {v} does not have length {dim}")
        return cls(dim, tuple(hnf_basis(vecs, dim)))

    @classmethod
    def standard(cls, dim: int) -> "IntegerLattice":
        return cls(dim, tuple(tuple(int(i == j) for i in range(dim)) for j in range(dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Rational coordinates of ``v`` in the basis, or None outside the span."""
        if not self.basis:
            return () if not any(v) else None
        return solve(self.basis, v)

    def integer_coordinates(self, v: Sequence) -> Vector | None:
        c = self.coordinates(v)
        if c is None or any(x.denominator != 1 for x in c):
            return None
        return tuple(int(x) for x in c)

    def contains(self, v: Sequence) -> bool:
        return self.integer_coordinates(v) is not None

    def in_span(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(self.contains(b) for b in other.basis)

    def from_coordinates(self, c: Sequence) -> tuple:
        return tuple(sum(ci * b[i] for ci, b in zip(c, self.basis)) for i in range(self.dim))

    def restrict(self, functional: Sequence[int]) -> Vector:
        """Coordinates of an ambient functional restricted to this lattice."""
        return tuple(dot(functional, b) for b in self.basis)

    def scaled(self, k: int) -> "IntegerLattice":
        return IntegerLattice.spanned_by([[k * x for x in b] for b in self.basis], self.dim)

    def __add__(self, other: "IntegerLattice") -> "IntegerLattice":
        return IntegerLattice.spanned_by(list(self.basis) + list(other.basis), self.dim)

    def index_in(self, other: "IntegerLattice") -> int:
        """[other : self] for a full-rank sublattice of ``other``."""
        from .intmat import det

        if self.rank != other.rank or not other.contains_lattice(self):
            raise ValueError("not a finite-index sublattice")
        coords = [other.integer_coordinates(b) for b in self.basis]
        return abs(det([list(c) for c in coords]))
