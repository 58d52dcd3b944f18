"""Shared monoid fixtures."""

from __future__ import annotations

from functools import lru_cache

from wmsmooth.enumerators import DESK_TYPES, other_type_families, other_type_negatives, sl_lattices
from wmsmooth.exactla import IntegerLattice
from wmsmooth.monoid import WeightMonoid
from wmsmooth.rootsys import build_group, gl2


# (cone generators, lattice basis); all pointed and full-dimensional
HILBERT_FIXTURES = [
    ([(1, 0), (1, 3)], [(1, 0), (0, 1)]),
    ([(2, -1), (1, 2)], [(1, 0), (0, 1)]),
    ([(3, 1), (-1, 2)], [(1, 0), (0, 1)]),
    ([(1, 0), (1, 4)], [(2, 0), (0, 1)]),
    ([(1, 0), (1, 1)], [(1, 1), (0, 2)]),
    ([(1, 0, 0), (0, 1, 0), (1, 1, 2)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ([(1, 0, 0), (0, 1, 0), (1, 1, 3)], [(1, 1, 0), (1, -1, 0), (0, 0, 1)]),
]


def gl2_model(a: int) -> WeightMonoid:
    """⟨ω_1 + aω_2, ω_1 − (a+1)ω_2⟩ for GL(2) in (ω_1, det) coordinates."""
    return WeightMonoid(gl2(), [(1, a), (1, -(a + 1))])


@lru_cache(maxsize=None)
def gsat_fixtures() -> tuple[tuple[str, WeightMonoid], ...]:
    """G-saturated monoids: type-A and other-type family lattices, negatives, and a few by hand."""
    out = []
    for n in range(1, 5):
        group = build_group([("A", n)])
        for case, params, lat in sl_lattices(n, 3):
            out.append((f"A{n} case {case} {params}", WeightMonoid.saturated(group, lat)))
    for kind, n in DESK_TYPES:
        if kind == "E" or (kind, n) in {("D", 5), ("B", 4), ("C", 4)}:
            continue
        group = build_group([(kind, n)])
        for case, lat, _ in other_type_families(kind, n):
            out.append((f"{kind}{n} {case}", WeightMonoid.saturated(group, lat)))
        for case, lat in other_type_negatives(kind, n):
            out.append((f"{kind}{n} negative {case}", WeightMonoid.saturated(group, lat)))
    a1 = build_group(["A1"])
    for k in range(1, 7):
        out.append((f"A1 <{k}w>", WeightMonoid(a1, [(k,)])))
    a2 = build_group(["A2"])
    out.append(("A2 <w1>", WeightMonoid(a2, [(1, 0)])))
    a1a1 = build_group(["A1", "A1"])
    out.append(("A1xA1 diagonal", WeightMonoid.saturated(a1a1, IntegerLattice.spanned_by([(1, 1), (2, 0)], 2))))
    out.append(("A1xA1 full", WeightMonoid.saturated(a1a1, IntegerLattice.standard(2))))
    a3 = build_group(["A3"])
    out.append(("A3 3x weights", WeightMonoid.saturated(a3, IntegerLattice.standard(3).scaled(3))))
    return tuple(out)


def consecutive_sum(group, i):
    """α_i + α_{i+1} (1-based) in fundamental-weight coordinates."""
    n = group.semisimple_rank
    return group.root_weight(tuple(int(j in (i - 1, i)) for j in range(n)))


def even_rank_matrix(n):
    """Rows α_2+α_3, ..., α_{n-1}+α_n, (n/2)ω_{n-1}+ω_n, ω_{n-1} of A_n, n even."""
    group = build_group([("A", n)])
    omega = group.fundamental_weights
    rows = [list(consecutive_sum(group, i + 1)) for i in range(1, n - 1)]
    rows.append([(n // 2) * x + y for x, y in zip(omega[n - 2], omega[n - 1])])
    rows.append(list(omega[n - 2]))
    return group, rows
