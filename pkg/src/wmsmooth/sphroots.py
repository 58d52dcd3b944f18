"""Spherically closed spherical roots, the sets Σ^N(Γ), and S_Γ."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .errors import NotGSaturated, TooLarge, UniquenessViolated
from .exactla.intmat import dot
from .exactla.lp import strict_positive_combination_meets, witness_positive_combination
from .monoid import WeightMonoid
from .rootsys import GroupDatum, cartan_matrix, labelings

MAX_SUBSET_SEARCH = 12


@dataclass(frozen=True)
class SphericalRoot:
    """An element of NS matching a row of the table of spherically closed roots.

    Equality and hashing use the coefficients only; ``labeling`` records the
    embedding of the row's Bourbaki-numbered diagram that produced it
    (``labeling[k]`` is the simple root in position k+1).
    """

    coeffs: tuple[int, ...]
    pattern: str = field(compare=False)
    labeling: tuple[int, ...] = field(compare=False)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def weight(self, group: GroupDatum) -> tuple[int, ...]:
        return group.root_weight(self.coeffs)

    def simple_index(self) -> int | None:
        """Index i if this is the simple root α_i."""
        nz = [i for i, c in enumerate(self.coeffs) if c]
        if len(nz) == 1 and self.coeffs[nz[0]] == 1:
            return nz[0]
        return None

    def doubled_index(self) -> int | None:
        """Index i if this is 2α_i."""
        nz = [i for i, c in enumerate(self.coeffs) if c]
        if len(nz) == 1 and self.coeffs[nz[0]] == 2:
            return nz[0]
        return None

    def name(self, group: GroupDatum) -> str:
        return group.root_name(self.coeffs)


# Rows of the table: (pattern tag, Dynkin letter, admissible rank test, coefficients).
_ROWS: list[tuple[str, str, Callable[[int], bool], Callable[[int], list[int]]]] = [
    ("A-string", "A", lambda n: n >= 2, lambda n: [1] * n),
    ("A3-mid", "A", lambda n: n == 3, lambda n: [1, 2, 1]),
    ("B-string", "B", lambda n: n >= 2, lambda n: [1] * n),
    ("B-doubled", "B", lambda n: n >= 2, lambda n: [2] * n),
    ("B3-special", "B", lambda n: n == 3, lambda n: [1, 2, 3]),
    ("C-pattern", "C", lambda n: n >= 3, lambda n: [1] + [2] * (n - 2) + [1]),
    ("D-pattern", "D", lambda n: n >= 4, lambda n: [2] * (n - 2) + [1, 1]),
    ("F4", "F", lambda n: n == 4, lambda n: [1, 2, 3, 2]),
    ("G2-long", "G", lambda n: n == 2, lambda n: [4, 2]),
    ("G2-sum", "G", lambda n: n == 2, lambda n: [1, 1]),
]


def _connected_subsets(group: GroupDatum) -> list[frozenset[int]]:
    found: set[frozenset[int]] = set()
    frontier = [frozenset([i]) for i in group.simple]
    found.update(frontier)
    while frontier:
        nxt = []
        for s in frontier:
            for i in s:
                for j in group.simple:
                    if j not in s and group.cartan[i][j] != 0:
                        t = s | {j}
                        if t not in found:
                            found.add(t)
                            nxt.append(t)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@lru_cache(maxsize=64)
def sigma_sc(group: GroupDatum) -> tuple[SphericalRoot, ...]:
    """All spherically closed spherical roots of the group, each once."""
    k = group.semisimple_rank
    out: dict[tuple[int, ...], SphericalRoot] = {}

    def add(coeffs: dict[int, int], pattern: str, labeling: tuple[int, ...]) -> None:
        vec = tuple(coeffs.get(i, 0) for i in range(k))
        out.setdefault(vec, SphericalRoot(vec, pattern, labeling))

    for i in group.simple:
        add({i: 1}, "A1", (i,))
        add({i: 2}, "A1-double", (i,))
    for i, j in combinations(group.simple, 2):
        if group.cartan[i][j] == 0:
            add({i: 1, j: 1}, "A1xA1-sum", (i, j))
    for subset in _connected_subsets(group):
        n = len(subset)
        if n < 2:
            continue
        for tag, kind, ok, coeffs in _ROWS:
            if not ok(n):
                continue
            pattern = coeffs(n)
            for lab in labelings(cartan_matrix(kind, n), group.cartan, subset):
                add({lab[p]: c for p, c in enumerate(pattern)}, tag, lab)
    return tuple(sorted(out.values(), key=lambda s: (sum(s.coeffs), s.coeffs)))


def compatible_with_sp(group: GroupDatum, sigma: SphericalRoot, sp: Iterable[int]) -> bool:
    sp = set(sp)
    lab = sigma.labeling
    if sigma.pattern == "B-string":
        return set(lab[1:-1]) <= sp and lab[-1] not in sp
    if sigma.pattern == "C-pattern":
        return set(lab[2:]) <= sp
    w = sigma.weight(group)
    return all(group.coroot_pairing(i, w) != 0 or i in sp for i in sigma.support)


def _pair_equal_restrictions(gamma: WeightMonoid, sigma: SphericalRoot) -> bool:
    i, j = sigma.labeling
    return gamma.restricted_coroot(i) == gamma.restricted_coroot(j)


def _require_gsat(gamma: WeightMonoid) -> None:
    if not gamma.is_G_saturated():
        raise NotGSaturated(f"{gamma!r} is not G-saturated")


def sigma_n_gsat(gamma: WeightMonoid) -> frozenset[SphericalRoot]:
    """Σ^N(Γ) for a G-saturated monoid."""
    _require_gsat(gamma)
    group = gamma.group
    sp = gamma.s_p()
    out = set()
    for sigma in sigma_sc(group):
        if sigma.simple_index() is not None:
            continue
        if gamma.coordinates(sigma.weight(group)) is None:
            continue
        if not compatible_with_sp(group, sigma, sp):
            continue
        d = sigma.doubled_index()
        if d is not None and any(x % 2 for x in gamma.restricted_coroot(d)):
            continue
        if sigma.pattern == "A1xA1-sum" and not _pair_equal_restrictions(gamma, sigma):
            continue
        out.add(sigma)
    return frozenset(out)


def _positive_multiple(u: tuple[int, ...], d: tuple[int, ...]) -> bool:
    """Whether u = t*d for some rational t > 0."""
    if not any(u):
        return False
    k = next(i for i, x in enumerate(d) if x)
    return all(x * d[k] == y * u[k] for x, y in zip(u, d)) and u[k] * d[k] > 0


def sigma_n_general(gamma: WeightMonoid) -> frozenset[SphericalRoot]:
    """Σ^N(Γ) for an arbitrary normal monoid."""
    gamma.require_normal()
    group = gamma.group
    sp = gamma.s_p()
    e = gamma.e_of()
    non_sp_restrictions = [gamma.restricted_coroot(b) for b in group.simple if b not in sp]
    out = set()
    for sigma in sigma_sc(group):
        coords = gamma.coordinates(sigma.weight(group))
        if coords is None:
            continue
        if not compatible_with_sp(group, sigma, sp):
            continue
        i = sigma.simple_index()
        if i is None:
            bad = [
                delta
                for delta in e
                if dot(delta, coords) > 0 and not any(_positive_multiple(r, delta) for r in non_sp_restrictions)
            ]
            if bad:
                continue
        else:
            a = gamma.a_of(i)
            if len(a) != 2:
                continue
            if not all(gamma.pairs_nonnegatively(delta) for delta in a):
                continue
            if any(dot(delta, coords) > 1 for delta in e):
                continue
        d = sigma.doubled_index()
        if d is not None and any(x % 2 for x in gamma.restricted_coroot(d)):
            continue
        if sigma.pattern == "A1xA1-sum" and not _pair_equal_restrictions(gamma, sigma):
            continue
        out.add(sigma)
    return frozenset(out)


def s_gamma(gamma: WeightMonoid, sigma_n: Iterable[SphericalRoot] | None = None) -> frozenset[int]:
    """The maximal set of simple roots whose restricted-coroot cone meets the Σ^N-antidominant cone.

    Every subset is tested; the union of the feasible ones must itself be
    feasible.
    """
    _require_gsat(gamma)
    group = gamma.group
    if sigma_n is None:
        sigma_n = sigma_n_gsat(gamma)
    k = group.semisimple_rank
    if k > MAX_SUBSET_SEARCH:
        raise TooLarge(f"subset search over {k} simple roots exceeds the limit {MAX_SUBSET_SEARCH}")
    constraints = [s.weight(group) for s in sigma_n]
    union: set[int] = set()
    for size in range(1, k + 1):
        for subset in combinations(group.simple, size):
            if strict_positive_combination_meets([group.coroots[i] for i in subset], constraints):
                union.update(subset)
    if not strict_positive_combination_meets([group.coroots[i] for i in sorted(union)], constraints):
        raise UniquenessViolated(f"union {sorted(union)} of feasible subsets is infeasible")
    return frozenset(union)


def s_gamma_witness(gamma: WeightMonoid, subset: Iterable[int], sigma_n: Iterable[SphericalRoot]):
    """Coefficients c >= 1 with Σ c_i ⟨α_i^∨, σ⟩ <= 0 for all σ, or None."""
    group = gamma.group
    subset = sorted(subset)
    return witness_positive_combination(
        [group.coroots[i] for i in subset], [s.weight(group) for s in sigma_n]
    )


def names(group: GroupDatum, roots: Iterable[SphericalRoot]) -> list[str]:
    return [r.name(group) for r in sorted(roots, key=lambda s: (sum(s.coeffs), s.coeffs))]
