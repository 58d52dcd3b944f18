"""Full-rank G-saturated smooth families for simple groups, verified instance by instance.

Each enumerator lists the lattices of a classification, builds the saturated
monoid ZΓ ∩ Λ^+ for each, runs the G-saturated smoothness check and compares
Σ^N with the expected column.  Infinite families are sampled up to a
parameter bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any

from .exactla import IntegerLattice
from .monoid import WeightMonoid
from .rootsys import GroupDatum, build_group
from .sphroots import names, sigma_n_gsat
from .verdict import Outcome, check_gsat_smooth

OTHER_TYPES = ("B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class FamilyInstance:
    group: str
    case: str
    params: tuple[tuple[str, int], ...]
    lattice: tuple[tuple[int, ...], ...]
    expected_smooth: bool
    expected_sigma: frozenset[tuple[int, ...]] | None
    outcome: Outcome
    sigma: frozenset[tuple[int, ...]]
    failed_condition: str | None = None
    sigma_names: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        want = Outcome.SMOOTH if self.expected_smooth else Outcome.NOT_SMOOTH
        if self.outcome is not want:
            return False
        return self.expected_sigma is None or self.sigma == self.expected_sigma

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "case": self.case,
            "params": dict(self.params),
            "lattice": [list(b) for b in self.lattice],
            "expected": "Smooth" if self.expected_smooth else "NotSmooth",
            "outcome": self.outcome.value,
            "SigmaN": list(self.sigma_names),
            "failed_condition": self.failed_condition,
            "ok": self.ok,
        }


def _unit(k: int, *entries: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * k
    for i, c in entries:
        v[i] += c
    return tuple(v)


def doubled_simple(k: int) -> frozenset[tuple[int, ...]]:
    return frozenset(_unit(k, (i, 2)) for i in range(k))


def consecutive_sums(k: int) -> frozenset[tuple[int, ...]]:
    return frozenset(_unit(k, (i, 1), (i + 1, 1)) for i in range(k - 1))


def _run(group: GroupDatum, label: str, case: str, params: dict, lattice: IntegerLattice,
         expected_smooth: bool, expected_sigma) -> FamilyInstance:
    gamma = WeightMonoid.saturated(group, lattice)
    verdict = check_gsat_smooth(gamma)
    sigma = sigma_n_gsat(gamma)
    return FamilyInstance(
        group=label,
        case=case,
        params=tuple(params.items()),
        lattice=lattice.basis,
        expected_smooth=expected_smooth,
        expected_sigma=expected_sigma,
        outcome=verdict.outcome,
        sigma=frozenset(s.coeffs for s in sigma),
        failed_condition=verdict.failed_condition,
        sigma_names=tuple(names(group, sigma)),
    )


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


# ---------------------------------------------------------------------------
# Type A
# ---------------------------------------------------------------------------

def sl_lattices(n: int, max_param: int = 6) -> list[tuple[str, dict[str, int], IntegerLattice]]:
    """The lattices of the three type-A cases for SL(n+1), in fundamental-weight coordinates."""
    group = build_group([("A", n)])
    alpha = group.simple_roots
    omega = group.fundamental_weights
    zero = (0,) * n

    def om(i: int) -> tuple[int, ...]:
        # 1-based, with omega_0 = 0
        return omega[i - 1] if i >= 1 else zero

    def scale(k, v):
        return tuple(k * x for x in v)

    def add(*vs):
        return tuple(map(sum, zip(*vs)))

    out = []
    for d in _divisors(n + 1):
        gens = [scale(2, a) for a in alpha[1:]] + [scale(2 * d, om(n))]
        out.append(("1", {"d": d}, IntegerLattice.spanned_by(gens, n)))
    sums = [add(alpha[i], alpha[i + 1]) for i in range(n - 1)]
    if n % 2 == 0:
        for k in range(1, max_param + 1):
            out.append(("2", {"k": k}, IntegerLattice.spanned_by(sums + [scale(k, om(n - 1))], n)))
    else:
        for e in _divisors((n + 1) // 2):
            for r in range(e):
                gens = sums[1:] + [scale(e, om(n - 1)), add(scale(r, om(n - 1)), om(n))]
                out.append(("3", {"e": e, "r": r}, IntegerLattice.spanned_by(gens, n)))
    return out


def enumerate_sl_fullrank(n: int, max_param: int = 6) -> list[FamilyInstance]:
    """Verify every type-A family lattice for SL(n+1); case 2 is sampled for k <= max_param."""
    if not 1 <= n <= 8:
        raise ValueError("n must lie in 1..8")
    group = build_group([("A", n)])
    expected = {"1": doubled_simple(n), "2": consecutive_sums(n), "3": consecutive_sums(n)}
    return [
        _run(group, f"A{n}", case, params, lat, True, expected[case])
        for case, params, lat in sl_lattices(n, max_param)
    ]


# ---------------------------------------------------------------------------
# Other simple types
# ---------------------------------------------------------------------------

def intermediate_lattices(lower: IntegerLattice, upper: IntegerLattice) -> list[IntegerLattice]:
    """All lattices L with lower ⊆ L ⊆ upper, for a finite-index inclusion.

    Closes {lower} under adding single coset representatives, which reaches
    every subgroup of the finite quotient.
    """
    index = lower.index_in(upper)
    reps = []
    for c in product(range(index), repeat=upper.rank):
        v = upper.from_coordinates(c)
        if not lower.contains(v):
            reps.append(v)
    found = {lower.basis: lower}
    frontier = [lower]
    while frontier:
        nxt = []
        for lat in frontier:
            for v in reps:
                if lat.contains(v):
                    continue
                bigger = lat + IntegerLattice.spanned_by([v], lat.dim)
                if bigger.basis not in found:
                    found[bigger.basis] = bigger
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found.values(), key=lambda lat: (lat.index_in(upper) * -1, lat.basis))


def _root_lattice(group: GroupDatum) -> IntegerLattice:
    return IntegerLattice.spanned_by(group.simple_roots, group.rank)


def _own_families(kind: str, n: int) -> list[tuple[str, IntegerLattice, frozenset]]:
    group = build_group([(kind, n)])
    weights = IntegerLattice.standard(n)
    out = []
    for lat in intermediate_lattices(_root_lattice(group).scaled(2), weights.scaled(2)):
        out.append(("2R<=L<=2W", lat, doubled_simple(n)))
    alpha = group.simple_roots
    if kind == "B":
        sums = [tuple(x + y for x, y in zip(alpha[i], alpha[i + 1])) for i in range(n - 1)]
        lower = IntegerLattice.spanned_by(sums + [tuple(2 * x for x in alpha[-1])], n)
        omega = group.fundamental_weights
        upper = IntegerLattice.spanned_by(list(omega[:-1]) + [tuple(2 * x for x in omega[-1])], n)
        sigma = consecutive_sums(n) | {_unit(n, (n - 1, 2))}
        for lat in intermediate_lattices(lower, upper):
            out.append(("B-sums", lat, sigma))
    if kind == "C":
        out.append(("C-full", weights, consecutive_sums(n)))
    return out


def _swap_rank2(v):
    return tuple(reversed(v))


def other_type_families(kind: str, n: int) -> list[tuple[str, IntegerLattice, frozenset]]:
    """Family lattices of a simple group of type B..G with their expected Σ^N.

    B2 and C2 are one diagram with the nodes swapped, so in rank 2 each
    type also receives the other type's families, transported.
    """
    out = _own_families(kind, n)
    if n == 2 and kind in "BC":
        other = "C" if kind == "B" else "B"
        seen = {lat.basis for _, lat, _ in out}
        for case, lat, sigma in _own_families(other, 2):
            moved = IntegerLattice.spanned_by([_swap_rank2(b) for b in lat.basis], 2)
            if moved.basis not in seen:
                seen.add(moved.basis)
                out.append((f"{case} via {other}2", moved, frozenset(_swap_rank2(s) for s in sigma)))
    return out


def other_type_negatives(kind: str, n: int) -> list[tuple[str, IntegerLattice]]:
    """Lattices outside every family, drawn from Λ and small perturbations of 2Λ_R."""
    group = build_group([(kind, n)])
    doubled_roots = _root_lattice(group).scaled(2)
    candidates = [("weight lattice", IntegerLattice.standard(n))]
    for i in (0, n - 1):
        label = group.labels[i]
        candidates.append((f"2R+Z{label}", doubled_roots + IntegerLattice.spanned_by([group.simple_roots[i]], n)))
        candidates.append((f"2R+Zw{i + 1}", doubled_roots + IntegerLattice.spanned_by([group.fundamental_weights[i]], n)))
    family = {lat.basis for _, lat, _ in other_type_families(kind, n)}
    out, seen = [], set()
    for case, lat in candidates:
        if lat.basis not in family and lat.basis not in seen:
            seen.add(lat.basis)
            out.append((case, lat))
    return out


def enumerate_other_types(kind: str, n: int) -> list[FamilyInstance]:
    kind = kind.upper()
    if kind not in OTHER_TYPES:
        raise ValueError(f"type {kind} is not handled here; use enumerate_sl_fullrank for type A")
    group = build_group([(kind, n)])
    label = f"{kind}{n}"
    out = [_run(group, label, case, {}, lat, True, sigma) for case, lat, sigma in other_type_families(kind, n)]
    out += [_run(group, label, case, {}, lat, False, None) for case, lat in other_type_negatives(kind, n)]
    return out


DESK_TYPES = (("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 4), ("D", 4), ("D", 5),
              ("G", 2), ("F", 4), ("E", 6))
