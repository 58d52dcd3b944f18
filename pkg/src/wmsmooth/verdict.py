"""Smoothness decisions for weight monoids."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from .admiss import AdmissibleTriple, is_admissible
from .errors import InternalInconsistency, NotGSaturated, NotTorus
from .exactla import IntegerLattice, feasible, part_of_basis, primitive
from .monoid import WeightMonoid
from .rootsys import GroupDatum
from .sphroots import names, s_gamma, sigma_n_gsat, sigma_n_general

OUT_OF_SCOPE = "general smoothness criterion for non-G-saturated monoids (not implemented)"


class Outcome(str, Enum):
    SMOOTH = "Smooth"
    NOT_SMOOTH = "NotSmooth"
    UNDECIDED = "Undecided"


class Route(str, Enum):
    TORIC = "Toric"
    GSATURATED = "GSaturated"
    SL2CX = "Sl2Cx"
    REFLECTIVE = "Reflective"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    route: Route | None
    certificate: dict[str, Any] = field(default_factory=dict)
    failed_condition: str | None = None
    missing: str | None = None

    def __post_init__(self):
        if self.outcome is Outcome.NOT_SMOOTH and not self.failed_condition:
            raise ValueError("a NotSmooth verdict must name the failed condition")
        if self.outcome is Outcome.UNDECIDED and not self.missing:
            raise ValueError("an Undecided verdict must name the missing criterion")

    @property
    def smooth(self) -> bool:
        return self.outcome is Outcome.SMOOTH

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "outcome": self.outcome.value,
            "route": self.route.value if self.route else None,
            "certificate": self.certificate,
        }
        if self.failed_condition:
            out["failed_condition"] = self.failed_condition
        if self.missing:
            out["missing"] = self.missing
        return out


def _labels(group: GroupDatum, idx) -> list[str]:
    return [group.labels[i] for i in sorted(idx)]


def _blocks(blocks) -> list[dict]:
    return [{"item": b.item, "shape": b.shape, "labeling": list(b.labeling)} for b in blocks]


# ---------------------------------------------------------------------------
# G-saturated monoids
# ---------------------------------------------------------------------------

def gsat_certificate(gamma: WeightMonoid) -> dict[str, Any]:
    """All data entering the three conditions, with each condition evaluated."""
    group = gamma.group
    sigma_n = sigma_n_gsat(gamma)
    sp = gamma.s_p()
    sg = s_gamma(gamma, sigma_n)
    free = sorted(sg - sp)

    restrictions = {}
    for i in free:
        restrictions.setdefault(gamma.restricted_coroot(i), []).append(i)
    distinct = list(restrictions)
    cond_a = part_of_basis(distinct) if distinct else True

    bad_pairs = []
    for i, j in combinations(free, 2):
        if gamma.restricted_coroot(i) == gamma.restricted_coroot(j):
            total = tuple(x + y for x, y in zip(group.simple_roots[i], group.simple_roots[j]))
            if not gamma.lattice.contains(total):
                bad_pairs.append((group.labels[i], group.labels[j]))
    cond_b = not bad_pairs

    local_sigma = frozenset(s.coeffs for s in sigma_n if s.support <= sg)
    triple = AdmissibleTriple(group, sg, sp, local_sigma)
    cond_c, blocks = is_admissible(triple)

    return {
        "SigmaN": names(group, sigma_n),
        "Sp": _labels(group, sp),
        "S_Gamma": _labels(group, sg),
        "restricted_coroots": {group.labels[i]: list(gamma.restricted_coroot(i)) for i in free},
        "lattice_basis": [list(b) for b in gamma.lattice.basis],
        "triple": triple.describe(),
        "admissibility_witness": _blocks(blocks) if blocks is not None else None,
        "conditions": {"a": cond_a, "b": cond_b, "c": cond_c},
        "equal_restriction_pairs_outside_lattice": bad_pairs,
    }


def check_gsat_smooth(gamma: WeightMonoid) -> Verdict:
    gamma.require_normal()
    if not gamma.is_G_saturated():
        raise NotGSaturated(f"{gamma!r} is not G-saturated")
    cert = gsat_certificate(gamma)
    cond = cert["conditions"]
    failed = None
    if not cond["a"]:
        failed = "(a) part-of-basis"
    elif not cond["b"]:
        failed = "(b) equal restrictions sum into the lattice"
    elif not cond["c"]:
        failed = "(c) admissible triple"
    outcome = Outcome.NOT_SMOOTH if failed else Outcome.SMOOTH
    return Verdict(outcome, Route.GSATURATED, cert, failed_condition=failed)


# ---------------------------------------------------------------------------
# Tori
# ---------------------------------------------------------------------------

def check_toric_smooth(gamma: WeightMonoid) -> Verdict:
    """Smooth iff units and irreducibles together form a basis of ZΓ."""
    if not gamma.group.is_torus:
        raise NotTorus(f"{gamma.group!r} has roots")
    gamma.require_normal()
    units, irr = gamma.hilbert_basis
    cert = {"units": [list(u) for u in units], "irreducibles": [list(v) for v in irr], "rank": gamma.rank}
    if len(units) + len(irr) == gamma.rank:
        return Verdict(Outcome.SMOOTH, Route.TORIC, cert)
    return Verdict(Outcome.NOT_SMOOTH, Route.TORIC, cert, failed_condition="pointed part is not free")


# ---------------------------------------------------------------------------
# Reflective monoids
# ---------------------------------------------------------------------------

def w_invariant_lattice(lattice: IntegerLattice, group: GroupDatum) -> bool:
    return all(
        lattice.contains(group.simple_reflection(i, b)) for i in group.simple for b in lattice.basis
    )


def hyperplane_key(f) -> tuple[int, ...]:
    f = primitive(f)
    lead = next(x for x in f if x)
    return f if lead > 0 else tuple(-x for x in f)


def meets_open_chamber(group: GroupDatum, rays, lineality=()) -> bool:
    """Whether the cone spanned by ``rays`` (plus a linear part) meets the open dominant chamber.

    Looks for nonnegative ray weights and free lineality weights with every
    coroot pairing >= 1.
    """
    if not group.simple:
        return True
    gens = list(rays) + list(lineality) + [tuple(-x for x in v) for v in lineality]
    if not gens:
        return False
    a = [[-group.pairing(c, g) for g in gens] for c in group.coroots]
    b = [-1] * len(a)
    return feasible(a, b) is not None


def check_reflective(gamma: WeightMonoid) -> tuple[bool, dict[str, Any]]:
    gamma.require_normal()
    group = gamma.group
    diag: dict[str, Any] = {"full_rank": gamma.full_rank}
    if not gamma.full_rank:
        return False, diag
    cone = gamma.cone
    keys = {hyperplane_key(f) for f in cone.facets}
    unstable = []
    for f in cone.facets:
        for i in group.simple:
            if hyperplane_key(group.reflect_functional(i, f)) not in keys:
                unstable.append((list(f), group.labels[i]))
    diag["walls_W_stable"] = not unstable
    if unstable:
        diag["unstable_walls"] = unstable
    closed = [list(f) for f in cone.facets if not meets_open_chamber(group, cone.facet_rays(f), cone.lineality)]
    diag["facets_meet_open_chamber"] = not closed
    if closed:
        diag["facets_missing_open_chamber"] = closed
    return not unstable and not closed, diag


def check_reflective_smooth(gamma: WeightMonoid) -> Verdict:
    """Sufficient criterion for reflective monoids; never answers NotSmooth."""
    group = gamma.group
    reflective, diag = check_reflective(gamma)
    checks: dict[str, Any] = {"reflective": reflective, "reflective_details": diag}
    if reflective:
        checks["simple_roots_in_lattice"] = all(gamma.lattice.contains(a) for a in group.simple_roots)
        e = gamma.e_of()
        checks["E_part_of_basis"] = bool(e) and part_of_basis(e)
        checks["lattice_W_invariant"] = w_invariant_lattice(gamma.lattice, group)
    hypotheses = ("reflective", "simple_roots_in_lattice", "E_part_of_basis", "lattice_W_invariant")
    if not all(checks.get(h) for h in hypotheses):
        missing = next(h for h in hypotheses if not checks.get(h))
        return Verdict(Outcome.UNDECIDED, Route.REFLECTIVE, checks, missing=f"reflective criterion: {missing} fails")

    kinds = [c.kind + str(c.rank) for c in group.components]
    if any(k != "A1" for k in kinds):
        raise InternalInconsistency(f"reflective smooth monoid over semisimple type {kinds}")
    sigma = sigma_n_general(gamma)
    if {s.coeffs for s in sigma} != {tuple(int(i == j) for j in group.simple) for i in group.simple}:
        raise InternalInconsistency(f"Σ^N = {names(group, sigma)} differs from S")
    checks["semisimple_type"] = "x".join(kinds) or "trivial"
    checks["SigmaN"] = names(group, sigma)
    return Verdict(Outcome.SMOOTH, Route.REFLECTIVE, checks)


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def smooth_verdict(gamma: WeightMonoid) -> Verdict:
    group = gamma.group
    if group.is_torus:
        return check_toric_smooth(gamma)
    gamma.require_normal()
    if gamma.is_G_saturated():
        return check_gsat_smooth(gamma)
    if group.is_standard_sl2_torus():
        from .sl2c import sl2c_verdict

        return sl2c_verdict(gamma)
    reflective = check_reflective_smooth(gamma)
    if reflective.smooth:
        return reflective
    return Verdict(
        Outcome.UNDECIDED, Route.REFLECTIVE, {"reflective_checks": reflective.certificate}, missing=OUT_OF_SCOPE
    )
