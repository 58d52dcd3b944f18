"""Weight monoids of SL(2) x C^x.

Weights are pairs (x, y) meaning x*omega + y*epsilon, so alpha = (2, 0).
The fourteen smooth families are numbered as in the classification theorem;
``TABLE_ROWS`` translates the seventeen rows of the companion table of
varieties (which splits a in {2, 4} into separate rows) to those numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import InvalidParams, UniquenessViolated, WrongGroup
from .exactla import IntegerLattice, primitive
from .monoid import WeightMonoid
from .rootsys import GroupDatum, build_group
from .verdict import Outcome, Route, Verdict

ALPHA = (2, 0)

# item -> (parameter names, Σ^N as a label: "", "a", "2a")
FAMILIES: dict[int, tuple[tuple[str, ...], str]] = {
    1: ((), ""),
    2: (("b",), ""),
    3: (("b",), ""),
    4: (("b",), ""),
    5: (("a",), "2a"),
    6: (("c", "b"), ""),
    7: (("a", "b"), "2a"),
    8: (("a", "b"), "2a"),
    9: (("b",), "2a"),
    10: (("a", "b"), "a"),
    11: (("a", "b"), "a"),
    12: (("b",), "2a"),
    13: (("b", "c"), ""),
    14: (("b",), "2a"),
}

# table row -> (item, fixed parameters, renaming of row parameters to item parameters)
TABLE_ROWS: dict[int, tuple[int, dict[str, int], dict[str, str]]] = {
    1: (1, {}, {}),
    2: (2, {}, {}),
    3: (3, {}, {}),
    4: (4, {}, {}),
    5: (5, {"a": 2}, {}),
    6: (5, {"a": 4}, {}),
    7: (6, {}, {"b": "c", "c": "b"}),
    8: (7, {"a": 2}, {}),
    9: (7, {"a": 4}, {}),
    10: (9, {}, {}),
    11: (13, {}, {}),
    12: (8, {"a": 2}, {}),
    13: (8, {"a": 4}, {}),
    14: (10, {}, {}),
    15: (11, {}, {}),
    16: (12, {}, {}),
    17: (14, {}, {}),
}


def sl2c_group() -> GroupDatum:
    return build_group(["A1"], 1)


def _require_group(gamma: WeightMonoid) -> None:
    if not gamma.group.is_standard_sl2_torus():
        raise WrongGroup(f"{gamma.group!r} is not SL(2) x C^x in (omega, epsilon) coordinates")


def _check_params(item: int, params: dict[str, int]) -> None:
    def need(ok: bool, what: str) -> None:
        if not ok:
            raise InvalidParams(f"family {item}: {what} (got {params})")

    a, b, c = params.get("a"), params.get("b"), params.get("c")
    if item == 2:
        need(b >= 1, "b must be positive")
    elif item in (3, 12, 14):
        need(b != 0, "b must be nonzero")
    elif item == 5:
        need(a in (2, 4), "a must be 2 or 4")
    elif item == 6:
        need(b >= 1 and 2 * abs(c) <= b, "need b >= 1 and |c| <= b/2")
    elif item == 7:
        need(a in (2, 4) and b >= 1, "need a in {2, 4} and b >= 1")
    elif item == 8:
        need(a in (2, 4) and b != 0, "need a in {2, 4} and b != 0")
    elif item == 9:
        need(b >= 1, "b must be positive")
    elif item == 10:
        need(a >= 1 and b != 0, "need a >= 1 and b != 0")
    elif item == 11:
        need(a >= 1 and b >= 1, "need a, b >= 1")
    elif item == 13:
        need(c != 0, "c must be nonzero")


def family_generators(item: int, **params: int) -> list[tuple[int, int]]:
    if item not in FAMILIES:
        raise InvalidParams(f"no family {item}; families are numbered 1-14")
    expected = FAMILIES[item][0]
    if set(params) != set(expected):
        raise InvalidParams(f"family {item} takes parameters {expected}, got {sorted(params)}")
    try:
        params = {k: int(v) for k, v in params.items()}
    except (TypeError, ValueError):
        raise InvalidParams(f"parameters must be integers: {params}") from None
    _check_params(item, params)
    a, b, c = params.get("a"), params.get("b"), params.get("c")
    return {
        1: lambda: [],
        2: lambda: [(0, b), (0, -b)],
        3: lambda: [(0, b)],
        4: lambda: [(1, b)],
        5: lambda: [(a, 0)],
        6: lambda: [(1, c), (0, b), (0, -b)],
        7: lambda: [(a, 0), (0, b), (0, -b)],
        8: lambda: [(a, 0), (0, b)],
        9: lambda: [(2, b), (2, -b), (0, 2 * b), (0, -2 * b)],
        10: lambda: [(2, 0), (a, b)],
        11: lambda: [(a, b), (a, -b), (2, 0)],
        12: lambda: [(2, b), (0, 2 * b)],
        13: lambda: [(1, b), (0, c)],
        14: lambda: [(4, 0), (0, 2 * b), (2, b)],
    }[item]()


def family_instance(item: int, **params: int) -> WeightMonoid:
    return WeightMonoid(sl2c_group(), family_generators(item, **params), normal=True)


def table4_instance(case: int, **params: int) -> WeightMonoid:
    """The monoid of a family, keyed by its number in the classification (1-14)."""
    return family_instance(case, **params)


def table4_row(row: int, **params: int) -> WeightMonoid:
    """The monoid listed in a row (1-17) of the table of varieties, with that row's parameter names."""
    if row not in TABLE_ROWS:
        raise InvalidParams(f"no table row {row}; rows are numbered 1-17")
    item, fixed, rename = TABLE_ROWS[row]
    merged = {rename.get(k, k): v for k, v in params.items()}
    merged.update(fixed)
    return family_instance(item, **merged)


@dataclass(frozen=True)
class Sl2cFamily:
    item: int
    params: tuple[tuple[str, int], ...]

    @property
    def sigma_n(self) -> str:
        return FAMILIES[self.item][1]

    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    def monoid(self) -> WeightMonoid:
        return family_instance(self.item, **self.param_dict())

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"family {self.item}" + (f" ({inner})" if inner else "")


def _family(item: int, **params: int) -> Sl2cFamily:
    names = FAMILIES[item][0]
    return Sl2cFamily(item, tuple((n, int(params[n])) for n in names))


# ---------------------------------------------------------------------------
# Σ^N in closed form
# ---------------------------------------------------------------------------

def _primitive_on_ray(lattice: IntegerLattice, ray) -> tuple[int, ...]:
    """The first nonzero lattice point on a rational ray inside the lattice span."""
    c = lattice.coordinates(ray)
    p = primitive(c)
    return lattice.from_coordinates(p)


def _ray_points(gamma: WeightMonoid) -> list[tuple[int, int]]:
    return [_primitive_on_ray(gamma.lattice, r) for r in gamma.cone.rays]


def _positively_parallel(u, v) -> bool:
    return u[0] * v[1] == u[1] * v[0] and u[0] * v[0] + u[1] * v[1] > 0


def _has_2alpha(gamma: WeightMonoid) -> bool:
    lat = gamma.lattice
    if not lat.contains((4, 0)) or any(b[0] % 2 for b in lat.basis):
        return False
    if gamma.rank == 2 and not gamma.cone.is_pointed:
        return True
    if gamma.rank < 2:
        return True
    pts = _ray_points(gamma)
    for p, q in (pts, pts[::-1]):
        if p[0] > 0 and q[0] == 0 and q[1] != 0 and p[1] * q[1] >= 0:
            return True
    return False


def _has_alpha(gamma: WeightMonoid) -> bool:
    lat = gamma.lattice
    if gamma.rank != 2 or not gamma.cone.is_pointed or not lat.contains(ALPHA):
        return False
    covolume = abs(lat.basis[0][0] * lat.basis[1][1] - lat.basis[0][1] * lat.basis[1][0])
    rays = list(gamma.cone.rays)
    for lam, other in ((rays[0], rays[1]), (rays[1], rays[0])):
        lam = _primitive_on_ray(lat, lam)
        x, y = lam
        if x <= 0 or abs(2 * y) != covolume:
            continue
        if _positively_parallel(other, (x, -y)):
            return True
        # other = s*alpha + t*lam with s > 0, t >= 0
        t = Fraction(other[1], y) if y else None
        if t is None:
            if other[1] == 0 and other[0] > 0:
                return True
            continue
        s = Fraction(other[0] - t * x, 2)
        if s > 0 and t >= 0:
            return True
    return False


def sigma_n_sl2c(gamma: WeightMonoid) -> frozenset[tuple[int, ...]]:
    """Σ^N as a set of coefficient vectors: {}, {(1,)} or {(2,)}."""
    _require_group(gamma)
    gamma.require_normal()
    if _has_2alpha(gamma):
        return frozenset({(2,)})
    if _has_alpha(gamma):
        return frozenset({(1,)})
    return frozenset()


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def _same_monoid(gamma: WeightMonoid, other: WeightMonoid) -> bool:
    return gamma.lattice == other.lattice and gamma.cone.same_as(other.cone)


def _candidates(gamma: WeightMonoid) -> list[Sl2cFamily]:
    units, irr = gamma.hilbert_basis
    if gamma.rank == 0:
        return [_family(1)]
    if gamma.rank == 1:
        if units:
            return [_family(2, b=abs(units[0][1]))]
        (x, y), = irr
        if x == 0:
            return [_family(3, b=y)]
        if x == 1:
            return [_family(4, b=y)]
        if y == 0 and x in (2, 4):
            return [_family(5, a=x)]
        return []
    if units:
        (_, b), = units
        b = abs(b)
        (x, y), = irr
        out = []
        if x == 1:
            c = y % b
            if 2 * c > b:
                c -= b
            out.append(_family(6, c=c, b=b))
        if x in (2, 4) and y % b == 0:
            out.append(_family(7, a=x, b=b))
        if x == 2 and b % 2 == 0 and y % b == b // 2:
            out.append(_family(9, b=b // 2))
        return out
    pts = _ray_points(gamma)
    out = []
    for (px, py), (qx, qy) in (pts, pts[::-1]):
        if py == 0 and px in (2, 4) and qx == 0:
            out.append(_family(8, a=px, b=qy))
        if (px, py) == (2, 0) and qx > 0 and qy != 0:
            out.append(_family(10, a=qx, b=qy))
        if px == qx > 0 and py == -qy > 0:
            out.append(_family(11, a=px, b=py))
        if px == 2 and py != 0 and (qx, qy) == (0, 2 * py):
            out.append(_family(12, b=py))
        if px == 1 and qx == 0:
            out.append(_family(13, b=py, c=qy))
        if (px, py) == (4, 0) and qx == 0 and qy % 2 == 0:
            out.append(_family(14, b=qy // 2))
    return out


def classify_sl2c(gamma: WeightMonoid) -> Sl2cFamily | None:
    """The smooth family containing Γ, or None when Γ is not smooth."""
    _require_group(gamma)
    gamma.require_normal()
    matches = []
    for fam in _candidates(gamma):
        try:
            model = fam.monoid()
        except InvalidParams:
            continue
        if _same_monoid(gamma, model) and fam not in matches:
            matches.append(fam)
    if len(matches) > 1:
        raise UniquenessViolated(f"{gamma!r} matches several families: {[str(m) for m in matches]}")
    return matches[0] if matches else None


def sl2c_verdict(gamma: WeightMonoid) -> Verdict:
    fam = classify_sl2c(gamma)
    sigma = sigma_n_sl2c(gamma)
    cert: dict[str, Any] = {"SigmaN": [_sigma_name(s) for s in sorted(sigma)]}
    if fam is None:
        return Verdict(Outcome.NOT_SMOOTH, Route.SL2CX, cert, failed_condition="matches no smooth family")
    cert["family"] = fam.item
    cert["params"] = fam.param_dict()
    return Verdict(Outcome.SMOOTH, Route.SL2CX, cert)


def _sigma_name(coeffs: tuple[int, ...]) -> str:
    return "a1" if coeffs == (1,) else f"{coeffs[0]}a1"


def sigma_label(label: str) -> frozenset[tuple[int, ...]]:
    """Translate the compact Σ^N labels of ``FAMILIES`` to coefficient sets."""
    return {"": frozenset(), "a": frozenset({(1,)}), "2a": frozenset({(2,)})}[label]

