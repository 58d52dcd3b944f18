"""Command-line interface.

Every command except the enumerators reads one JSON document (``--input``,
or standard input) and prints a report.  ``--format structured`` emits JSON
that embeds the input, so ``check --verify-certificate`` can recompute it.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .admiss import is_admissible, triple_from_names
from .enumerators import DESK_TYPES, enumerate_other_types, enumerate_sl_fullrank
from .errors import InputError
from .exactla import IntegerLattice, lattice_points_in_box
from .monoid import WeightMonoid
from .polytope import UNDECIDED, LocalModel, Polytope, check_pair
from .rootsys import GroupDatum, build_group, group_from_root_datum
from .sl2c import classify_sl2c, sigma_n_sl2c, sl2c_group
from .sphroots import names, s_gamma, s_gamma_witness, sigma_n_general, sigma_n_gsat
from .verdict import Outcome, smooth_verdict

EXIT_OK, EXIT_DIVERGED, EXIT_INVALID, EXIT_UNDECIDED = 0, 1, 2, 3
INT64 = 2**63


# ---------------------------------------------------------------------------
# Input parsing
# ---------------------------------------------------------------------------

def _ints(rows, what: str, big: bool) -> list[tuple[int, ...]]:
    if not isinstance(rows, list):
        raise InputError(f"{what} must be a list of integer vectors")
    out = []
    for row in rows:
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InputError(f"{what}: {row!r} is not a list of integers")
        if not big and any(abs(x) >= INT64 for x in row):
            raise InputError(f"{what}: {row!r} exceeds 64 bits (pass --big-integers)")
        out.append(tuple(row))
    return out


def _rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"{x!r} is not an integer or a 'p/q' string")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse rational {x!r}") from None


def parse_group(desc: Any) -> GroupDatum:
    """A group from ``{components: [{type, rank}], torus_rank}`` or an explicit root datum."""
    if desc == "sl2xC" or desc is None:
        return sl2c_group()
    if not isinstance(desc, dict):
        raise InputError("group must be an object")
    if "simple_roots" in desc:
        roots = _ints(desc["simple_roots"], "group.simple_roots", True)
        coroots = _ints(desc.get("coroots", []), "group.coroots", True)
        labels = desc.get("labels")
        if not roots:
            dim = int(desc.get("rank", 0))
            return build_group([], dim)
        return group_from_root_datum(roots, coroots, labels)
    comps = desc.get("components", [])
    if not isinstance(comps, list):
        raise InputError("group.components must be a list")
    parsed = []
    for c in comps:
        if not isinstance(c, dict) or "type" not in c or "rank" not in c:
            raise InputError(f"component {c!r} needs 'type' and 'rank'")
        parsed.append((str(c["type"]), c["rank"]))
    torus_rank = desc.get("torus_rank", 0)
    if not isinstance(torus_rank, int):
        raise InputError("group.torus_rank must be an integer")
    return build_group(parsed, torus_rank)


def parse_monoid(doc: dict, group: GroupDatum, big: bool) -> WeightMonoid:
    m = doc.get("monoid")
    if not isinstance(m, dict):
        raise InputError("missing 'monoid' object")
    if "saturated_lattice" in m:
        lattice = IntegerLattice.spanned_by(_ints(m["saturated_lattice"], "monoid.saturated_lattice", big), group.rank)
        try:
            return WeightMonoid.saturated(group, lattice)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if "generators" not in m:
        raise InputError("monoid needs 'generators' or 'saturated_lattice'")
    return WeightMonoid(group, _ints(m["generators"], "monoid.generators", big))


def parse_polytope(doc: dict, group: GroupDatum, big: bool):
    p = doc.get("polytope")
    if not isinstance(p, dict) or not isinstance(p.get("vertices"), list):
        raise InputError("missing 'polytope.vertices'")
    vertices = [[_rational(x) for x in v] for v in p["vertices"]]
    lat = doc.get("lattice")
    if not isinstance(lat, dict):
        raise InputError("missing 'lattice.generators'")
    lattice = IntegerLattice.spanned_by(_ints(lat.get("generators"), "lattice.generators", big), group.rank)
    models = []
    for entry in doc.get("local_models", []):
        target = parse_group(entry.get("target_group"))
        models.append(
            LocalModel(
                tuple(_rational(x) for x in entry["vertex"]),
                target,
                tuple(_ints(entry["matrix"], "local_models.matrix", big)),
                tuple(tuple(p) for p in entry.get("root_correspondence", [])),
            )
        )
    return Polytope(group, vertices), lattice, models


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _sigma_payload(group, roots) -> dict:
    return {"names": names(group, roots), "coefficients": sorted(list(r.coeffs) for r in roots)}


def cmd_check(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group"))
    gamma = parse_monoid(doc, group, opts.big_integers)
    verdict = smooth_verdict(gamma)
    result = verdict.to_dict()
    if opts.oracle:
        result["oracle"] = _check_oracle(gamma, verdict)
    return result, verdict.outcome is Outcome.UNDECIDED


def _check_oracle(gamma: WeightMonoid, verdict) -> dict:
    out: dict[str, Any] = {}
    if not gamma.group.is_torus and gamma.is_G_saturated():
        out["sigma_n_general_equals_gsat"] = sigma_n_general(gamma) == sigma_n_gsat(gamma)
        triple = verdict.certificate.get("triple")
        if triple is not None:
            t = triple_from_names(
                gamma.group, triple["S"], triple["Sp"],
                [r.coeffs for r in sigma_n_gsat(gamma) if {gamma.group.labels[i] for i in r.support} <= set(triple["S"])],
            )
            out["triple_admissible_recomputed"] = is_admissible(t)[0]
    if gamma.group.is_standard_sl2_torus():
        out["sigma_n_sl2c_equals_general"] = sigma_n_sl2c(gamma) == frozenset(
            r.coeffs for r in sigma_n_general(gamma)
        )
    return out


def cmd_sigma_n(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group"))
    gamma = parse_monoid(doc, group, opts.big_integers)
    general = sigma_n_general(gamma)
    result: dict[str, Any] = {"SigmaN": _sigma_payload(group, general), "G_saturated": gamma.is_G_saturated()}
    if opts.oracle and result["G_saturated"]:
        result["oracle"] = {"agrees_with_gsat_criterion": sigma_n_gsat(gamma) == general}
    return result, False


def cmd_s_gamma(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group"))
    gamma = parse_monoid(doc, group, opts.big_integers)
    sigma = sigma_n_gsat(gamma)
    sg = s_gamma(gamma, sigma)
    witness = s_gamma_witness(gamma, sg, sigma) if sg else ()
    return {
        "S_Gamma": [group.labels[i] for i in sorted(sg)],
        "witness": [str(x) for x in witness] if witness is not None else None,
        "SigmaN": _sigma_payload(group, sigma),
    }, False


def cmd_admissible(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group"))
    t = doc.get("triple")
    if not isinstance(t, dict):
        raise InputError("missing 'triple' object with S, Sp, SigmaN")
    triple = triple_from_names(
        group, t.get("S", []), t.get("Sp", []), _ints(t.get("SigmaN", []), "triple.SigmaN", opts.big_integers)
    )
    ok, blocks = is_admissible(triple)
    return {
        "admissible": ok,
        "triple": triple.describe(),
        "blocks": [
            {"item": b.item, "shape": b.shape, "labeling": [group.labels[i] for i in b.labeling]} for b in blocks or []
        ],
    }, False


def cmd_classify_sl2c(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group", "sl2xC"))
    gamma = parse_monoid(doc, group, opts.big_integers)
    fam = classify_sl2c(gamma)
    result: dict[str, Any] = {
        "smooth": fam is not None,
        "family": fam.item if fam else None,
        "params": fam.param_dict() if fam else None,
        "SigmaN": sorted(list(s) for s in sigma_n_sl2c(gamma)),
    }
    if opts.oracle:
        result["oracle"] = {
            "sigma_n_general_agrees": frozenset(r.coeffs for r in sigma_n_general(gamma)) == sigma_n_sl2c(gamma)
        }
    return result, False


def cmd_polytope(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group"))
    polytope, lattice, models = parse_polytope(doc, group, opts.big_integers)
    report = check_pair(polytope, lattice, models)
    return report.to_dict(), report.overall == UNDECIDED


def cmd_hilbert(doc: dict, opts) -> tuple[dict, bool]:
    group = parse_group(doc.get("group"))
    gamma = parse_monoid(doc, group, opts.big_integers)
    units, irr = gamma.hilbert_basis
    result: dict[str, Any] = {
        "units": [list(u) for u in units],
        "irreducibles": [list(v) for v in irr],
        "normal": gamma.is_normal(),
        "lattice_basis": [list(b) for b in gamma.lattice.basis],
    }
    if opts.oracle:
        result["oracle"] = {"box_points_generated": _hilbert_oracle(gamma, units, irr)}
    return result, False


def _hilbert_oracle(gamma: WeightMonoid, units, irr, radius: int = 3) -> bool:
    """Every cone-and-lattice point in a small box is an N-combination of the output."""
    regen = WeightMonoid(gamma.group, list(units) + [tuple(-x for x in u) for u in units] + list(irr), normal=False)
    if regen.lattice != gamma.lattice:
        return False
    pts = lattice_points_in_box(gamma.cone, gamma.lattice, radius)
    return all(regen.member(p) for p in pts)


def cmd_enumerate_sl(n: int, opts) -> tuple[dict, bool]:
    rows = enumerate_sl_fullrank(n, opts.max_param)
    counts: dict[str, int] = {}
    for r in rows:
        counts[r.case] = counts.get(r.case, 0) + 1
    return {
        "group": f"A{n}",
        "max_param": opts.max_param,
        "counts": counts,
        "all_ok": all(r.ok for r in rows),
        "instances": [r.to_dict() for r in rows],
    }, False


def cmd_enumerate_other(kind: str | None, n: int | None, opts) -> tuple[dict, bool]:
    targets = [(kind.upper(), n)] if kind else list(DESK_TYPES)
    rows = [r for k, m in targets for r in enumerate_other_types(k, m)]
    return {"all_ok": all(r.ok for r in rows), "instances": [r.to_dict() for r in rows]}, False


DOC_COMMANDS = {
    "check": cmd_check,
    "sigma-n": cmd_sigma_n,
    "s-gamma": cmd_s_gamma,
    "admissible": cmd_admissible,
    "classify-sl2c": cmd_classify_sl2c,
    "polytope": cmd_polytope,
    "hilbert": cmd_hilbert,
}


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _normalize(obj):
    return json.loads(json.dumps(obj, sort_keys=True, default=str))


def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(line for line in lines if line)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return json.dumps(v)
    if v is None:
        return "-"
    return str(v)


def _emit(command: str, doc: dict | None, result: dict, opts) -> None:
    if opts.format == "structured":
        options = {"oracle": opts.oracle, "max_param": opts.max_param, "big_integers": opts.big_integers}
        report = {"command": command, "input": doc, "options": options, "result": result}
        print(json.dumps(_normalize(report), indent=2, sort_keys=True))
    else:
        print(render_text(_normalize(result)))


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--strict", action="store_true", help="exit with status 3 on an undecided outcome")
    common.add_argument("--max-param", type=int, default=6, help="bound for sampled infinite families")
    common.add_argument("--oracle", action="store_true", help="run brute-force cross-checks")
    common.add_argument("--big-integers", action="store_true", help="accept integers beyond 64 bits")

    parser = argparse.ArgumentParser(prog="wmsmooth", description="Smoothness of weight monoids.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in DOC_COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--input", "-i", help="JSON problem file (default: standard input)")
        if name == "check":
            p.add_argument("--verify-certificate", metavar="REPORT",
                           help="recompute a structured report and compare")
    p = sub.add_parser("enumerate-sl", parents=[common])
    p.add_argument("n", type=int, help="rank n of SL(n+1), 1..8")
    p = sub.add_parser("enumerate-other", parents=[common])
    p.add_argument("type", nargs="?", help="B, C, D, E, F or G (all desk types when omitted)")
    p.add_argument("n", nargs="?", type=int)
    return parser


def _load(path: str | None) -> dict:
    try:
        text = open(path, encoding="utf-8").read() if path else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("the input document must be a JSON object")
    return doc


def _verify(report_path: str, opts) -> int:
    report = _load(report_path)
    if report.get("command") not in DOC_COMMANDS or "input" not in report or "result" not in report:
        raise InputError("not a structured report")
    recorded = argparse.Namespace(**vars(opts))
    for key, value in report.get("options", {}).items():
        setattr(recorded, key, value)
    result, _ = DOC_COMMANDS[report["command"]](report["input"], recorded)
    same = _normalize(result) == _normalize(report["result"])
    print("certificate verified" if same else "certificate diverges from recomputation")
    return EXIT_OK if same else EXIT_DIVERGED


def main(argv: Sequence[str] | None = None) -> int:
    opts = build_parser().parse_args(argv)
    try:
        if opts.command == "check" and opts.verify_certificate:
            return _verify(opts.verify_certificate, opts)
        doc = None
        if opts.command == "enumerate-sl":
            if not 1 <= opts.n <= 8:
                raise InputError("n must lie in 1..8")
            result, undecided = cmd_enumerate_sl(opts.n, opts)
        elif opts.command == "enumerate-other":
            if (opts.type is None) != (opts.n is None):
                raise InputError("give both a type and a rank, or neither")
            try:
                result, undecided = cmd_enumerate_other(opts.type, opts.n, opts)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        else:
            doc = _load(opts.input)
            result, undecided = DOC_COMMANDS[opts.command](doc, opts)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (KeyError, TypeError) as exc:
        print(f"error: malformed input ({exc!r})", file=sys.stderr)
        return EXIT_INVALID
    _emit(opts.command, doc, result, opts)
    if undecided and opts.strict:
        return EXIT_UNDECIDED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
