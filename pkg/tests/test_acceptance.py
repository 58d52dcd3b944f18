"""Acceptance criteria 1-9.

Each ``criterion_N`` returns ``(passed, detail)``.  Under pytest the results
are collected and printed as one PASS/FAIL line per criterion at the end of
the run; ``python tests/test_acceptance.py`` prints the same lines directly.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest
from sympy import divisor_count, divisor_sigma

sys.path.insert(0, str(Path(__file__).parent))

from fixtures import HILBERT_FIXTURES, consecutive_sum, even_rank_matrix, gl2_model  # noqa: E402
from oracles import box_points, generated, snf_cokernel, snf_part_of_basis  # noqa: E402
from wmsmooth.errors import InvalidParams  # noqa: E402
from wmsmooth.enumerators import (  # noqa: E402
    DESK_TYPES,
    enumerate_other_types,
    enumerate_sl_fullrank,
    other_type_families,
    other_type_negatives,
    sl_lattices,
)
from wmsmooth.exactla import (  # noqa: E402
    IntegerLattice,
    RationalCone,
    det,
    elementary_divisors,
    hilbert_basis,
    part_of_basis,
)
from wmsmooth.monoid import WeightMonoid  # noqa: E402
from wmsmooth.polytope import SATISFIED, LocalModel, Polytope, check_pair  # noqa: E402
from wmsmooth.rootsys import build_group, gl2  # noqa: E402
from wmsmooth.sl2c import FAMILIES, classify_sl2c, family_generators, family_instance, sigma_label  # noqa: E402
from wmsmooth.sl2c import sigma_n_sl2c, sl2c_group  # noqa: E402
from wmsmooth.sphroots import s_gamma, s_gamma_witness, sigma_n_general, sigma_n_gsat  # noqa: E402
from wmsmooth.verdict import Outcome, Route, smooth_verdict  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def saturated_fixtures() -> tuple[tuple[str, WeightMonoid], ...]:
    """Every G-saturated monoid used by criteria 1-3."""
    out = []
    a1 = build_group(["A1"])
    out += [(f"A1 <{k}w>", WeightMonoid(a1, [(k,)])) for k in range(1, 13)]
    for n in range(2, 7):
        group = build_group([("A", n)])
        for case, params, lat in sl_lattices(n, 6):
            out.append((f"A{n} case {case} {params}", WeightMonoid.saturated(group, lat)))
    for kind, n in DESK_TYPES:
        group = build_group([(kind, n)])
        lats = [(c, lat) for c, lat, _ in other_type_families(kind, n)] + other_type_negatives(kind, n)
        out += [(f"{kind}{n} {c}", WeightMonoid.saturated(group, lat)) for c, lat in lats]
    return tuple(out)


def criterion_1():
    a1 = build_group(["A1"])
    smooth = [k for k in range(1, 13) if smooth_verdict(WeightMonoid(a1, [(k,)])).outcome is Outcome.SMOOTH]
    return smooth == [1, 2, 4], f"smooth for k in {smooth}"


def criterion_2():
    problems = []
    total = 0
    for n in range(2, 7):
        rows = enumerate_sl_fullrank(n, max_param=6)
        total += len(rows)
        problems += [f"A{n} {r.case} {dict(r.params)}" for r in rows if not r.ok]
        counts = {c: sum(r.case == c for r in rows) for c in ("1", "2", "3")}
        if counts["1"] != divisor_count(n + 1):
            problems.append(f"A{n}: {counts['1']} case-1 lattices")
        if n % 2 and counts["3"] != divisor_sigma((n + 1) // 2):
            problems.append(f"A{n}: {counts['3']} case-3 lattices")
        if n % 2 == 0 and counts["2"] != 6:
            problems.append(f"A{n}: {counts['2']} case-2 lattices")
    return not problems, f"{total} lattices" + (f"; mismatches: {problems}" if problems else "")


def criterion_3():
    problems = []
    smooth = negative = 0
    d4_weights = False
    for kind, n in DESK_TYPES:
        for r in enumerate_other_types(kind, n):
            if not r.ok:
                problems.append(f"{r.group} {r.case}")
            if r.expected_smooth:
                smooth += 1
            else:
                negative += 1
                d4_weights |= r.group == "D4" and r.case == "weight lattice" and r.outcome is Outcome.NOT_SMOOTH
    if not d4_weights:
        problems.append("D4 weight lattice not reported NotSmooth")
    return not problems, f"{smooth} family lattices, {negative} negatives" + (f"; {problems}" if problems else "")


def _sl2c_grid():
    for item, (names, _) in FAMILIES.items():
        for values in itertools.product(range(-6, 7), repeat=len(names)):
            params = dict(zip(names, values))
            try:
                family_generators(item, **params)
            except InvalidParams:
                continue
            yield item, params


def criterion_4():
    problems = []
    count = 0
    for item, params in _sl2c_grid():
        count += 1
        m = family_instance(item, **params)
        fam = classify_sl2c(m)
        if fam is None or fam.item != item or sigma_n_sl2c(m) != sigma_label(FAMILIES[item][1]):
            problems.append((item, params))
    neg = smooth_verdict(WeightMonoid(sl2c_group(), [(3, 0), (0, 1)]))
    if neg.outcome is not Outcome.NOT_SMOOTH:
        problems.append("<3w, e> not NotSmooth")
    return not problems, f"{count} grid instances" + (f"; {problems[:5]}" if problems else "")


def criterion_5():
    bad = [name for name, m in saturated_fixtures() if sigma_n_general(m) != sigma_n_gsat(m)]
    return not bad, f"{len(saturated_fixtures())} fixtures" + (f"; disagree on {bad}" if bad else "")


def criterion_6():
    problems = []
    for a in (1, 2, 3):
        v = smooth_verdict(gl2_model(a))
        if not (v.outcome is Outcome.SMOOTH and v.route is Route.REFLECTIVE):
            problems.append(f"a={a}: {v.outcome.value}")
        elif v.certificate.get("semisimple_type") != "A1" or v.certificate.get("SigmaN") != ["a"]:
            problems.append(f"a={a}: certificate {v.certificate}")
    lam1, lam2 = (1, 1), (1, -2)
    report = check_pair(Polytope(gl2(), [(0, 0), lam1, lam2]), IntegerLattice.spanned_by([lam1, lam2], 2))
    if not (report.global_route and report.overall == SATISFIED):
        problems.append(f"triangle: {report.overall}, global route {report.global_route}")
    return not problems, "GL(2) models a=1,2,3 and triangle" + (f"; {problems}" if problems else "")


def criterion_7():
    a2 = build_group(["A2"])
    target = sl2c_group()
    models = [
        LocalModel((Fraction(1), Fraction(0)), target, ((0, 1), (-2, -1)), ((1, 0),)),
        LocalModel((Fraction(0), Fraction(1)), target, ((1, 0), (-1, -2)), ((0, 0),)),
    ]
    triangle = Polytope(a2, [(0, 0), (1, 0), (0, 1)])
    problems = []
    for scale, origin in ((1, {(1, 0), (0, 1)}), (2, {(2, 0), (0, 2)})):
        report = check_pair(triangle, IntegerLattice.standard(2).scaled(scale), models)
        if report.overall != SATISFIED:
            problems.append(f"lattice {scale}L: {report.overall}")
        zero = next(v for v in report.vertices if not any(v.vertex))
        if {tuple(g) for g in zero.monoid_generators} != origin:
            problems.append(f"lattice {scale}L: vertex 0 monoid {zero.monoid_generators}")
    return not problems, "conv(0, w1, w2) with L and 2L" + (f"; {problems}" if problems else "")


def criterion_8():
    problems = []
    group = build_group(["A5"])
    # pairings with the coroots are the fundamental-weight coordinates
    c = [list(consecutive_sum(group, i + 1)) for i in range(1, 4)] + [[3 * x for x in group.fundamental_weights[3]]]
    printed = [[-1, 1, 1, -1, 0], [0, -1, 1, 1, -1], [0, 0, -1, 1, 1], [0, 0, 0, 3, 0]]
    if c != printed:
        problems.append(f"C = {c}")
    divisors = [abs(x) for x in elementary_divisors(c)]
    free = 5 - sum(1 for x in divisors if x)
    torsion = [x for x in divisors if x > 1]
    if (free, torsion) != (1, [3]) or snf_cokernel(c) != (1, [3]):
        problems.append(f"cokernel Z^{free} + {torsion}")
    dets = {n: det(even_rank_matrix(n)[1]) for n in (2, 4, 6)}
    if any(v != 1 for v in dets.values()):
        # |det| = 1 still makes the rows a basis; only the stated sign is off
        unimodular = all(abs(v) == 1 for v in dets.values())
        problems.append(f"det(A) = {dets}, expected 1" + (" (unimodular)" if unimodular else ""))
    return not problems, "; ".join(problems) if problems else f"cokernel Z + Z/3, det(A) = {dets}"


def criterion_9():
    problems = []
    for gens, basis in HILBERT_FIXTURES:
        dim = len(gens[0])
        _, irr = hilbert_basis(RationalCone.from_generators(gens, dim), IntegerLattice.spanned_by(basis, dim))
        pts, normals = box_points(gens, basis, 5)
        if not all(generated(p, irr, normals) for p in pts):
            problems.append(f"Hilbert basis of {gens}")
    rng = random.Random(20240)
    for _ in range(200):
        k, l = rng.randint(1, 5), rng.randint(1, 5)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(k)) for _ in range(l)]
        if part_of_basis(vecs) != snf_part_of_basis(vecs):
            problems.append(f"part_of_basis {vecs}")
    for name, m in saturated_fixtures():
        sigma = sigma_n_gsat(m)
        union = s_gamma(m, sigma)
        if union and s_gamma_witness(m, union, sigma) is None:
            problems.append(f"S_Gamma infeasible on {name}")
    rng = random.Random(77)
    for _ in range(50):
        dim = rng.randint(2, 4)
        gens = [tuple([rng.randint(1, 4)] + [rng.randint(-3, 3) for _ in range(dim - 1)])
                for _ in range(rng.randint(1, 6))]
        cone = RationalCone.from_generators(gens, dim)
        if not cone.dual().dual().same_as(cone):
            problems.append(f"dual of dual {gens}")
    return not problems, "Hilbert regeneration, part-of-basis, S_Gamma, duality" + (
        f"; {problems[:5]}" if problems else ""
    )


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


def run_criterion(i: int) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        ok, detail = CRITERIA[i]()
    except Exception as exc:  # a crash is a failed criterion, reported like any other
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    detail = f"{detail} ({time.perf_counter() - start:.1f}s)"
    RESULTS[i] = (ok, detail)
    return ok, detail


def summary_lines() -> list[str]:
    return [f"criterion {i}: {'PASS' if ok else 'FAIL'} ({detail})" for i, (ok, detail) in sorted(RESULTS.items())]


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = run_criterion(number)
    assert ok, detail


if __name__ == "__main__":
    for i in CRITERIA:
        run_criterion(i)
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
