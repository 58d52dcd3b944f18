"""Exact feasibility of small linear systems (phase-one simplex, Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """A point ``x >= 0`` with ``A x <= b``, or None when there is none."""
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))
    # columns: x (n), slacks (m), artificials (one per negative rhs)
    neg_rows = [i for i in range(m) if b[i] < 0]
    n_art = len(neg_rows)
    width = n + m + n_art
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a[i][j]) for j in range(n)]
        row += [Fraction(sign if j == i else 0) for j in range(m)]
        row += [Fraction(0)] * n_art
        if sign < 0:
            k = neg_rows.index(i)
            row[n + m + k] = Fraction(1)
            basis.append(n + m + k)
        else:
            basis.append(n + i)
        row.append(Fraction(sign * b[i]))
        rows.append(row)
    # minimise the sum of artificials: reduced costs of the phase-one objective
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        if basis[i] >= n + m:
            cost = [c - r for c, r in zip(cost, rows[i])]
    for j in range(n + m, width):
        cost[j] += 1
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded phase-one objective cannot happen
            raise AssertionError("phase-one objective unbounded")
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [x / piv for x in rows[i]]
        for r in range(m):
            if r != i and rows[r][enter] != 0:
                f = rows[r][enter]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[i])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[i])]
        basis[i] = enter
    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][-1]
    return tuple(x)


def strict_positive_combination_meets(
    vectors: Sequence[Sequence], constraints: Sequence[Sequence]
) -> bool:
    """Whether some combination with all coefficients > 0 has ``<v, s> <= 0`` for every s.

    By homogeneity the coefficients may be taken ``>= 1``; substituting
    ``c = 1 + x`` leaves a plain feasibility problem in ``x >= 0``.
    """
    k = len(vectors)
    if k == 0:
        return True
    pairings = [[sum(p * q for p, q in zip(v, s)) for v in vectors] for s in constraints]
    a = pairings
    b = [-sum(row) for row in pairings]
    return feasible(a, b) is not None


def witness_positive_combination(
    vectors: Sequence[Sequence], constraints: Sequence[Sequence]
) -> tuple[Fraction, ...] | None:
    """Coefficients c >= 1 realising :func:`strict_positive_combination_meets`."""
    if not vectors:
        return ()
    pairings = [[sum(p * q for p, q in zip(v, s)) for v in vectors] for s in constraints]
    x = feasible(pairings, [-sum(row) for row in pairings])
    if x is None:
        return None
    return tuple(1 + xi for xi in x)
