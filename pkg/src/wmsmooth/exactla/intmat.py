"""Integer and rational matrix routines.

Matrices are lists of rows.  Vectors are tuples.  Everything is exact:
entries are Python ints or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[int]]
Vector = tuple[int, ...]


class EmptyInput(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence, v: Sequence) -> int | Fraction:
    return sum(x * y for x, y in zip(u, v))


def columns(m: Sequence[Sequence]) -> list[Vector]:
    return [tuple(c) for c in zip(*m)] if m and m[0] else []


def from_columns(cols: Sequence[Sequence], nrows: int) -> Matrix:
    return [[c[i] for c in cols] for i in range(nrows)]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence) -> Vector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = vector_gcd(ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# Hermite normal form (column style)
# ---------------------------------------------------------------------------

def _col_op(m: Matrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    """Replace columns (i, j) by (a*ci + b*cj, c*ci + d*cj)."""
    for row in m:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Column Hermite normal form.

    Returns ``(H, U)`` with ``M @ U == H`` and ``U`` unimodular.  The nonzero
    columns of ``H`` come first and form a lower echelon basis of the column
    lattice: each has a positive pivot, entries right of a pivot vanish, and
    entries left of a pivot are reduced into ``[0, pivot)``.
    """
    h = [list(map(int, row)) for row in m]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = identity(ncols)
    p = 0
    for i in range(nrows):
        if p == ncols:
            break
        for j in range(p + 1, ncols):
            b = h[i][j]
            if b == 0:
                continue
            a = h[i][p]
            g, x, y = xgcd(a, b)
            # [[x, -b/g], [y, a/g]] has determinant 1
            _col_op(h, p, j, x, y, -b // g, a // g)
            _col_op(u, p, j, x, y, -b // g, a // g)
        piv = h[i][p]
        if piv == 0:
            continue
        if piv < 0:
            for mat in (h, u):
                for row in mat:
                    row[p] = -row[p]
            piv = -piv
        for k in range(p):
            q = h[i][k] // piv
            if q:
                for mat in (h, u):
                    for row in mat:
                        row[k] -= q * row[p]
        p += 1
    return h, u


def hnf_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Canonical basis (HNF columns) of the lattice spanned by ``vectors``."""
    if not vectors:
        return []
    h, _ = hermite_normal_form(from_columns(vectors, dim))
    return [c for c in columns(h) if any(c)]


def integer_kernel(m: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of the saturated lattice {x in Z^ncols : M x = 0}."""
    if not m:
        return [tuple(r) for r in identity(ncols)]
    h, u = hermite_normal_form(m)
    hc = columns(h)
    uc = columns(u)
    return [uc[j] for j in range(ncols) if not any(hc[j])]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` diagonal, d1 | d2 | ..."""
    d = [list(map(int, row)) for row in m]
    nr = len(d)
    nc = len(d[0]) if d else 0
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def row_op(i, j, a, b, c, e):
        # rows (i, j) <- (a ri + b rj, c ri + e rj)
        for mat in (d, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [a * x + b * y for x, y in zip(ri, rj)]
            mat[j] = [c * x + e * y for x, y in zip(ri, rj)]

    for t in range(min(nr, nc)):
        while True:
            nz = [
                (abs(d[i][j]), (i, j) != (t, t), i, j)
                for i in range(t, nr)
                for j in range(t, nc)
                if d[i][j]
            ]
            if not nz:
                break
            _, _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            for i in range(t + 1, nr):
                a, b = d[t][t], d[i][t]
                if b == 0:
                    continue
                if b % a == 0:
                    row_op(t, i, 1, 0, -(b // a), 1)
                else:
                    g, x, y = xgcd(a, b)
                    row_op(t, i, x, y, -b // g, a // g)
            for j in range(t + 1, nc):
                a, b = d[t][t], d[t][j]
                if b == 0:
                    continue
                if b % a == 0:
                    ops = (1, 0, -(b // a), 1)
                else:
                    g, x, y = xgcd(a, b)
                    ops = (x, y, -b // g, a // g)
                _col_op(d, t, j, *ops)
                _col_op(v, t, j, *ops)
            if any(d[i][t] for i in range(t + 1, nr)):
                continue
            piv = d[t][t]
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if d[i][j] % piv),
                None,
            )
            if bad is None:
                break
            row_op(t, bad, 1, 1, 0, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return d, u, v


def elementary_divisors(m: Sequence[Sequence[int]]) -> list[int]:
    d, _, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


# ---------------------------------------------------------------------------
# Determinants, rank, solving
# ---------------------------------------------------------------------------

def det(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(vectors: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def solve(cols: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...] | None:
    """Solve ``sum c_j cols[j] = target`` over Q; None if inconsistent.

    ``cols`` must be linearly independent, so the solution is unique.
    """
    k = len(cols)
    n = len(target)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    return tuple(aug[i][k] for i in range(k))


def solve_integer(cols: Sequence[Sequence[int]], target: Sequence) -> Vector | None:
    sol = solve(cols, target)
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    cols = [tuple(m[i][j] for i in range(n)) for j in range(n)]
    inv_cols = [solve(cols, tuple(int(i == j) for i in range(n))) for j in range(n)]
    return [[inv_cols[j][i] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Basis extension
# ---------------------------------------------------------------------------

def minors_gcd(m: Sequence[Sequence[int]]) -> int:
    """gcd of the maximal (ncols x ncols) minors of a tall matrix."""
    nrows, ncols = len(m), len(m[0])
    g = 0
    for rows in combinations(range(nrows), ncols):
        g = gcd(g, det([m[i] for i in rows]))
        if g == 1:
            break
    return g


def part_of_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """Whether the given vectors extend to a basis of Z^k.

    The vectors are the columns of a k x l matrix; the test is that the gcd
    of its l x l minors is 1.
    """
    if not vectors:
        raise EmptyInput("part_of_basis needs at least one vector")
    k = len(vectors[0])
    if len(vectors) > k:
        return False
    return minors_gcd(from_columns(vectors, k)) == 1


def part_of_basis_snf(vectors: Sequence[Sequence[int]]) -> bool:
    """Same predicate via elementary divisors (used as a cross-check)."""
    if not vectors:
        raise EmptyInput("part_of_basis needs at least one vector")
    k = len(vectors[0])
    if len(vectors) > k:
        return False
    divs = elementary_divisors(from_columns(vectors, k))
    return len(divs) == len(vectors) and all(x == 1 for x in divs)
