"""Small exact linear algebra over Fraction, sized for desk-scale geometry.

Matrices are lists/tuples of row tuples.  Nothing here is optimized beyond
what dimensions <= ~10 require; every routine is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Vec = tuple  # tuple of Fraction (or int) entries


def frac_vec(v: Sequence) -> tuple:
    return tuple(Fraction(x) for x in v)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vec_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a: Sequence, c) -> tuple:
    return tuple(x * c for x in a)


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by exact Gaussian elimination with partial pivoting."""
    n = len(rows)
    m = [list(map(Fraction, r)) for r in rows]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return result


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    m = [list(map(Fraction, r)) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rnk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rnk, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rnk], m[pivot] = m[pivot], m[rnk]
        inv = 1 / m[rnk][col]
        for r in range(rnk + 1, nrows):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, ncols):
                    m[r][c] -= factor * m[rnk][c]
        rnk += 1
        if rnk == nrows:
            break
    return rnk


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[tuple]:
    """Unique solution of a square system, or None if singular."""
    n = len(rows)
    m = [list(map(Fraction, r)) + [Fraction(rhs[i])] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        for c in range(col, n + 1):
            m[col][c] *= inv
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                for c in range(col, n + 1):
                    m[r][c] -= factor * m[col][c]
    return tuple(m[r][n] for r in range(n))


def inverse(rows: Sequence[Sequence]) -> list:
    n = len(rows)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        col = solve(rows, e)
        if col is None:
            raise ValueError("singular matrix")
        cols.append(col)
    return [tuple(cols[j][i] for j in range(n)) for i in range(n)]


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of {x : rows @ x = 0} over the rationals."""
    m = [list(map(Fraction, r)) for r in rows]
    nrows = len(m)
    pivots = []
    rnk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rnk, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rnk], m[pivot] = m[pivot], m[rnk]
        inv = 1 / m[rnk][col]
        for c in range(col, ncols):
            m[rnk][c] *= inv
        for r in range(nrows):
            if r != rnk and m[r][col] != 0:
                factor = m[r][col]
                for c in range(col, ncols):
                    m[r][c] -= factor * m[rnk][c]
        pivots.append(col)
        rnk += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -m[i][fcol]
        basis.append(tuple(v))
    return basis


def primitive(v: Sequence) -> tuple:
    """Scale a nonzero rational vector by a positive rational to coprime ints."""
    fracs = [Fraction(x) for x in v]
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def hyperplane_normal(diffs: Sequence[Sequence], dim: int) -> Optional[tuple]:
    """Normal of the hyperplane spanned by dim-1 difference vectors in R^dim.

    Returns None when the differences do not span a hyperplane.
    """
    basis = nullspace(diffs, dim)
    if len(basis) != 1:
        return None
    return basis[0]


def column_hnf_kernel(mat: list) -> list:
    """Basis of the integer kernel {x in Z^n : mat @ x = 0} of an int matrix.

    Runs integer column elimination (column-style Hermite reduction) with the
    transformation tracked; the columns that end up zero give the kernel.
    """
    if not mat:
        raise ValueError("need at least one row")
    nrows, ncols = len(mat), len(mat[0])
    a = [list(r) for r in mat]
    # transform starts as identity; kept column-aligned with a
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def col_swap(j, k):
        for r in range(nrows):
            a[r][j], a[r][k] = a[r][k], a[r][j]
        for r in range(ncols):
            u[r][j], u[r][k] = u[r][k], u[r][j]

    def col_addmul(j, k, q):
        # col_j += q * col_k
        for r in range(nrows):
            a[r][j] += q * a[r][k]
        for r in range(ncols):
            u[r][j] += q * u[r][k]

    pivot_col = 0
    for row in range(nrows):
        if pivot_col >= ncols:
            break
        # euclidean reduction across columns pivot_col..ncols-1 on this row
        while True:
            nz = [j for j in range(pivot_col, ncols) if a[row][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(a[row][j]))
            col_swap(pivot_col, jmin)
            done = True
            for j in range(pivot_col + 1, ncols):
                if a[row][j] != 0:
                    q = -(a[row][j] // a[row][pivot_col])
                    col_addmul(j, pivot_col, q)
                    if a[row][j] != 0:
                        done = False
            if done:
                break
        if a[row][pivot_col] != 0:
            pivot_col += 1
    kernel = []
    for j in range(pivot_col, ncols):
        if all(a[r][j] == 0 for r in range(nrows)):
            kernel.append(tuple(u[r][j] for r in range(ncols)))
    return kernel


def lattice_basis_of_span(directions: Sequence[Sequence], dim: int) -> list:
    """Basis of Z^dim intersected with the rational span of the directions.

    The span is encoded by its orthogonal-complement equations, cleared to
    integers, whose integer kernel is exactly the saturated sublattice.
    """
    dirs = [frac_vec(d) for d in directions]
    eqs = nullspace(dirs, dim)
    if not eqs:
        # directions span everything: the standard basis
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    int_eqs = [primitive(e) for e in eqs]
    return column_hnf_kernel(int_eqs)
