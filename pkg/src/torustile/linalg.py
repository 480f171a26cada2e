"""Exact linear algebra: GF(2) elimination on int bitsets and dense
integer Smith normal form with unimodular transforms."""

from __future__ import annotations

from typing import List, Optional, Tuple


# ---------------------------------------------------------------------------
# GF(2): vectors are ints, bit j = coordinate j
# ---------------------------------------------------------------------------

def f2_rank(rows: List[int]) -> int:
    work = [r for r in rows if r]
    rank = 0
    while work:
        pivot_row = work.pop()
        pivot = pivot_row & -pivot_row
        rank += 1
        work = [r ^ pivot_row if r & pivot else r for r in work]
        work = [r for r in work if r]
    return rank


def f2_row_reduce(rows: List[int]) -> List[int]:
    """A reduced basis (list of pivot rows) of the span of the rows."""
    basis: List[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    # back-substitute so each pivot appears in only one basis vector
    for i, b in enumerate(basis):
        pivot = 1 << (b.bit_length() - 1)
        for j in range(len(basis)):
            if j != i and basis[j] & pivot:
                basis[j] ^= b
    return sorted(basis, reverse=True)


def f2_in_span(vec: int, basis: List[int]) -> bool:
    for b in basis:
        pivot = 1 << (b.bit_length() - 1)
        if vec & pivot:
            vec ^= b
    return vec == 0


def f2_kernel(matrix: List[List[int]], ncols: int) -> List[int]:
    """Kernel basis of the matrix (rows of length ncols) acting on column
    vectors; vectors returned as bitsets over the ncols coordinates."""
    # transpose into column bitsets and eliminate tracking combinations
    cols = []
    for j in range(ncols):
        col = 0
        for i, row in enumerate(matrix):
            if row[j]:
                col |= 1 << i
        cols.append((col, 1 << j))
    kernel = []
    basis: List[Tuple[int, int]] = []
    for col, combo in cols:
        for bcol, bcombo in basis:
            pivot = bcol & -bcol
            if col & pivot:
                col ^= bcol
                combo ^= bcombo
        if col:
            basis.append((col, combo))
        else:
            kernel.append(combo)
    return kernel


# ---------------------------------------------------------------------------
# integers
# ---------------------------------------------------------------------------

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for k in range(inner):
            aik = arow[k]
            if aik:
                brow = b[k]
                for j in range(cols):
                    orow[j] += aik * brow[j]
    return out


def smith_normal_form(matrix: Matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (S, U, V) with U @ matrix @ V = S diagonal, U, V unimodular,
    and the diagonal entries nonnegative with d_i | d_{i+1}."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    s = [row[:] for row in matrix]
    u = identity(m)
    v = identity(n)

    def row_op(i, j, c):  # row_i -= c * row_j
        s[i] = [a - c * b for a, b in zip(s[i], s[j])]
        u[i] = [a - c * b for a, b in zip(u[i], u[j])]

    def col_op(i, j, c):  # col_i -= c * col_j
        for row in s:
            row[i] -= c * row[j]
        for row in v:
            row[i] -= c * row[j]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        s[i] = [-a for a in s[i]]
        u[i] = [-a for a in u[i]]

    t = 0
    while t < min(m, n):
        # find the smallest nonzero pivot in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] and (best is None or abs(s[i][j]) < best[0]):
                    best = (abs(s[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        swap_rows(t, bi)
        swap_cols(t, bj)
        if s[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, m):
            if s[i][t]:
                q = s[i][t] // s[t][t]
                row_op(i, t, q)
                if s[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if s[t][j]:
                q = s[t][j] // s[t][t]
                col_op(j, t, q)
                if s[t][j]:
                    dirty = True
        if dirty:
            continue
        # ensure divisibility of the rest of the block by the pivot
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if s[i][j] % s[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            # add the offending row to row t and restart the pivot step
            row_op(t, offender, -1)
            continue
        t += 1
    return s, u, v


def integer_kernel(matrix: Matrix, ncols: int) -> List[List[int]]:
    """A basis (as column vectors) of the integer kernel; the basis spans a
    saturated sublattice because V is unimodular."""
    if not matrix:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    s, _, v = smith_normal_form(matrix)
    m = len(s)
    rank = sum(1 for i in range(min(m, ncols)) if s[i][i])
    return [[v[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def solve_integer(matrix: Matrix, target: List[int]) -> Optional[List[int]]:
    """Solve matrix @ x = target over the integers, or None."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if m == 0:
        return [0] * n
    s, u, v = smith_normal_form(matrix)
    rhs = [sum(u[i][k] * target[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = s[i][i] if i < n else 0
        if d:
            if rhs[i] % d:
                return None
            y[i] = rhs[i] // d
        elif rhs[i]:
            return None
    return [sum(v[i][k] * y[k] for k in range(n)) for i in range(n)]


def cokernel_invariants(matrix: Matrix, ambient_rank: int
                        ) -> Tuple[int, List[int], Matrix]:
    """Invariants of Z^ambient_rank / column-lattice(matrix).

    Returns (free_rank, invariant_factors > 1, generator_matrix) where the
    columns of generator_matrix list representatives: first the torsion
    generators (matching the invariant factors), then the free generators.
    """
    if ambient_rank == 0:
        return 0, [], []
    if not matrix or not matrix[0]:
        return ambient_rank, [], identity(ambient_rank)
    s, u, _ = smith_normal_form(matrix)
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    rank = sum(1 for d in diag if d)
    torsion = [d for d in diag if d > 1]
    free_rank = ambient_rank - rank
    # coker generators pull back through u^{-1}: columns of u^{-1} = rows of
    # the inverse; compute u^{-1} by solving u @ x = e_i via SNF of u (u is
    # unimodular, so plain Gaussian style back-substitution works too)
    uinv = matrix_inverse_unimodular(u)
    gens: Matrix = []
    for i, d in enumerate(diag):
        if d > 1:
            gens.append([uinv[r][i] for r in range(ambient_rank)])
    for i in range(rank, ambient_rank):
        gens.append([uinv[r][i] for r in range(ambient_rank)])
    # transpose into column-per-generator layout
    return free_rank, torsion, [[gens[g][r] for g in range(len(gens))]
                                for r in range(ambient_rank)]


def matrix_inverse_unimodular(u: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    n = len(u)
    s, left, right = smith_normal_form(u)
    for i in range(n):
        if s[i][i] != 1:
            raise ValueError("matrix is not unimodular")
    return mat_mul(right, left)
