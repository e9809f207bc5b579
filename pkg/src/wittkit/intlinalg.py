"""Exact linear algebra over the integers.

Matrices are lists of lists of Python ints.  Provides the Smith normal
form with unimodular transforms, integer kernel bases, and solutions of
linear Diophantine systems -- everything group cohomology needs.  All
routines are pure and reentrant.
"""

from __future__ import annotations


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def mat_vec(a, v) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def smith_normal_form(a) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (s, u, v) with s = u a v, u and v unimodular, s diagonal with
    s[0][0] | s[1][1] | ... and nonnegative diagonal entries."""
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(row) for row in a]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        s[dst] = [x + q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # find a nonzero pivot of minimal absolute value in the submatrix
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    add_row(t, i, -q)
                    if s[i][t]:
                        swap_rows(t, i)
                        dirty = True
            # clear the pivot row
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    add_col(t, j, -q)
                    if s[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility: the pivot must divide the rest of the submatrix
            fixup = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if s[i][j] % s[t][t]:
                        fixup = i
                        break
                if fixup is not None:
                    break
            if fixup is None:
                break
            add_row(fixup, t, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def diagonal_of(s) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def snf_rank(s) -> int:
    return sum(1 for d in diagonal_of(s) if d != 0)


def kernel_basis(a) -> list[list[int]]:
    """Basis of the integer kernel lattice of a (as column vectors, returned
    as a list of vectors).  The basis spans a direct summand, so every
    integer kernel vector is an integer combination of it."""
    m = len(a)
    n = len(a[0]) if m else 0
    if n == 0:
        return []
    s, _, v = smith_normal_form(a)
    r = snf_rank(s)
    return [[v[i][j] for i in range(n)] for j in range(r, n)]


def solve(a, b) -> list[int] | None:
    """One integer solution x of a x = b, or None when none exists."""
    m = len(a)
    n = len(a[0]) if m else 0
    s, u, v = smith_normal_form(a)
    ub = mat_vec(u, b)
    r = snf_rank(s)
    y = [0] * n
    for i in range(min(m, n)):
        d = s[i][i]
        if d:
            q, rem = divmod(ub[i], d)
            if rem:
                return None
            y[i] = q
    for i in range(r, m):
        if ub[i]:
            return None
    return mat_vec(v, y)


def det(a) -> int:
    """Determinant of a square integer matrix by fraction-free (Bareiss)
    elimination; every division is exact and entry growth stays polynomial."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def abs_det(a) -> int:
    return abs(det(a))


def invariant_factor_cokernel(gens: list[list[int]], ambient_rank: int) -> list[int]:
    """Invariant factors of Z^ambient_rank / <gens>, zeros meaning free
    summands, 1-entries dropped."""
    if ambient_rank == 0:
        return []
    if not gens:
        return [0] * ambient_rank
    cols = [[g[i] for g in gens] for i in range(ambient_rank)]
    s, _, _ = smith_normal_form(cols)
    diag = diagonal_of(s)
    out = [d for d in diag if d not in (0, 1)]
    free = ambient_rank - snf_rank(s)
    return out + [0] * free
