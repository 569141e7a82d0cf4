"""Exact integer matrix algebra: Smith normal form with unimodular certificates.

Everything here works on plain Python ints (arbitrary precision), stored as
lists of lists.  The Smith normal form routine uses a smallest-nonzero-pivot
rule, which both bounds entry growth in practice and makes the computation
deterministic.  Correctness is certified by the returned transforms rather
than by the algorithm: ``u @ a @ v == diag(divisors)`` with ``u`` and ``v``
unimodular, and callers are expected to check that product when they care.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Exact product of two integer matrices (lists of lists)."""
    if not a:
        return []
    inner = len(a[0])
    if inner != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{inner} times {len(b)}x{len(b[0]) if b else 0}")
    cols = len(b[0]) if b else 0
    bt = [[b[i][j] for i in range(inner)] for j in range(cols)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def bareiss_determinant(a):
    """Fraction-free Gaussian elimination; exact determinant of a square
    integer matrix.  Independent of the SNF code paths, so it can audit them.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
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


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form ``u @ a @ v == d`` of an integer matrix.

    ``divisors`` are the nonneg diagonal entries d_1 | d_2 | ... (zeros
    trailing), ``rank`` the number of nonzero ones.  ``u`` and ``v`` are the
    unimodular row/column transforms, kept for audit.
    """

    divisors: tuple
    rank: int
    u: tuple
    v: tuple
    nrows: int
    ncols: int

    def diagonal_matrix(self):
        d = [[0] * self.ncols for _ in range(self.nrows)]
        for i, x in enumerate(self.divisors):
            d[i][i] = x
        return d

    def check(self, a):
        """True iff u*a*v reproduces the diagonal exactly."""
        u = [list(r) for r in self.u]
        v = [list(r) for r in self.v]
        return mat_mul(mat_mul(u, [list(r) for r in a]), v) == self.diagonal_matrix()


def _pivot_position(m, t, nrows, ncols):
    """Smallest |entry| > 0 in the trailing block, row-major tie-break."""
    best = None
    best_abs = None
    for i in range(t, nrows):
        row = m[i]
        for j in range(t, ncols):
            x = row[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best_abs is None or ax < best_abs:
                    best, best_abs = (i, j), ax
                    if ax == 1:
                        return best
    return best


def smith_normal_form(a):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns an :class:`SNFResult`.  Divisors are normalized nonnegative and
    satisfy the divisibility chain d_1 | d_2 | ...; the transforms are
    accumulated alongside so that ``result.check(a)`` holds.

    >>> r = smith_normal_form([[2, 0], [0, 3]])
    >>> r.divisors
    (1, 6)
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if any(len(row) != ncols for row in a):
        raise ValueError("ragged matrix")
    m = [[int(x) for x in row] for row in a]
    u = identity_matrix(nrows)
    v = identity_matrix(ncols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        mdst, msrc = m[dst], m[src]
        for j in range(ncols):
            mdst[j] += q * msrc[j]
        udst, usrc = u[dst], u[src]
        for j in range(nrows):
            udst[j] += q * usrc[j]

    def add_col(dst, src, q):
        for row in m:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    bound = min(nrows, ncols)
    while t < bound:
        pos = _pivot_position(m, t, nrows, ncols)
        if pos is None:
            break
        i, j = pos
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if m[t][t] < 0:
            negate_row(t)

        # Clear row/column t; remainders may force a smaller pivot, so loop.
        while True:
            pivot = m[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t] != 0:
                    add_row(i, t, -(m[i][t] // pivot))
                    if m[i][t] != 0:
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j] != 0:
                    add_col(j, t, -(m[t][j] // pivot))
                    if m[t][j] != 0:
                        dirty = True
            if not dirty:
                break
            pos = _pivot_position(m, t, nrows, ncols)
            i, j = pos
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            if m[t][t] < 0:
                negate_row(t)

        # Divisibility: fold any non-multiple of the pivot into row t and redo.
        pivot = m[t][t]
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if m[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1

    divisors = tuple(m[i][i] for i in range(bound))
    rank = sum(1 for d in divisors if d != 0)
    return SNFResult(
        divisors=divisors,
        rank=rank,
        u=tuple(tuple(row) for row in u),
        v=tuple(tuple(row) for row in v),
        nrows=nrows,
        ncols=ncols,
    )


def solve_integer_system(a, b):
    """One integer solution x of a @ x == b, or None when none exists.

    Free coordinates are set to zero.  Used to discover chain-level
    coefficients (e.g. fillings with prescribed boundary).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(b) != nrows:
        raise ValueError("right-hand side length mismatch")
    if ncols == 0:
        return [] if all(x == 0 for x in b) else None
    res = smith_normal_form(a)
    ub = [sum(res.u[i][j] * b[j] for j in range(nrows)) for i in range(nrows)]
    y = [0] * ncols
    for i in range(nrows):
        d = res.divisors[i] if i < len(res.divisors) else 0
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % d != 0:
                return None
            if i < ncols:
                y[i] = ub[i] // d
    return [sum(res.v[i][j] * y[j] for j in range(ncols)) for i in range(ncols)]


def rank_of(a):
    if not a or not a[0]:
        return 0
    return smith_normal_form(a).rank


def fraction_matrix_det(a):
    """Determinant over Q, for small audit matrices."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return det
