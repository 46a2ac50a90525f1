"""Exact linear algebra over the rationals and over number fields.

The rational path scales rows to integers and runs fraction-free
elimination with gcd stripping, so every certified rank and kernel vector
is exact.  A modular fast path (rank over a word-size prime) certifies
*full column rank* cheaply: a nonvanishing minor mod p is nonvanishing
over the rationals.  The reverse direction is never trusted: whenever a
kernel might exist, the exact elimination runs.

Matrices are lists of rows; entries are ``QQ``/int or ``FieldElement``
(any single number field per matrix).
"""

from __future__ import annotations

import math

import numpy as np

from .rationals import QQ, clear_denominators

_PRIMES = (999983, 1000003, 999979)


def _is_rational_entry(x) -> bool:
    return isinstance(x, (int,)) or type(x).__name__ in ("mpq", "Fraction")


def kernel_basis(rows, ncols: int | None = None):
    """Exact basis of the right kernel of a rectangular matrix.

    Returns a list of vectors (tuples) spanning {v : M v = 0}; the empty
    list iff the kernel is trivial.  Entries may be rationals or elements
    of one number field.
    """
    rows = [list(r) for r in rows]
    if rows:
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
    if ncols is None:
        raise ValueError("column count required for an empty matrix")
    if ncols == 0:
        return []
    if not rows:
        basis = []
        for j in range(ncols):
            v = [QQ(0)] * ncols
            v[j] = QQ(1)
            basis.append(tuple(v))
        return basis
    if all(_is_rational_entry(x) for r in rows for x in r):
        return kernel_basis_rational(rows)
    return _kernel_basis_field(rows)


def rank(rows, ncols: int | None = None) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    if all(_is_rational_entry(x) for r in rows for x in r):
        rk, _, _, _ = _int_echelon(_to_int_rows(rows))
        return rk
    n_kernel = len(_kernel_basis_field(rows))
    return ncols - n_kernel


# ------------------------------------------------------------ rational path

def _to_int_rows(rows):
    out = []
    for r in rows:
        ints, _ = clear_denominators(r)
        out.append(ints)
    return out


def _strip_row(row):
    g = 0
    for v in row:
        if v:
            g = math.gcd(g, abs(v))
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def _int_echelon(rows):
    """Fraction-free row echelon over the integers.

    Returns (rank, pivot_cols, echelon_rows, pivot_row_indices) where
    echelon_rows[i] has its pivot in column pivot_cols[i] and zeros in all
    earlier pivot columns below the staircase.
    """
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    echelon = []
    piv_cols = []
    active = [r for r in rows if any(r)]
    for col in range(ncols):
        best = None
        for idx, r in enumerate(active):
            if r[col]:
                if best is None or abs(r[col]) < abs(active[best][col]):
                    best = idx
        if best is None:
            continue
        piv = _strip_row(active.pop(best))
        pval = piv[col]
        nxt = []
        for r in active:
            v = r[col]
            if v:
                g = math.gcd(abs(pval), abs(v))
                a, b = pval // g, v // g
                r = _strip_row([a * x - b * y for x, y in zip(r, piv)])
                if not any(r):
                    continue
            nxt.append(r)
        active = nxt
        echelon.append(piv)
        piv_cols.append(col)
    return len(piv_cols), piv_cols, echelon, None


def kernel_basis_rational(rows):
    int_rows = _to_int_rows(rows)
    ncols = len(int_rows[0])
    rk, piv_cols, echelon, _ = _int_echelon(int_rows)
    free_cols = [c for c in range(ncols) if c not in set(piv_cols)]
    basis = []
    for fc in free_cols:
        v = [QQ(0)] * ncols
        v[fc] = QQ(1)
        # echelon rows are in increasing pivot-column order; solve bottom-up
        for i in range(len(echelon) - 1, -1, -1):
            row = echelon[i]
            pc = piv_cols[i]
            s = QQ(0)
            for c in range(pc + 1, ncols):
                if row[c] and v[c]:
                    s += QQ(row[c]) * v[c]
            v[pc] = -s / row[pc]
        basis.append(tuple(v))
    return basis


def solve_unique(rows, rhs):
    """Solve a square nonsingular rational system exactly."""
    n = len(rows)
    aug = [[QQ(x) for x in row] + [QQ(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


# ------------------------------------------------------------- modular path

def has_full_column_rank_certified(rows) -> bool:
    """True only with an exact certificate (a unit minor mod p); False means
    "maybe not" and callers must fall back to exact elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return False
    ncols = len(rows[0])
    if len(rows) < ncols:
        return False
    int_rows = _to_int_rows(rows)
    for p in _PRIMES:
        m = np.array([[v % p for v in r] for r in int_rows], dtype=np.int64)
        if _rank_mod_p(m, p) == ncols:
            return True
    return False


def rank_mod_p(rows, p: int | None = None) -> int:
    """Rank over Z/p: always a lower bound for the rational rank."""
    int_rows = _to_int_rows([list(r) for r in rows])
    p = p or _PRIMES[0]
    m = np.array([[v % p for v in r] for r in int_rows], dtype=np.int64)
    return _rank_mod_p(m, p)


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    nrows, ncols = m.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        nz = np.nonzero(m[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, col]), p - 2, p)
        m[r] = (m[r] * inv) % p
        below = m[r + 1:, col] != 0
        if below.any():
            factors = m[r + 1:, col][below][:, None]
            m[r + 1:][below] = (m[r + 1:][below] - factors * m[r][None, :]) % p
        r += 1
    return r


# ------------------------------------------------------- block decomposition

def split_components(rows):
    """Connected components of the bipartite row/column support graph.

    Returns a list of (row_indices, col_indices) pairs; rank and kernel
    computations decompose across them.  Zero rows are dropped; columns
    with empty support form singleton components (free kernel directions).
    """
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    parent = list(range(ncols))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    supports = []
    for r in rows:
        sup = [j for j, v in enumerate(r) if v]
        supports.append(sup)
        for j in sup[1:]:
            union(sup[0], j)
    groups: dict[int, list[int]] = {}
    for j in range(ncols):
        groups.setdefault(find(j), []).append(j)
    comps = []
    for cols in groups.values():
        colset = set(cols)
        ridx = [i for i, sup in enumerate(supports) if sup and sup[0] in colset]
        comps.append((ridx, sorted(cols)))
    comps.sort(key=lambda rc: rc[1][0])
    return comps


def rank_blockwise(rows) -> int:
    """Exact rational rank via independent support components."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    total = 0
    for ridx, cols in split_components(rows):
        if not ridx:
            continue
        sub = [[rows[i][j] for j in cols] for i in ridx]
        rk, _, _, _ = _int_echelon(_to_int_rows(sub))
        total += rk
    return total


def kernel_basis_blockwise(rows):
    """Exact rational kernel basis via independent support components."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    for ridx, cols in split_components(rows):
        if not ridx:
            for j in cols:
                v = [QQ(0)] * ncols
                v[j] = QQ(1)
                basis.append(tuple(v))
            continue
        sub = [[rows[i][j] for j in cols] for i in ridx]
        for kv in kernel_basis_rational(sub):
            v = [QQ(0)] * ncols
            for j, val in zip(cols, kv):
                v[j] = val
            basis.append(tuple(v))
    return basis


# ------------------------------------------------------------ field entries

def _kernel_basis_field(rows):
    """Gauss-Jordan over a number field (division-based, exact)."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    sample = next(x for r in rows for x in r if not _is_rational_entry(x))
    field = sample.field
    zero, one = field.zero(), field.one()

    def lift(x):
        return x if not _is_rational_entry(x) else field.rational(x)

    mat = [[lift(x) for x in r] for r in rows]
    piv_cols = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][col]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(col)
        r += 1
        if r == len(mat):
            break
    free_cols = [c for c in range(ncols) if c not in set(piv_cols)]
    basis = []
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(piv_cols):
            v[pc] = -mat[i][fc]
        basis.append(tuple(v))
    return basis
