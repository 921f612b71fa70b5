"""Exact linear algebra over Q and Z.

Matrices are lists of rows. Entries may be ints or Fractions; rank uses
fraction-free Bareiss elimination after clearing denominators column by
column, which does not change the rank.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integral_columns(A, cols):
    out = [[A[i][j] for j in cols] for i in range(len(A))]
    for c in range(len(cols)):
        den = 1
        for row in out:
            v = row[c]
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        for row in out:
            row[c] = int(row[c] * den)
    return out


def bareiss_rank(M) -> int:
    """Rank of an integer matrix, destroying M."""
    rows = len(M)
    if rows == 0:
        return 0
    cols = len(M[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, rows):
            a = M[i][c]
            Mi, Mr = M[i], M[r]
            for k in range(c + 1, cols):
                Mi[k] = (p * Mi[k] - a * Mr[k]) // prev
            Mi[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def column_rank(A, cols) -> int:
    if not cols:
        return 0
    return bareiss_rank(_integral_columns(A, list(cols)))


def rref(A):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    R = [[Fraction(v) for v in row] for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [v * inv for v in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R[:r], pivots


def nullspace(A, ncols: int | None = None):
    """Basis of {x : A x = 0}, one vector per free column, free entry = 1."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if not A:
        R, pivots = [], []
    else:
        R, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def left_nullspace_of_columns(A, cols):
    """Basis of functionals y with y . A[:, c] = 0 for all c in cols."""
    m = len(A)
    At = [[A[i][c] for i in range(m)] for c in cols]
    return nullspace(At, m)


def row_space_basis(A):
    R, _ = rref(A)
    return R


# -- integer lattices -------------------------------------------------------

def hermite_normal_form(C):
    """Row-style Hermite normal form with a unimodular transform.

    Returns (H, U, pivots) with H = U C, the nonzero rows of H in echelon
    form with positive pivots at columns ``pivots`` and entries above each
    pivot reduced into [0, pivot). Zero rows are dropped from H; U keeps
    only the matching rows.
    """
    k = len(C)
    n = len(C[0]) if k else 0
    H = [list(map(int, row)) for row in C]
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    pivots = []
    r = 0
    for c in range(n):
        if r == k:
            break
        # gcd-combine everything at or below row r into row r
        for i in range(r + 1, k):
            a, b = H[r][c], H[i][c]
            if b == 0:
                continue
            g, s, t = _xgcd(a, b)
            ua, ub = a // g, b // g
            Hr, Hi, Ur, Ui = H[r], H[i], U[r], U[i]
            H[r] = [s * x + t * y for x, y in zip(Hr, Hi)]
            H[i] = [ua * y - ub * x for x, y in zip(Hr, Hi)]
            U[r] = [s * x + t * y for x, y in zip(Ur, Ui)]
            U[i] = [ua * y - ub * x for x, y in zip(Ur, Ui)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            f = H[i][c] // p
            if f:
                H[i] = [x - f * y for x, y in zip(H[i], H[r])]
                U[i] = [x - f * y for x, y in zip(U[i], U[r])]
        pivots.append(c)
        r += 1
    return H[:r], U[:r], pivots


def _xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) > 0."""
    old_r, rr = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_coordinates(H, pivots, F):
    """Integer x with x H = F, or None if F is not in the row lattice of H."""
    rest = list(map(int, F))
    x = []
    for row, c in zip(H, pivots):
        if any(rest[j] for j in range(c)):
            return None
        t, rem = divmod(rest[c], row[c])
        if rem:
            return None
        x.append(t)
        if t:
            rest = [a - t * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    return x
