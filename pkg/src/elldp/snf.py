"""Smith normal form over the integers, with unimodular transforms."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, S, V) with U @ m @ V == S diagonal, U and V unimodular.

    The diagonal entries are nonnegative and each divides the next.
    """
    S = [list(r) for r in m]
    rows, cols = len(S), len(S[0]) if S else 0
    U, V = identity(rows), identity(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):  # row_dst += f * row_src
        S[dst] = [a + f * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for M in (S, V):
            for r in M:
                r[dst] += f * r[src]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(S[i][j]), i, j) for i in range(t, rows)
                       for j in range(t, cols) if S[i][j]]
            if not entries:
                return U, S, V
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = S[t][t]
            done = True
            for i in range(t + 1, rows):
                q = S[i][t] // p
                add_row(t, i, -q)
                done &= S[i][t] == 0
            for j in range(t + 1, cols):
                q = S[t][j] // p
                add_col(t, j, -q)
                done &= S[t][j] == 0
            if not done:
                continue
            # divisibility: fold any offending row into row t and retry
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if S[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return U, S, V


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    _, S, _ = smith_normal_form(m)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def rational_inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse over Q by Gauss-Jordan elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def inverse_unimodular(m: Sequence[Sequence[int]]) -> Matrix:
    inv = rational_inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]
