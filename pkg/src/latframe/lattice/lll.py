"""LLL reduction: a float pre-pass on int64 bases, then exact integral LLL.

The float pass only applies integer row operations, so it never changes the
lattice; the exact pass (Cohen's integral LLL on the Gram matrix) certifies
the Lovasz condition with the requested rational ``delta``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from numba import njit


@njit(cache=True)
def _gs_row(B, i, mu, bsq):
    n, d = B.shape
    r = np.zeros(i + 1)
    for j in range(i + 1):
        s = 0
        for t in range(d):
            s += B[i, t] * B[j, t]
        acc = float(s)
        for l in range(j):
            acc -= mu[j, l] * r[l]
        r[j] = acc
        if j < i:
            mu[i, j] = acc / bsq[j]
    bsq[i] = r[i]


@njit(cache=True)
def _lll_float(B, delta, max_iter):
    n, d = B.shape
    mu = np.zeros((n, n))
    bsq = np.zeros(n)
    _gs_row(B, 0, mu, bsq)
    k = 1
    it = 0
    while k < n and it < max_iter:
        it += 1
        _gs_row(B, k, mu, bsq)
        for _ in range(64):
            changed = False
            for j in range(k - 1, -1, -1):
                q = np.round(mu[k, j])
                if q != 0.0:
                    qi = np.int64(q)
                    for t in range(d):
                        B[k, t] -= qi * B[j, t]
                    for l in range(j):
                        mu[k, l] -= q * mu[j, l]
                    mu[k, j] -= q
                    changed = True
            if not changed:
                break
            _gs_row(B, k, mu, bsq)
        m = mu[k, k - 1]
        if bsq[k] < (delta - m * m) * bsq[k - 1]:
            for t in range(d):
                tmp = B[k, t]
                B[k, t] = B[k - 1, t]
                B[k - 1, t] = tmp
            _gs_row(B, k - 1, mu, bsq)
            if k > 1:
                k -= 1
        else:
            k += 1
    return it


def _round_div(a: int, b: int) -> int:
    """Nearest integer to ``a/b`` for ``b > 0``."""
    return (2 * a + b) // (2 * b)


def lll_gram(gram, delta: Fraction = Fraction(99, 100)):
    """Exact integral LLL on a positive definite integer Gram matrix.

    Returns ``(reduced_gram, U)`` with ``reduced_gram = U gram U^T`` and ``U``
    unimodular.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    p, q = delta.numerator, delta.denominator
    G = [[int(v) for v in row] for row in gram]
    n = len(G)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return G, U
    lam = [[0] * n for _ in range(n)]
    dd = [0] * (n + 1)  # dd[i+1] = d_i (Cohen indexing shifted by one)
    dd[0] = 1
    dd[1] = G[0][0]

    def red(k: int, l: int):
        if 2 * abs(lam[k][l]) > dd[l + 1]:
            r = _round_div(lam[k][l], dd[l + 1])
            rowl = G[l]
            rowk = G[k]
            for j in range(n):
                rowk[j] -= r * rowl[j]
            new_kk = rowk[k] - r * rowk[l]
            for j in range(n):
                if j != k:
                    G[j][k] = rowk[j]
            rowk[k] = new_kk
            uk, ul = U[k], U[l]
            for j in range(n):
                uk[j] -= r * ul[j]
            lam[k][l] -= r * dd[l + 1]
            lk, ll = lam[k], lam[l]
            for i in range(l):
                lk[i] -= r * ll[i]

    def swap(k: int, kmax: int):
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]
        U[k], U[k - 1] = U[k - 1], U[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        b = (dd[k - 1] * dd[k + 1] + lm * lm) // dd[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (dd[k + 1] * lam[i][k - 1] - lm * t) // dd[k]
            lam[i][k - 1] = (b * t + lm * lam[i][k]) // dd[k + 1]
        dd[k] = b

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = G[k][j]
                for i in range(j):
                    u = (dd[i + 1] * u - lam[k][i] * lam[j][i]) // dd[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u <= 0:
                        raise ValueError("Gram matrix is not positive definite")
                    dd[k + 1] = u
        while True:
            red(k, k - 1)
            lhs = q * dd[k + 1] * dd[k - 1]
            rhs = p * dd[k] * dd[k] - q * lam[k][k - 1] ** 2
            if lhs < rhs:
                swap(k, kmax)
                k = max(1, k - 1)
            else:
                for l in range(k - 2, -1, -1):
                    red(k, l)
                k += 1
                break
    return G, U


def lll_basis(basis, delta: Fraction = Fraction(99, 100)):
    """LLL-reduce the rows of an integer basis; returns a list of rows."""
    rows = [[int(v) for v in r] for r in basis]
    bound = max(abs(v) for r in rows for v in r)
    n = len(rows)
    if n > 1 and bound < 2**20:
        arr = np.array(rows, dtype=np.int64)
        _lll_float(arr, float(delta) - 1e-3 if float(delta) > 0.26 else float(delta), 10**7)
        rows = arr.tolist()
    from ..intmat import gram_rows, matmul

    _, U = lll_gram(gram_rows(rows), delta)
    return matmul(U, rows)
