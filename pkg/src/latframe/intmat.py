"""Exact integer matrix helpers (Python ints throughout).

Matrices are lists of row lists or anything ``numpy`` can turn into a 2-d
array; results are returned as lists of lists of ``int``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

IntMatrix = list[list[int]]


def as_int_rows(a) -> IntMatrix:
    if isinstance(a, np.ndarray):
        return [[int(v) for v in row] for row in a.tolist()]
    return [[int(v) for v in row] for row in a]


def identity(n: int, scale: int = 1) -> IntMatrix:
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: IntMatrix) -> IntMatrix:
    return [list(col) for col in zip(*a)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def gram_rows(a: IntMatrix) -> IntMatrix:
    """Return ``A A^T`` exactly, using int64 numpy when it cannot overflow."""
    if not a:
        return []
    bound = max(abs(v) for row in a for v in row)
    n = len(a[0])
    if bound and bound * bound * n < 2**62:
        arr = np.array(a, dtype=np.int64)
        return (arr @ arr.T).tolist()
    return [[sum(x * y for x, y in zip(r, s)) for s in a] for r in a]


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
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
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def inverse(a: IntMatrix) -> list[list[Fraction]]:
    """Exact inverse over the rationals (Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv_p = 1 / m[col][col]
        m[col] = [v * inv_p for v in m[col]]
        pivot_row = m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], pivot_row)]
    return [row[n:] for row in m]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(generators: Sequence[Sequence[int]], modulus: int | None = None) -> IntMatrix:
    """Row-style Hermite normal form of a full-rank integer lattice.

    The rows of ``generators`` span a lattice of rank ``n`` (the number of
    columns).  ``modulus`` must be a positive integer ``D`` with
    ``D * Z^n`` contained in the lattice; when omitted, ``|det|`` of the first
    ``n`` generators is used (these must then be independent).

    The result is upper triangular with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``.
    """
    rows = as_int_rows(generators)
    if not rows:
        raise ValueError("no generators")
    n = len(rows[0])
    if modulus is None:
        modulus = abs(det(rows[:n])) if len(rows) >= n else 0
        if modulus == 0:
            raise ValueError("first n generators are dependent; pass modulus")
    D = int(modulus)
    if D <= 0:
        raise ValueError("modulus must be positive")
    work = [[v % D for v in row] for row in rows]
    work = [row for row in work if any(row)]
    basis: IntMatrix = []
    for i in range(n):
        extra = [0] * n
        extra[i] = D
        active = [row for row in work if row[i] % D != 0]
        rest = [row for row in work if row[i] % D == 0]
        pivot = extra
        for row in active:
            a, b = pivot[i], row[i]
            g, u, v = _xgcd(a, b)
            pa, pb = a // g, b // g
            new_pivot = [(u * x + v * y) for x, y in zip(pivot, row)]
            other = [(pb * x - pa * y) for x, y in zip(pivot, row)]
            pivot = new_pivot
            for j in range(i + 1, n):
                other[j] %= D
            other[i] = 0
            if any(other):
                rest.append(other)
            for j in range(i + 1, n):
                pivot[j] %= D
        if pivot[i] < 0:
            pivot = [-x for x in pivot]
        pivot = [x % D if j > i else x for j, x in enumerate(pivot)]
        for row in rest:
            row[i] = 0
        work = [row for row in rest if any(row)]
        basis.append(pivot)
    # reduce entries above pivots
    for i in range(n):
        p = basis[i][i]
        for r in range(i):
            q = basis[r][i] // p
            if q:
                basis[r] = [x - q * y for x, y in zip(basis[r], basis[i])]
    return basis


def solve_upper(h: IntMatrix, v: Sequence[int]) -> list[int] | None:
    """Integer ``x`` with ``x @ h == v`` for upper-triangular ``h``, or None."""
    n = len(h)
    rem = [int(t) for t in v]
    if len(rem) != len(h[0]):
        raise ValueError("dimension mismatch")
    x = [0] * n
    for i in range(n):
        p = h[i][i]
        if rem[i] % p:
            return None
        q = rem[i] // p
        x[i] = q
        if q:
            row = h[i]
            for j in range(i, len(rem)):
                rem[j] -= q * row[j]
    if any(rem):
        return None
    return x


def content(rows: IntMatrix) -> int:
    g = 0
    for row in rows:
        for v in row:
            g = gcd(g, v)
    return g
