"""Row reduction over prime fields GF(p) on int64 arrays."""
from __future__ import annotations

import numpy as np


def rref(a, p: int, col_order=None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod ``p`` and the pivot columns.

    ``col_order`` fixes the order in which columns are tried as pivots.
    Zero rows are dropped from the result.
    """
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    order = range(cols) if col_order is None else col_order
    pivots: list[int] = []
    r = 0
    for c in order:
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0 mod p}``."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, c in enumerate(piv):
            out[t, c] = (-r[i, f]) % p
    return out


def in_rowspace(v, basis, p: int) -> bool:
    b = np.asarray(basis, dtype=np.int64)
    if b.size == 0:
        return not np.any(np.asarray(v) % p)
    return rank(np.vstack([b, np.asarray(v, dtype=np.int64)]), p) == rank(b, p)
