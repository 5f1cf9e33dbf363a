"""Minimum weights: full enumeration and Brouwer-Zimmermann over GF(p)."""
from __future__ import annotations

from math import prod

import numpy as np
from numba import njit

from ..errors import BudgetExceeded, UnsupportedError
from .code import ZkCode, codeword_basis, euclidean_weights, iter_codewords
from .gfp import rref
from .matrices import _is_prime

DEFAULT_CAP = 2**28


def min_weight_bruteforce(code: ZkCode, metric: str = "hamming", cap: int = DEFAULT_CAP) -> int:
    """Exact minimum weight over all nonzero codewords."""
    if metric not in ("hamming", "euclidean"):
        raise ValueError(f"unknown metric {metric!r}")
    _, radices = codeword_basis(code)
    size = prod(radices)
    if size > cap:
        raise BudgetExceeded(f"|C| = {size} exceeds cap {cap}")
    if size == 1:
        raise ValueError("zero code has no nonzero codewords")
    best = None
    first = True
    for words in iter_codewords(code):
        if first:
            words = words[1:]
            first = False
        if not words.size:
            continue
        if metric == "hamming":
            w = np.count_nonzero(words, axis=1)
        else:
            w = euclidean_weights(words, code.k)
        m = int(w.min())
        best = m if best is None else min(best, m)
    return best


@njit(cache=True, nogil=True)
def _shell_min(R, p, w, best):
    """Least weight among codewords whose message has Hamming weight ``w``.

    Messages are taken up to scalars (leading coefficient 1).  ``R`` is the
    redundancy part of a systematic generator.
    """
    k, r = R.shape
    pos = np.zeros(w, np.int64)
    cf = np.ones(w, np.int64)
    part = np.zeros((w + 1, r), np.int64)
    t = 0
    while True:
        if pos[t] > k - (w - t):
            if t == 0:
                break
            t -= 1
            if t > 0 and cf[t] < p - 1:
                cf[t] += 1
            else:
                cf[t] = 1
                pos[t] += 1
            continue
        c = cf[t]
        row = pos[t]
        for j in range(r):
            part[t + 1, j] = (part[t, j] + c * R[row, j]) % p
        if t == w - 1:
            nz = 0
            for j in range(r):
                if part[w, j] != 0:
                    nz += 1
            if nz + w < best:
                best = nz + w
                if best <= w:
                    return best
            if t > 0 and cf[t] < p - 1:
                cf[t] += 1
            else:
                cf[t] = 1
                pos[t] += 1
        else:
            t += 1
            pos[t] = pos[t - 1] + 1
            cf[t] = 1
    return best


def information_sets(gen: np.ndarray, p: int) -> list[tuple[list[int], np.ndarray]]:
    """Greedy disjoint information sets and their redundancy matrices.

    Each set is found by row reduction with columns tried in increasing index
    order among those not yet used.
    """
    base, piv = rref(gen, p)
    k = len(piv)
    n = base.shape[1]
    remaining = list(range(n))
    out = []
    while len(remaining) >= k:
        red, piv = rref(base, p, col_order=remaining)
        if len(piv) < k:
            break
        rest = [c for c in range(n) if c not in piv]
        out.append((piv, red[:, rest].copy()))
        used = set(piv)
        remaining = [c for c in remaining if c not in used]
    return out


def min_hamming_weight_isd(code: ZkCode, verbose: bool = False) -> int:
    """Exact minimum Hamming distance of a code over a prime field.

    Messages of increasing weight are enumerated over every disjoint
    information set; once all weights ``<= w`` are done for ``m`` sets, any
    unseen codeword has weight at least ``m*(w+1)``.  The search stops when
    that lower bound reaches the best weight found.
    """
    p = code.k
    if not _is_prime(p):
        raise UnsupportedError(f"information-set search needs a prime modulus, got {p}")
    sets = information_sets(code.generator, p)
    k = len(sets[0][0])
    m = len(sets)
    upper = code.n + 1
    for w in range(1, k + 1):
        for j, (_, red) in enumerate(sets):
            upper = int(_shell_min(np.ascontiguousarray(red), p, w, upper))
            lower = (j + 1) * (w + 1) + (m - j - 1) * w
            if verbose:
                print(f"w={w} set={j} lower={lower} upper={upper}")
            if lower >= upper:
                return upper
    return upper
