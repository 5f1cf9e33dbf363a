"""numba enumeration kernel (Schnorr-Euchner order, half-space, exact leaves)."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def gram_schmidt(G):
    """Float ``mu`` (row ``i`` against ``j < i``) and squared GS norms of a Gram."""
    n = G.shape[0]
    mu = np.zeros((n, n))
    bsq = np.zeros(n)
    r = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            acc = float(G[i, j])
            for l in range(j):
                acc -= mu[j, l] * r[i, l]
            r[i, j] = acc
            if j < i:
                mu[i, j] = acc / bsq[j]
        bsq[i] = r[i, i]
    return mu, bsq


@njit(cache=True, nogil=True)
def enumerate_tree(mu, bsq, G, t_float, t_int, prefix, stop_level, max_nodes,
                   counts, vec_buf, out_prefix):
    """Walk the enumeration tree below a fixed prefix of top coordinates.

    Returns ``(nodes, exhausted, n_vectors, n_prefixes)``.  With
    ``stop_level == 0`` every lattice vector ``x != 0`` (one of each +- pair)
    with float partial norm ``<= t_float`` is checked exactly and counted in
    ``counts[x G x^T] += 2`` when ``x G x^T <= t_int``.  With
    ``stop_level > 0`` the surviving coordinate prefixes down to that level are
    written to ``out_prefix`` instead.
    """
    n = bsq.shape[0]
    plen = prefix.shape[0]
    x = np.zeros(n, np.int64)
    c = np.zeros(n)
    l = np.zeros(n + 1)
    dx = np.zeros(n, np.int64)
    ddx = np.zeros(n, np.int64)
    zab = np.zeros(n + 1, np.bool_)
    # sig[j, i] = -sum_{l >= i} x[l] mu[l, j]; rows are refreshed lazily from beg[j]
    sig = np.zeros((n, n + 1))
    beg = np.full(n, n - 1, np.int64)
    nodes = 0
    nvec = 0
    npre = 0
    zab[n] = True
    for t in range(plen):
        j = n - 1 - t
        x[j] = prefix[t]
        cj = 0.0
        for i in range(j + 1, n):
            cj -= mu[i, j] * x[i]
        c[j] = cj
        diff = x[j] - cj
        l[j] = l[j + 1] + bsq[j] * diff * diff
        zab[j] = zab[j + 1] and x[j] == 0
        if l[j] > t_float:
            return nodes, False, nvec, npre
    top = n - plen
    j = top - 1
    if j < 0:
        return nodes, False, nvec, npre
    # enter level j
    for i in range(beg[j], j, -1):
        sig[j, i] = sig[j, i + 1] - x[i] * mu[i, j]
    if j > 0 and beg[j - 1] < beg[j]:
        beg[j - 1] = beg[j]
    beg[j] = j
    cj = sig[j, j + 1]
    c[j] = cj
    if zab[j + 1]:
        x[j] = 0
    else:
        x[j] = np.int64(np.round(cj))
        ddx[j] = 1 if cj >= x[j] else -1
        dx[j] = ddx[j]
    if j > 0 and beg[j - 1] < j:
        beg[j - 1] = j
    exhausted = False
    while True:
        nodes += 1
        if nodes > max_nodes:
            exhausted = True
            break
        diff = x[j] - c[j]
        lj = l[j + 1] + bsq[j] * diff * diff
        descend = False
        if lj <= t_float:
            if j == stop_level:
                if stop_level == 0:
                    nonzero = not zab[1] or x[0] != 0
                    if nonzero:
                        q = np.int64(0)
                        for a in range(n):
                            if x[a] != 0:
                                s = np.int64(0)
                                for b in range(n):
                                    s += G[a, b] * x[b]
                                q += x[a] * s
                        if q <= t_int:
                            counts[q] += 2
                            if nvec < vec_buf.shape[0]:
                                for a in range(n):
                                    vec_buf[nvec, a] = x[a]
                            nvec += 1
                else:
                    if npre < out_prefix.shape[0]:
                        for a in range(n - stop_level):
                            out_prefix[npre, a] = x[n - 1 - a]
                    npre += 1
            else:
                descend = True
        if descend:
            l[j] = lj
            zab[j] = zab[j + 1] and x[j] == 0
            j -= 1
            for i in range(beg[j], j, -1):
                sig[j, i] = sig[j, i + 1] - x[i] * mu[i, j]
            if j > 0 and beg[j - 1] < beg[j]:
                beg[j - 1] = beg[j]
            beg[j] = j
            cj = sig[j, j + 1]
            c[j] = cj
            if zab[j + 1]:
                x[j] = 0
            else:
                x[j] = np.int64(np.round(cj))
                ddx[j] = 1 if cj >= x[j] else -1
                dx[j] = ddx[j]
            if j > 0 and beg[j - 1] < j:
                beg[j - 1] = j
            continue
        if lj > t_float:
            # siblings further out cannot fit; climb
            j += 1
            if j >= top:
                break
        # next sibling at level j
        if zab[j + 1]:
            x[j] += 1
        else:
            x[j] += dx[j]
            ddx[j] = -ddx[j]
            dx[j] = ddx[j] - dx[j]
        if j > 0 and beg[j - 1] < j:
            beg[j - 1] = j
    return nodes, exhausted, nvec, npre
