"""Short-vector enumeration, minimum norms and theta coefficients.

Pruning uses float Gram-Schmidt data with a small safety margin; every vector
that is counted has its norm recomputed exactly in integer arithmetic.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path

import numpy as np

from . import _kernel
from .core import GramLattice, ScaledLattice, as_gram_lattice
from .lll import lll_basis, lll_gram

DEFAULT_BUDGET = 10**10
CHECKPOINT_EVERY = 10**8
_MARGIN = 1e-7
_TARGET_SUBTREES = 256


@dataclass
class ShortVectorReport:
    """Counts per exact norm for all nonzero vectors with norm ``<= bound``.

    ``vectors`` holds one of each +- pair (ambient coordinates for a
    :class:`ScaledLattice`, Gram coordinates otherwise) up to ``collect``.
    """

    bound: Fraction
    counts: dict[Fraction, int]
    proof_status: str
    nodes_visited: int
    vectors: list[list[int]] = field(default_factory=list)

    @property
    def proven(self) -> bool:
        return self.proof_status == "proven"

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "norms": {str(k): v for k, v in sorted(self.counts.items())},
            "proof_status": self.proof_status,
            "nodes_visited": self.nodes_visited,
        }


@dataclass
class _Prepared:
    gram: np.ndarray
    mu: np.ndarray
    bsq: np.ndarray
    scale: int
    to_output: list[list[int]]  # rows mapping reduced coordinates to output vectors


def _prepare(lat) -> _Prepared:
    if isinstance(lat, ScaledLattice):
        reduced = lll_basis(lat.basis)
        from ..intmat import gram_rows

        gram = gram_rows(reduced)
        out = reduced
        scale = lat.scale
    else:
        g = as_gram_lattice(lat)
        gram, out = lll_gram(g.gram)
        scale = g.scale
    bound = max(abs(v) for row in gram for v in row)
    if bound * len(gram) > 2**40:
        raise OverflowError("Gram entries too large for the int64 enumeration kernel")
    G = np.array(gram, dtype=np.int64)
    mu, bsq = _kernel.gram_schmidt(G)
    return _Prepared(G, mu, bsq, scale, out)


def _norm_granularity(G: np.ndarray) -> int:
    """gcd of all values ``x G x^T``: ``gcd(G_ii, 2 G_ij)``."""
    g = 0
    n = G.shape[0]
    for i in range(n):
        g = gcd(g, int(G[i, i]))
        for j in range(i + 1, n):
            g = gcd(g, 2 * int(G[i, j]))
    return g


def _split(prep: _Prepared, t_int: int, t_float: float, budget: int):
    """Choose a cut level and the list of surviving top prefixes."""
    n = prep.bsq.shape[0]
    empty_counts = np.zeros(1, np.int64)
    empty_vecs = np.zeros((0, n), np.int64)
    best = [np.zeros(0, np.int64)]
    used = 0
    for depth in range(1, n):
        stop = n - depth
        cap = 1 << 16
        buf = np.zeros((cap, depth), np.int64)
        nodes, exh, _, npre = _kernel.enumerate_tree(
            prep.mu, prep.bsq, prep.gram, t_float, t_int, np.zeros(0, np.int64), stop,
            max(budget - used, 0), empty_counts, empty_vecs, buf)
        used += nodes
        if exh or npre > cap or used * 8 > budget:
            break
        best = [buf[i].copy() for i in range(npre)]
        if npre >= _TARGET_SUBTREES or stop == 1:
            break
    return best, used


def _fingerprint(prep: _Prepared, t_int: int) -> str:
    import hashlib

    h = hashlib.sha256(prep.gram.tobytes())
    h.update(str((prep.scale, t_int)).encode())
    return h.hexdigest()


def short_vectors(lat, bound, budget: int = DEFAULT_BUDGET, collect: int = 0,
                  threads: int = 1, checkpoint: str | os.PathLike | None = None
                  ) -> ShortVectorReport:
    """Enumerate nonzero vectors of norm ``<= bound``.

    ``budget`` caps the tree nodes visited in this call.  When it runs out the
    status is ``budget-exhausted`` and the counts are lower bounds (every
    counted vector exists).  With ``checkpoint`` the cursor over completed
    subtrees is saved every ``CHECKPOINT_EVERY`` nodes, and a later call with
    the same lattice and bound resumes from it.
    """
    bound = Fraction(bound)
    prep = _prepare(lat)
    n = prep.bsq.shape[0]
    t_int = (bound * prep.scale).numerator // (bound * prep.scale).denominator
    if t_int <= 0:
        return ShortVectorReport(bound, {}, "proven", 0)
    t_float = t_int * (1 + _MARGIN) + _MARGIN
    prefixes, used = _split(prep, t_int, t_float, budget)
    total = used
    counts = np.zeros(t_int + 1, np.int64)
    partial = np.zeros(t_int + 1, np.int64)
    found: list[np.ndarray] = []
    status = "proven"
    idx = 0
    ckpt = Path(checkpoint) if checkpoint else None
    fp = _fingerprint(prep, t_int)
    if ckpt is not None and ckpt.exists():
        state = json.loads(ckpt.read_text())
        if state.get("fingerprint") == fp:
            idx = state["next"]
            total = state["nodes"]
            for k, v in state["counts"].items():
                counts[int(k)] = v
    last_ckpt = total

    def run(prefix, limit):
        local = np.zeros(t_int + 1, np.int64)
        vb = np.zeros((collect, n), np.int64)
        res = _kernel.enumerate_tree(prep.mu, prep.bsq, prep.gram, t_float, t_int,
                                     prefix, 0, limit, local, vb, np.zeros((0, 1), np.int64))
        return res, local, vb

    width = max(1, threads)
    pool = ThreadPoolExecutor(max_workers=width) if width > 1 else None
    try:
        while idx < len(prefixes):
            remaining = budget - used
            if remaining <= 0:
                status = "budget-exhausted"
                break
            batch = prefixes[idx:idx + width]
            limit = max(1, remaining // len(batch))
            if pool is None:
                results = [run(batch[0], limit)]
            else:
                results = list(pool.map(lambda p: run(p, limit), batch))
            exhausted = any(r[0][1] for r in results)
            for (nd, _, nv, _), local, vb in results:
                used += nd
                total += nd
                (partial if exhausted else counts)[:] += local
                found.extend(vb[:min(nv, max(0, collect - len(found)))])
            if exhausted:
                status = "budget-exhausted"
                break
            idx += len(batch)
            if ckpt is not None and total - last_ckpt >= CHECKPOINT_EVERY:
                _write_checkpoint(ckpt, fp, idx, total, counts)
                last_ckpt = total
    finally:
        if pool is not None:
            pool.shutdown()
    if ckpt is not None:
        _write_checkpoint(ckpt, fp, idx, total, counts)
    merged = counts + partial
    out = {Fraction(q, prep.scale): int(c) for q, c in enumerate(merged) if c}
    vectors = []
    for x in found[:collect]:
        xs = [int(v) for v in x]
        vec = [sum(xs[i] * prep.to_output[i][j] for i in range(n) if xs[i])
               for j in range(len(prep.to_output[0]))]
        vectors.append(vec)
    return ShortVectorReport(bound, out, status, int(total), vectors)


def _write_checkpoint(path: Path, fp: str, idx: int, nodes: int, counts: np.ndarray):
    state = {"fingerprint": fp, "next": idx, "nodes": int(nodes),
             "counts": {str(i): int(c) for i, c in enumerate(counts) if c}}
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(state))
    tmp.replace(path)


@dataclass
class MinNormResult:
    """Minimum norm with its proof status.

    When the status is ``budget-exhausted``, ``value`` is only an upper bound
    (the shortest vector seen) and no nonzero vector has norm
    ``<= certified_empty``.
    """

    value: Fraction
    proof_status: str
    certified_empty: Fraction
    vector: list[int]
    nodes_visited: int

    @property
    def proven(self) -> bool:
        return self.proof_status == "proven"

    def to_json(self) -> dict:
        return {"value": str(self.value), "proof_status": self.proof_status,
                "certified_empty": str(self.certified_empty),
                "nodes_visited": self.nodes_visited}


def _shortest(lat, vectors):
    return min(vectors, key=lat.vector_norm) if vectors else None


def min_norm(lat, budget: int = DEFAULT_BUDGET, threads: int = 1,
             checkpoint: str | os.PathLike | None = None) -> MinNormResult:
    """Minimum nonzero norm.

    The shortest reduced basis vector gives an upper bound ``u``; enumerating
    every norm below ``u`` (in steps of the norm granularity) proves it.
    """
    prep = _prepare(lat)
    s = prep.scale
    diag = [int(prep.gram[i, i]) for i in range(prep.gram.shape[0])]
    i_best = min(range(len(diag)), key=diag.__getitem__)
    upper = Fraction(diag[i_best], s)
    vec = list(prep.to_output[i_best])
    step = Fraction(_norm_granularity(prep.gram), s)
    below = upper - step
    if below <= 0:
        return MinNormResult(upper, "proven", below, vec, 0)
    rep = short_vectors(lat, below, budget=budget, collect=256, threads=threads,
                        checkpoint=checkpoint)
    nodes = rep.nodes_visited
    if rep.counts:
        low = min(rep.counts)
        best = _shortest(lat, rep.vectors)
        if lat.vector_norm(best) != low:
            extra = short_vectors(lat, low, budget=budget, collect=1)
            nodes += extra.nodes_visited
            best = extra.vectors[0]
        upper, vec = low, best
    if not rep.proven:
        return MinNormResult(upper, "budget-exhausted", Fraction(0), vec, nodes)
    return MinNormResult(upper, "proven", upper - step, vec, nodes)


def theta_coefficients(lat, max_norm, budget: int = DEFAULT_BUDGET) -> dict[Fraction, int]:
    """Number of lattice vectors of each norm ``<= max_norm`` (zero included)."""
    rep = short_vectors(lat, max_norm, budget=budget)
    if not rep.proven:
        from ..errors import BudgetExceeded

        raise BudgetExceeded(f"theta enumeration to {max_norm} exceeded {budget} nodes")
    out = {Fraction(0): 1}
    out.update(rep.counts)
    return dict(sorted(out.items()))
