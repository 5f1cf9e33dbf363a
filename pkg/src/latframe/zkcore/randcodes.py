"""Random self-dual codes of small length, used as test oracles."""
from __future__ import annotations

import numpy as np

from .code import ZkCode, direct_sum
from .gfp import in_rowspace, nullspace, rank
from .matrices import _is_prime, bordered_qr_matrix


def _seed_block(k: int) -> np.ndarray:
    if k == 2:
        return np.array([[1, 1]])
    if k == 3:
        return np.array([[1, 0, 1, 1], [0, 1, 1, 2]])
    if k == 5:
        return np.array([[1, 2]])
    raise ValueError(f"no seed block for Z_{k}")


def _block_seed(k: int, n: int) -> np.ndarray:
    block = _seed_block(k)
    size = block.shape[1]
    if n % size:
        raise ValueError(f"self-dual Z_{k} codes of length {n} are not generated here")
    codes = [ZkCode(k, block)] * (n // size)
    return direct_sum(codes).generator.astype(np.int64)


def _monomial(gen: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = gen.shape[1]
    perm = rng.permutation(n)
    signs = rng.choice([1, k - 1], size=n)
    return (gen[:, perm] * signs) % k


def _neighbor_step(gen: np.ndarray, p: int, rng: np.random.Generator) -> np.ndarray:
    """``<C cap v^perp, v>`` for a random isotropic ``v`` outside ``C``."""
    n = gen.shape[1]
    for _ in range(200):
        v = rng.integers(0, p, size=n)
        if int(v @ v) % p or in_rowspace(v, gen, p):
            continue
        # C cap v^perp: messages x with (x G) . v = 0
        coeff = (gen @ v) % p
        ker = nullspace(coeff.reshape(-1, 1).T, p)
        inner = (ker @ gen) % p
        return np.concatenate([inner, v.reshape(1, -1)]) % p
    return gen


def random_self_dual_code(k: int, n: int, rng: np.random.Generator, steps: int = 4) -> ZkCode:
    """A random self-dual code over ``Z_k`` (``k`` prime in {2,3,5}, or 4)."""
    if k == 4:
        return _random_z4(n, rng)
    if not _is_prime(k):
        raise ValueError("only prime moduli and k = 4 are supported")
    gen = _block_seed(k, n)
    for _ in range(steps):
        gen = _monomial(gen, k, rng)
        gen = _neighbor_step(gen, k, rng)
    gen = _monomial(gen, k, rng)
    if rank(gen, k) != n // 2:
        raise AssertionError("neighbor step lost rank")
    return ZkCode(k, gen)


_Z4_BLOCKS = {
    1: np.array([[2]]),
    4: np.array([[1, 1, 1, 1], [2, 2, 0, 0], [2, 0, 2, 0]]),
    8: np.concatenate([np.eye(4, dtype=np.int64), bordered_qr_matrix(3) % 4], axis=1),
}


def _random_z4(n: int, rng: np.random.Generator) -> ZkCode:
    parts = []
    left = n
    while left:
        sizes = [s for s in _Z4_BLOCKS if s <= left]
        s = int(rng.choice(sizes))
        parts.append(ZkCode(4, _Z4_BLOCKS[s]))
        left -= s
    gen = direct_sum(parts).generator.astype(np.int64)
    return ZkCode(4, _monomial(gen, 4, rng))
