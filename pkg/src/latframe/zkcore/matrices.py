"""Integer matrix constructors: circulant/negacirculant blocks, the four-block
generator form, bordered quadratic-residue matrices and weighing checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import ZkCode


def negacirculant(first_row: Sequence[int], negate: bool = True) -> np.ndarray:
    """Square matrix whose row ``i+1`` is row ``i`` shifted right by one.

    With ``negate`` the entry that wraps around to the front changes sign
    (negacirculant); otherwise it is kept (circulant).
    """
    row = np.asarray(list(first_row), dtype=np.int64)
    if row.ndim != 1 or row.size == 0:
        raise ValueError("first_row must be a nonempty sequence")
    n = row.size
    out = np.empty((n, n), dtype=np.int64)
    out[0] = row
    for i in range(1, n):
        prev = out[i - 1]
        out[i, 1:] = prev[:-1]
        out[i, 0] = -prev[-1] if negate else prev[-1]
    return out


def circulant(first_row: Sequence[int]) -> np.ndarray:
    return negacirculant(first_row, negate=False)


def four_block(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """The block matrix ``(A B; -B^T A^T)``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError("A and B must be square of equal order")
    return np.block([[a, b], [-b.T, a.T]])


def four_block_negacirculant(r_a: Sequence[int], r_b: Sequence[int]) -> np.ndarray:
    if len(r_a) != len(r_b):
        raise ValueError(f"row lengths differ: {len(r_a)} != {len(r_b)}")
    return four_block(negacirculant(r_a), negacirculant(r_b))


@dataclass(frozen=True)
class NegacirculantSpec:
    """Modulus and first rows of the two negacirculant blocks."""

    k: int
    r_a: tuple[int, ...]
    r_b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r_a", tuple(int(v) for v in self.r_a))
        object.__setattr__(self, "r_b", tuple(int(v) for v in self.r_b))
        if len(self.r_a) != len(self.r_b):
            raise ValueError(f"row lengths differ: {len(self.r_a)} != {len(self.r_b)}")
        if not self.r_a:
            raise ValueError("empty rows")

    @property
    def quarter_length(self) -> int:
        return len(self.r_a)


def four_block_generator(spec: NegacirculantSpec, name: str | None = None) -> ZkCode:
    """Generator ``[I | (A B; -B^T A^T)]`` reduced mod ``k``."""
    m = four_block_negacirculant(spec.r_a, spec.r_b)
    half = m.shape[0]
    gen = np.concatenate([np.eye(half, dtype=np.int64), m], axis=1)
    return ZkCode(spec.k, gen, standard_form=True, name=name)


def identity_plus(m: np.ndarray, k: int, shift: int = 0, name: str | None = None) -> ZkCode:
    """The code with generator ``[I | M + shift*I]`` over ``Z_k``."""
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    eye = np.eye(n, dtype=np.int64)
    gen = np.concatenate([eye, m + shift * eye], axis=1)
    return ZkCode(k, gen, standard_form=True, name=name)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def quadratic_residues(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def bordered_qr_matrix(p: int) -> np.ndarray:
    """Order ``p+1`` skew matrix bordered by a ones row and minus-ones column.

    The ``p x p`` core is circulant with ``+1`` at nonzero squares and ``-1``
    at non-squares mod ``p``.
    """
    if not _is_prime(p) or p % 4 != 3:
        raise ValueError(f"p must be a prime congruent to 3 mod 4, got {p}")
    qr = quadratic_residues(p)
    core_row = [0] + [1 if j in qr else -1 for j in range(1, p)]
    out = np.zeros((p + 1, p + 1), dtype=np.int64)
    out[0, 1:] = 1
    out[1:, 0] = -1
    out[1:, 1:] = circulant(core_row)
    return out


@dataclass(frozen=True)
class Check:
    """Boolean outcome with a short diagnostic for the first failure."""

    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def weighing_check(m, weight: int, skew: bool = False, max_entry: int = 1) -> Check:
    """Check ``M M^T = weight*I``, the entry alphabet and (optionally) skewness.

    ``max_entry`` bounds ``|m_ij|``; weighing matrices use 1, matrices such as
    ``D28`` need 2.
    """
    a = np.asarray(m, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return Check(False, f"not square: shape {a.shape}")
    bad = np.argwhere(np.abs(a) > max_entry)
    if bad.size:
        i, j = bad[0]
        return Check(False, f"entry ({i},{j})={a[i, j]} outside alphabet |x|<={max_entry}")
    prod = a @ a.T
    target = weight * np.eye(a.shape[0], dtype=np.int64)
    bad = np.argwhere(prod != target)
    if bad.size:
        i, j = bad[0]
        return Check(False, f"(M M^T)[{i},{j}]={prod[i, j]}, expected {target[i, j]}")
    if skew:
        bad = np.argwhere(a.T != -a)
        if bad.size:
            i, j = bad[0]
            return Check(False, f"not skew at ({i},{j}): {a[i, j]} vs {a[j, i]}")
    return Check(True)
