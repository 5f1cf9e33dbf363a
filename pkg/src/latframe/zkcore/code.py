"""Codes over Z_k: weights, self-duality, Type II certificates and CRT lifts."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Sequence

import numpy as np

from ..intmat import hnf


def check_modulus(k: int) -> int:
    k = int(k)
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    return k


class ZkMat:
    """Integer matrix with entries stored as canonical residues mod ``k``."""

    __slots__ = ("k", "entries")

    def __init__(self, entries, k: int):
        self.k = check_modulus(k)
        arr = np.array(entries, dtype=np.int64) % self.k
        if arr.ndim != 2:
            raise ValueError("ZkMat needs a 2-d array")
        arr.setflags(write=False)
        self.entries = arr

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __matmul__(self, other: "ZkMat") -> "ZkMat":
        if other.k != self.k:
            raise ValueError("moduli differ")
        return ZkMat(self.entries @ other.entries, self.k)

    @property
    def T(self) -> "ZkMat":
        return ZkMat(self.entries.T, self.k)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZkMat) and other.k == self.k
                and np.array_equal(other.entries, self.entries))

    def __repr__(self) -> str:
        return f"ZkMat(k={self.k}, shape={self.shape})"


@dataclass(frozen=True, eq=False)
class ZkCode:
    """A length-``n`` code over ``Z_k`` given by a generator matrix.

    Generator entries are reduced into ``{0,...,k-1}`` on construction.
    """

    k: int
    generator: np.ndarray
    standard_form: bool = False
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        k = check_modulus(self.k)
        gen = np.array(self.generator, dtype=np.int64)
        if gen.ndim == 1:
            gen = gen.reshape(1, -1)
        if gen.ndim != 2 or gen.shape[1] == 0:
            raise ValueError("generator must be a nonempty 2-d array")
        gen %= k
        gen.setflags(write=False)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "generator", gen)
        if self.standard_form:
            g = gen.shape[0]
            if gen.shape[1] < g or not np.array_equal(gen[:, :g], np.eye(g, dtype=np.int64)):
                raise ValueError("standard_form set but left block is not the identity")

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def length(self) -> int:
        return self.n

    @property
    def rows(self) -> int:
        return self.generator.shape[0]

    def zkmat(self) -> ZkMat:
        return ZkMat(self.generator, self.k)

    def reduce(self, m: int) -> "ZkCode":
        """Reduction of the code modulo a divisor ``m`` of ``k``."""
        if self.k % m:
            raise ValueError(f"{m} does not divide {self.k}")
        return ZkCode(m, self.generator % m)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZkCode) and other.k == self.k
                and other.n == self.n
                and lift_hnf(self) == lift_hnf(other))

    def __hash__(self) -> int:
        return hash((self.k, self.n))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<ZkCode{label} over Z_{self.k}, n={self.n}, {self.rows} generator rows>"


def lift_hnf(code: ZkCode) -> list[list[int]]:
    """HNF basis of ``rho(C) + k Z^n``, the unscaled Construction A lattice."""
    k = code.k
    gens = code.generator.tolist() + [[k if i == j else 0 for j in range(code.n)]
                                      for i in range(code.n)]
    return hnf(gens, modulus=k)


def code_size(code: ZkCode) -> int:
    """``|C|``, read off the pivots of the lifted HNF basis."""
    h = lift_hnf(code)
    return prod(code.k // h[i][i] for i in range(code.n))


def euclidean_weight(v: Sequence[int], k: int) -> int:
    """Sum of ``alpha^2`` over components congruent to ``+-alpha`` mod ``k``."""
    a = np.asarray(v, dtype=np.int64) % k
    return int(np.minimum(a, k - a).astype(np.int64).__pow__(2).sum())


def euclidean_weights(words: np.ndarray, k: int) -> np.ndarray:
    a = np.asarray(words, dtype=np.int64) % k
    b = np.minimum(a, k - a)
    return (b * b).sum(axis=-1)


def hamming_weight(v: Sequence[int], k: int | None = None) -> int:
    a = np.asarray(v, dtype=np.int64)
    if k is not None:
        a = a % k
    return int(np.count_nonzero(a))


def is_self_orthogonal(code: ZkCode) -> bool:
    g = code.generator
    return not np.any((g @ g.T) % code.k)


def self_dual_check(code: ZkCode) -> bool:
    """``G G^T = 0 mod k`` and ``|C|^2 = k^n`` (from the lifted determinant).

    Odd lengths can only pass when ``k`` is a square, e.g. ``{0, 2}`` over Z_4.
    """
    if not is_self_orthogonal(code):
        return False
    return code_size(code) ** 2 == code.k ** code.n


@dataclass(frozen=True)
class Type2Report:
    ok: bool
    self_dual: bool
    even: bool
    rows_divisible: bool

    def __bool__(self) -> bool:
        return self.ok


def type2_check(code: ZkCode) -> Type2Report:
    """Certify Type II over ``Z_{2k}`` through evenness of the lifted lattice.

    Self-duality gives unimodularity of ``(1/sqrt(2k)) (rho(C) + 2k Z^n)``;
    the lattice is even when its integral Gram has an even diagonal, which is
    equivalent to all Euclidean weights being divisible by ``4k``.
    ``rows_divisible`` is the cheaper row-weight pre-check.
    """
    q = code.k
    if q % 2:
        raise ValueError(f"Type II needs an even modulus, got {q}")
    rows_div = bool(np.all(euclidean_weights(code.generator, q) % (2 * q) == 0))
    sd = self_dual_check(code)
    even = False
    if sd:
        from ..intmat import gram_rows

        h = lift_hnf(code)
        gram = gram_rows(h)
        n = len(h)
        even = all(gram[i][j] % q == 0 for i in range(n) for j in range(n)) and \
            all(gram[i][i] % (2 * q) == 0 for i in range(n))
    return Type2Report(sd and even, sd, even, rows_div)


def _crt_pair(m1: int, m2: int) -> tuple[int, int]:
    """Idempotents ``(e1, e2)`` mod ``m1*m2`` with ``e1 = 1 mod m1, 0 mod m2``."""
    e1 = m2 * pow(m2, -1, m1) % (m1 * m2)
    e2 = m1 * pow(m1, -1, m2) % (m1 * m2)
    return e1, e2


def crt_value(b: int, t: int, k: int) -> int:
    """The residue ``x`` mod ``2k`` with ``x = b mod 2`` and ``x = t mod k``."""
    e1, e2 = _crt_pair(2, k)
    return (b * e1 + t * e2) % (2 * k)


def crt_combine(c2: ZkCode, ck: ZkCode) -> ZkCode:
    """Lift a binary code and a ``Z_k`` code (``k`` odd) to ``Z_{2k}``."""
    if c2.k != 2:
        raise ValueError("first code must be binary")
    k = ck.k
    if k % 2 == 0:
        raise ValueError(f"second modulus must be odd, got {k}")
    if c2.n != ck.n:
        raise ValueError(f"length mismatch: {c2.n} != {ck.n}")
    e1, e2 = _crt_pair(2, k)
    gen = np.vstack([(c2.generator * e1), (ck.generator * e2)]) % (2 * k)
    return ZkCode(2 * k, gen)


def direct_sum(codes: Iterable[ZkCode]) -> ZkCode:
    codes = list(codes)
    k = codes[0].k
    if any(c.k != k for c in codes):
        raise ValueError("moduli differ")
    rows = sum(c.rows for c in codes)
    n = sum(c.n for c in codes)
    gen = np.zeros((rows, n), dtype=np.int64)
    r = col = 0
    for c in codes:
        gen[r:r + c.rows, col:col + c.n] = c.generator
        r += c.rows
        col += c.n
    return ZkCode(k, gen)


def codeword_basis(code: ZkCode) -> tuple[np.ndarray, list[int]]:
    """Rows and radices giving every codeword exactly once.

    Each codeword is ``sum c_i * rows[i] mod k`` for a unique choice of
    ``0 <= c_i < radices[i]``.
    """
    h = lift_hnf(code)
    k = code.k
    rows, radices = [], []
    for i, row in enumerate(h):
        if row[i] < k:
            rows.append([v % k for v in row])
            radices.append(k // row[i])
    return np.array(rows, dtype=np.int64).reshape(len(rows), code.n), radices


def iter_codewords(code: ZkCode, chunk: int = 1 << 16):
    """Yield arrays of codewords (chunked), starting with the zero word."""
    rows, radices = codeword_basis(code)
    total = prod(radices)
    k = code.k
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.empty((idx.size, len(radices)), dtype=np.int64)
        rem = idx.copy()
        for j in range(len(radices) - 1, -1, -1):
            rem, digits[:, j] = np.divmod(rem, radices[j])
        yield (digits @ rows) % k
