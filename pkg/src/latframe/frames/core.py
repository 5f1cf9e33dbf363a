"""k-frames: constructions from skew matrices, verification, scaling, codes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from ..errors import ConsistencyError
from ..intmat import as_int_rows
from ..lattice import ScaledLattice, construction_a, contains
from ..zkcore import Check, ZkCode, identity_plus, self_dual_check


@dataclass(frozen=True)
class Frame:
    """Vectors (integer rows at ``host.scale``) with Gram ``constant * I``."""

    host: ScaledLattice
    vectors: tuple[tuple[int, ...], ...]
    constant: Fraction

    @property
    def rows(self) -> list[list[int]]:
        return [list(v) for v in self.vectors]

    def __len__(self) -> int:
        return len(self.vectors)


def _gram(vectors: list[list[int]]) -> np.ndarray:
    a = np.array(vectors, dtype=object)
    return a.dot(a.T)


def verify_frame(lat: ScaledLattice, vectors, k) -> Check:
    """Count, exact Gram ``k I`` and membership of every vector."""
    vecs = as_int_rows(vectors)
    k = Fraction(k)
    if len(vecs) != lat.dim:
        return Check(False, f"{len(vecs)} vectors for a dimension-{lat.dim} lattice")
    target = k * lat.scale
    if target.denominator != 1:
        return Check(False, f"norm {k} is not representable at scale {lat.scale}")
    g = _gram(vecs)
    for i in range(len(vecs)):
        for j in range(len(vecs)):
            want = int(target) if i == j else 0
            if g[i, j] != want:
                return Check(False, f"inner product ({i},{j}) is {Fraction(int(g[i, j]), lat.scale)}, "
                                    f"expected {Fraction(want, lat.scale)}")
    for i, v in enumerate(vecs):
        if not contains(lat, v):
            return Check(False, f"vector {i} is not in the lattice")
    return Check(True)


def _checked(lat: ScaledLattice, rows: list[list[int]], k: Fraction) -> Frame:
    res = verify_frame(lat, rows, k)
    if not res:
        raise ConsistencyError(f"constructed frame failed verification: {res.detail}")
    return Frame(lat, tuple(tuple(r) for r in rows), k)


def _skew_weight(w) -> tuple[np.ndarray, int]:
    w = np.asarray(w, dtype=np.int64)
    n = w.shape[0]
    if w.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(w.T, -w):
        raise ValueError("matrix is not skew-symmetric")
    g = w @ w.T
    m = int(g[0, 0])
    if not np.array_equal(g, m * np.eye(n, dtype=np.int64)):
        raise ValueError("M M^T is not a multiple of the identity")
    return w, m


def _frame_rows(w: np.ndarray, a: int, b: int, c: int, d: int) -> list[list[int]]:
    n = w.shape[0]
    eye = np.eye(n, dtype=np.int64)
    top = np.concatenate([a * eye + b * w, c * eye + d * w], axis=1)
    bottom = np.concatenate([-c * eye + d * w, a * eye - b * w], axis=1)
    return np.concatenate([top, bottom]).tolist()


def tilde_code(w, name: str | None = None) -> ZkCode:
    """The Z_4 code with generator ``[I | W + 2I]``."""
    return identity_plus(np.asarray(w), 4, 2, name=name)


def frame_tilde(w, a: int, b: int, c: int, d: int) -> Frame:
    """Frame of constant ``(a^2+m b^2+c^2+m d^2)/4`` in ``A_4`` of ``[I | W+2I]``."""
    w, m = _skew_weight(w)
    if w.shape[0] % 4:
        raise ValueError("order must be divisible by 4")
    if m % 8 != 3:
        raise ValueError(f"weight {m} is not 3 mod 8")
    if (c - 2 * a - b) % 4 or (d - a - 2 * b) % 4:
        raise ValueError("need c = 2a+b and d = a+2b (mod 4)")
    lat = construction_a(tilde_code(w))
    k = Fraction(a * a + m * b * b + c * c + m * d * d, 4)
    return _checked(lat, _frame_rows(w, a, b, c, d), k)


def frame_general(mat, k: int, a: int, b: int, c: int, d: int) -> Frame:
    """Frame of constant ``(a^2+m b^2+c^2+m d^2)/k`` in ``A_k`` of ``[I | M]``."""
    mat, m = _skew_weight(mat)
    if (m + 1) % k:
        raise ValueError(f"weight {m} is not -1 mod {k}")
    if (a - d) % k or (b - c) % k:
        raise ValueError(f"need a = d and b = c (mod {k})")
    lat = construction_a(identity_plus(mat, k))
    const = Fraction(a * a + m * b * b + c * c + m * d * d, k)
    return _checked(lat, _frame_rows(mat, a, b, c, d), const)


def four_squares(m: int) -> tuple[int, int, int, int]:
    """Lexicographically smallest nonnegative ``(a,b,c,d)`` with squares summing to ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    for a in range(isqrt(m) + 1):
        for b in range(isqrt(m - a * a) + 1):
            for c in range(isqrt(m - a * a - b * b) + 1):
                rest = m - a * a - b * b - c * c
                d = isqrt(rest)
                if d * d == rest:
                    return a, b, c, d
    raise AssertionError("unreachable: every positive integer is a sum of four squares")


def quaternion_matrix(a: int, b: int, c: int, d: int) -> np.ndarray:
    """Signed matrix with ``Q Q^T = (a^2+b^2+c^2+d^2) I``."""
    return np.array([[a, b, c, d], [-b, a, -d, c], [-c, d, a, -b], [-d, -c, b, a]],
                    dtype=np.int64)


def frame_scale(frame: Frame, m: int) -> Frame:
    """Turn a k-frame into a km-frame by mixing quadruples with ``Q(four_squares(m))``."""
    n = len(frame)
    if n % 4:
        raise ValueError("frame size must be divisible by 4")
    q = quaternion_matrix(*four_squares(m)).astype(object)
    vecs = np.array(frame.rows, dtype=object)
    out = []
    for i in range(0, n, 4):
        out.extend((q.dot(vecs[i:i + 4])).tolist())
    return _checked(frame.host, [[int(x) for x in r] for r in out], frame.constant * m)


def frame_to_code(lat: ScaledLattice, frame) -> ZkCode:
    """``{((x,f_1), ..., (x,f_n)) mod k : x in L}`` from a basis of ``L``."""
    if isinstance(frame, Frame):
        vectors, k = frame.rows, frame.constant
    else:
        vectors, k = frame
    k = Fraction(k)
    res = verify_frame(lat, vectors, k)
    if not res:
        raise ValueError(f"not a frame: {res.detail}")
    if k.denominator != 1 or k < 2:
        raise ValueError("frame constant must be an integer >= 2")
    k = int(k)
    s = lat.scale
    prod = np.array(lat.rows, dtype=object).dot(np.array(vectors, dtype=object).T)
    if any(int(v) % s for v in prod.flat):
        raise ValueError("lattice is not integral against the frame")
    rows = [[(int(v) // s) % k for v in row] for row in prod]
    code = ZkCode(k, np.array(rows, dtype=np.int64))
    if not self_dual_check(code):
        raise ConsistencyError("frame code is not self-dual")
    return code


def tripling_frame(frame24: Frame) -> Frame:
    """``sqrt(2) f_i`` placed in each of three orthogonal copies of a 24-dim host.

    The host of the result is the orthogonal sum of three copies of
    ``sqrt(2) L``; membership in any larger 72-dimensional lattice is not
    claimed.
    """
    lat = frame24.host
    if lat.dim != 24:
        raise ValueError("tripling needs a 24-dimensional frame")
    res = verify_frame(lat, frame24.rows, frame24.constant)
    if not res:
        raise ValueError(f"input frame does not verify: {res.detail}")
    n = 24
    basis = [[0] * (3 * n) for _ in range(3 * n)]
    rows = []
    for block in range(3):
        for i, row in enumerate(lat.rows):
            for j, v in enumerate(row):
                basis[block * n + i][block * n + j] = 2 * v
        for f in frame24.rows:
            r = [0] * (3 * n)
            r[block * n:(block + 1) * n] = [2 * x for x in f]
            rows.append(r)
    host = ScaledLattice(basis, 2 * lat.scale)
    return _checked(host, rows, frame24.constant * 2)
