"""Exact scaled-integer lattices.

A :class:`ScaledLattice` is ``(1/sqrt(s)) * rowspan_Z(B)`` for an integer basis
``B``; a :class:`GramLattice` is known only through an integer Gram matrix
``G`` with actual inner products ``G / s``.  Nothing irrational is ever formed.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt, lcm

from ..errors import ConsistencyError
from ..intmat import (as_int_rows, content, det, gram_rows, hnf, identity, inverse,
                      matmul, solve_upper, transpose)


def _square_part(g: int, s: int) -> int:
    """Largest ``t`` dividing ``g`` with ``t*t`` dividing ``s``."""
    t = 1
    for d in range(1, isqrt(s) + 1):
        if g % d == 0 and s % (d * d) == 0:
            t = d
    return t


@dataclass(frozen=True, eq=False)
class ScaledLattice:
    basis: tuple[tuple[int, ...], ...]
    scale: int = 1

    def __init__(self, basis, scale: int = 1):
        rows = as_int_rows(basis)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("basis must be a nonempty square integer matrix")
        if scale < 1:
            raise ValueError("scale must be a positive integer")
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "scale", int(scale))
        if self.det == 0:
            raise ValueError("basis is not full rank")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    @cached_property
    def det(self) -> int:
        return det(self.rows)

    @cached_property
    def gram(self) -> list[list[int]]:
        """Integer ``B B^T``; the actual Gram matrix is this divided by ``scale``."""
        return gram_rows(self.rows)

    @cached_property
    def hnf(self) -> list[list[int]]:
        return hnf(self.rows, modulus=abs(self.det))

    def vector_norm(self, v) -> Fraction:
        return Fraction(sum(int(x) * int(x) for x in v), self.scale)

    def inner(self, u, v) -> Fraction:
        return Fraction(sum(int(a) * int(b) for a, b in zip(u, v)), self.scale)

    def rescaled(self, new_scale: int) -> "ScaledLattice":
        """The same lattice written at ``new_scale`` (must be ``scale * t^2``)."""
        q, r = divmod(new_scale, self.scale)
        t = isqrt(q)
        if r or t * t != q:
            raise ValueError(f"cannot rewrite scale {self.scale} as {new_scale}")
        return ScaledLattice([[t * x for x in row] for row in self.basis], new_scale)

    def normalized(self) -> "ScaledLattice":
        """Divide out common factors ``t`` of the basis with ``t^2 | scale``."""
        t = _square_part(content(self.rows), self.scale)
        if t == 1:
            return self
        return ScaledLattice([[x // t for x in row] for row in self.basis],
                             self.scale // (t * t))

    def same_as(self, other: "ScaledLattice") -> bool:
        if self.dim != other.dim:
            return False
        pair = _common_scale(self, other)
        return pair is not None and pair[0].hnf == pair[1].hnf

    def __eq__(self, other) -> bool:
        return isinstance(other, ScaledLattice) and self.same_as(other)

    def __hash__(self) -> int:
        n = self.normalized()
        return hash((n.scale, tuple(map(tuple, n.hnf))))

    def __repr__(self) -> str:
        return f"<ScaledLattice dim={self.dim} scale={self.scale}>"


def _common_scale(a: ScaledLattice, b: ScaledLattice):
    """Both lattices rewritten at one scale, or None if the scales are incompatible."""
    s = lcm(a.scale, b.scale)
    # the smallest common scale has the form s*m with m dividing s
    for m in range(1, s + 1):
        if s % m:
            continue
        c = s * m
        x, y = c // a.scale, c // b.scale
        if isqrt(x) ** 2 == x and isqrt(y) ** 2 == y:
            return a.rescaled(c), b.rescaled(c)
    return None


def is_sublattice(a: ScaledLattice, b: ScaledLattice) -> bool:
    """Whether ``a`` is contained in ``b``."""
    pair = _common_scale(a, b)
    if pair is None or a.dim != b.dim:
        return False
    sa, sb = pair
    return all(solve_upper(sb.hnf, row) is not None for row in sa.rows)


def sublattice_index(a: ScaledLattice, b: ScaledLattice) -> int:
    """``[b : a]`` for ``a`` contained in ``b``."""
    sa, sb = _common_scale(a, b)
    q, r = divmod(abs(sa.det), abs(sb.det))
    if r:
        raise ValueError("not a sublattice")
    return q


def intersection(a: ScaledLattice, b: ScaledLattice) -> ScaledLattice:
    """``a`` intersected with ``b``, computed as ``(a* + b*)*``."""
    da, db = _common_scale(dual(a), dual(b))
    summed = ScaledLattice(hnf(da.rows + db.rows, modulus=abs(da.det)), da.scale)
    return dual(summed)


@dataclass(frozen=True, eq=False)
class GramLattice:
    """A lattice given by an integer Gram matrix ``G`` at scale ``s``."""

    gram_matrix: tuple[tuple[int, ...], ...]
    scale: int = 1

    def __init__(self, gram, scale: int = 1):
        rows = as_int_rows(gram)
        n = len(rows)
        if not rows or any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        for m in range(1, n + 1):
            if det([r[:m] for r in rows[:m]]) <= 0:
                raise ValueError("Gram matrix is not positive definite")
        object.__setattr__(self, "gram_matrix", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "scale", int(scale))

    @property
    def dim(self) -> int:
        return len(self.gram_matrix)

    @property
    def gram(self) -> list[list[int]]:
        return [list(r) for r in self.gram_matrix]

    def vector_norm(self, x) -> Fraction:
        """Norm of the vector with coordinates ``x`` in the Gram basis."""
        g = self.gram
        q = sum(int(x[i]) * g[i][j] * int(x[j]) for i in range(self.dim) for j in range(self.dim))
        return Fraction(q, self.scale)

    def __repr__(self) -> str:
        return f"<GramLattice dim={self.dim} scale={self.scale}>"


def as_gram_lattice(lat) -> GramLattice:
    if isinstance(lat, GramLattice):
        return lat
    return GramLattice(lat.gram, lat.scale)


def gram(lat) -> tuple[list[list[int]], int]:
    """``(G, s)`` with the actual Gram matrix equal to ``G / s``."""
    return lat.gram, lat.scale


def rational_gram(lat) -> list[list[Fraction]]:
    g, s = gram(lat)
    return [[Fraction(v, s) for v in row] for row in g]


def gram_det(lat) -> Fraction:
    g, s = gram(lat)
    return Fraction(det(g), s ** len(g))


def is_integral(lat) -> bool:
    g, s = gram(lat)
    return all(v % s == 0 for row in g for v in row)


def is_unimodular(lat) -> bool:
    return is_integral(lat) and abs(gram_det(lat)) == 1


def is_even(lat) -> bool:
    """Integral with every basis norm even (hence every norm even)."""
    g, s = gram(lat)
    return is_integral(lat) and all((g[i][i] // s) % 2 == 0 for i in range(len(g)))


def integer_lattice(n: int) -> ScaledLattice:
    """``Z^n``."""
    return ScaledLattice(identity(n), 1)


def construction_a(code) -> ScaledLattice:
    """``(1/sqrt(k)) (rho(C) + k Z^n)`` with its HNF basis."""
    from ..zkcore import lift_hnf, self_dual_check

    lat = ScaledLattice(lift_hnf(code), code.k)
    if not self_dual_check(code):
        warnings.warn("code is not self-dual; Construction A lattice is not unimodular",
                      stacklevel=2)
    return lat


def lll_reduce(lat, delta: Fraction = Fraction(99, 100)):
    from .lll import lll_basis, lll_gram

    if isinstance(lat, ScaledLattice):
        return ScaledLattice(lll_basis(lat.rows, delta), lat.scale)
    reduced, _ = lll_gram(lat.gram, delta)
    return GramLattice(reduced, lat.scale)


def contains(lat: ScaledLattice, v) -> bool:
    """Whether the integer vector ``v`` (read at ``lat.scale``) lies in ``lat``."""
    v = [int(x) for x in v]
    if len(v) != lat.dim:
        raise ValueError("dimension mismatch")
    return solve_upper(lat.hnf, v) is not None


def coordinates(lat: ScaledLattice, v) -> list[int] | None:
    """Integer ``x`` with ``x B = v`` or None."""
    if not contains(lat, v):
        return None
    binv = inverse(lat.rows)
    n = lat.dim
    return [int(sum(int(v[i]) * binv[i][j] for i in range(n))) for j in range(n)]


def _denominator_lcm(m) -> int:
    d = 1
    for row in m:
        for v in row:
            d = lcm(d, Fraction(v).denominator)
    return d


def dual(lat):
    """The dual lattice in the same convention."""
    if isinstance(lat, GramLattice):
        inv = inverse(lat.gram)
        # actual Gram of the dual basis: s * G^{-1}
        d = _denominator_lcm(inv)
        g = [[int(v * d * lat.scale) for v in row] for row in inv]
        return GramLattice(g, d)
    s = lat.scale
    inv_t = transpose(inverse(lat.rows))
    t = _denominator_lcm(inv_t)
    basis = [[int(v * s * t) for v in row] for row in inv_t]
    return ScaledLattice(hnf(basis, modulus=abs(det(basis))), s * t * t).normalized()


def _from_coords(lat, coords, halve: bool = False):
    """Sublattice/superlattice spanned by integer coordinate rows.

    With ``halve`` the coordinates are read as halves (scale grows by 4).
    """
    coords = as_int_rows(coords)
    n = lat.dim
    if len(coords) > n:
        coords = hnf(coords, modulus=abs(det(coords[:n])) or None)
    if isinstance(lat, GramLattice):
        g = lat.gram
        new = matmul(matmul(coords, g), transpose(coords))
        scale = lat.scale * (4 if halve else 1)
        d = gcd(content(new), scale)
        return GramLattice([[x // d for x in row] for row in new], scale // d)
    vecs = matmul(coords, lat.rows)
    scale = lat.scale * (4 if halve else 1)
    return ScaledLattice(hnf(vecs, modulus=abs(det(vecs))), scale).normalized()


def _parity_vector(lat) -> list[int]:
    g, s = gram(lat)
    return [(g[i][i] // s) % 2 for i in range(len(g))]


def _even_coords(par: list[int]) -> list[list[int]]:
    """Coordinate basis of ``{x : sum x_i par_i even}``."""
    n = len(par)
    pivot = par.index(1)
    rows = []
    for i in range(n):
        r = [0] * n
        r[i] = 1
        if i == pivot:
            r[i] = 2
        elif par[i]:
            r[pivot] = 1
        rows.append(r)
    return rows


def even_sublattice(lat):
    """Index-2 sublattice of even vectors of an odd integral lattice."""
    if not is_integral(lat):
        raise ValueError("lattice is not integral")
    par = _parity_vector(lat)
    if not any(par):
        raise ValueError("lattice is already even")
    return _from_coords(lat, _even_coords(par))


def characteristic_coords(lat) -> list[int]:
    """Coordinates ``c`` (entries 0/1) with ``(c, x) = (x, x) mod 2`` for all ``x``."""
    if not is_unimodular(lat):
        raise ValueError("lattice is not unimodular")
    g, s = gram(lat)
    n = len(g)
    gi = [[Fraction(v, s) for v in row] for row in g]
    inv = inverse([[int(v) for v in row] for row in gi])
    diag = [int(gi[i][i]) for i in range(n)]
    c = [sum(inv[i][j] * diag[j] for j in range(n)) for i in range(n)]
    return [int(v) % 2 for v in c]


@dataclass
class NeighborPair:
    """The two even unimodular neighbors of an odd unimodular lattice.

    The order of ``first`` and ``second`` carries no meaning.
    """

    first: object
    second: object
    even_part: object
    shadow_coords: list[list[Fraction]] = field(default_factory=list)

    @property
    def members(self) -> tuple:
        return (self.first, self.second)


def even_neighbors(lat) -> NeighborPair:
    n = lat.dim
    if n % 8:
        raise ValueError(f"dimension {n} is not a multiple of 8")
    if not is_unimodular(lat):
        raise ValueError("lattice is not unimodular")
    par = _parity_vector(lat)
    if not any(par):
        raise ValueError("lattice is already even")
    l0 = _even_coords(par)
    c = characteristic_coords(lat)
    v = [0] * n
    v[par.index(1)] = 1  # a basis vector of odd norm, so v lies in L \ L0
    twice = [[2 * x for x in row] for row in l0]
    shadow = [c, [a + 2 * b for a, b in zip(c, v)]]
    members = []
    for w in shadow:
        m = _from_coords(lat, twice + [w], halve=True)
        if not (is_even(m) and is_unimodular(m)):
            raise ConsistencyError("neighbor failed the even unimodular certificate")
        members.append(m)
    halves = [[Fraction(x, 2) for x in w] for w in shadow]
    return NeighborPair(members[0], members[1], _from_coords(lat, l0), halves)


def find_frame(lat, k, budget: int = 10**8):
    """Search for ``dim`` pairwise orthogonal vectors of norm ``k``.

    Returns ambient vectors (ScaledLattice) or Gram coordinates, or None when the
    norm-``k`` shell has no such subset.
    """
    from .enum import short_vectors

    k = Fraction(k)
    rep = short_vectors(lat, k, budget=budget, collect=10**6)
    if not rep.proven:
        return None
    g, s = gram(lat)
    if isinstance(lat, ScaledLattice):
        cand = [v for v in rep.vectors if lat.vector_norm(v) == k]

        def ip(u, w):
            return sum(a * b for a, b in zip(u, w))
    else:
        cand = [v for v in rep.vectors if lat.vector_norm(v) == k]

        def ip(u, w):
            return sum(u[i] * g[i][j] * w[j] for i in range(len(g)) for j in range(len(g)))

    n = lat.dim
    m = len(cand)
    adj = [[ip(cand[i], cand[j]) == 0 for j in range(m)] for i in range(m)]
    chosen: list[int] = []

    def extend(pool: list[int]) -> bool:
        if len(chosen) == n:
            return True
        if len(chosen) + len(pool) < n:
            return False
        for pos, i in enumerate(pool):
            chosen.append(i)
            if extend([j for j in pool[pos + 1:] if adj[i][j]]):
                return True
            chosen.pop()
        return False

    if extend(list(range(m))):
        return [list(cand[i]) for i in chosen]
    return None
