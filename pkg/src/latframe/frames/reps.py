"""Values of ``(a^2 + m b^2 + c^2 + m d^2)/k`` under congruence constraints."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

REGIMES = ("Z4", "Zk")


@dataclass(frozen=True)
class Representation:
    a: int
    b: int
    c: int
    d: int
    m: int
    k: int
    regime: str

    @property
    def value(self) -> Fraction:
        return Fraction(self.a ** 2 + self.m * self.b ** 2 + self.c ** 2 + self.m * self.d ** 2,
                        self.k)

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def regime_holds(self) -> bool:
        return regime_ok(self.regime, self.k, self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        out = asdict(self)
        out["value"] = str(self.value)
        return out


def regime_ok(regime: str, k: int, a, b, c, d):
    """Congruence test; works elementwise on numpy arrays."""
    if regime == "Z4":
        return ((c - 2 * a - b) % 4 == 0) & ((d - a - 2 * b) % 4 == 0)
    if regime == "Zk":
        return ((a - d) % k == 0) & ((b - c) % k == 0)
    raise ValueError(f"unknown regime {regime!r}")


def default_regime(k: int) -> str:
    return "Z4" if k == 4 else "Zk"


def _solutions(m: int, k: int, regime: str, target: int) -> np.ndarray:
    """All ``(a,b,c,d)`` with the given value, as rows (complete search box)."""
    if target < 1:
        raise ValueError("target must be positive")
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}")
    total = k * target
    ra = isqrt(total)
    rb = isqrt(total // m)
    b, d = np.meshgrid(np.arange(-rb, rb + 1), np.arange(-rb, rb + 1), indexing="ij")
    b, d = b.ravel(), d.ravel()
    bd = m * (b * b + d * d)
    keep = bd <= total
    b, d, bd = b[keep], d[keep], bd[keep]
    found = []
    for a in range(-ra, ra + 1):
        rest = total - a * a - bd
        ok = rest >= 0
        if not ok.any():
            continue
        r, bb, dd = rest[ok], b[ok], d[ok]
        c = np.sqrt(r.astype(np.float64)).round().astype(np.int64)
        exact = c * c == r
        for sign in (1, -1):
            cc = sign * c[exact]
            sel = regime_ok(regime, k, a, bb[exact], cc, dd[exact])
            if sign == -1:
                sel &= cc != 0
            for x, y, z in zip(bb[exact][sel], cc[sel], dd[exact][sel]):
                found.append((a, int(x), int(y), int(z)))
    if not found:
        return np.zeros((0, 4), np.int64)
    return np.array(sorted(set(found)), dtype=np.int64)


def search_representation(m: int, k: int, regime: str | None, target: int) -> Representation | None:
    """A witness of value ``target`` or None.

    The box ``|a|,|c| <= sqrt(k*target)``, ``|b|,|d| <= sqrt(k*target/m)`` holds
    every solution, so None certifies nonexistence.  Among all solutions the
    lexicographically largest ``(a,b,c,d)`` is returned.
    """
    regime = regime or default_regime(k)
    sols = _solutions(m, k, regime, target)
    if len(sols) == 0:
        return None
    a, b, c, d = (int(v) for v in sols[-1])
    return Representation(a, b, c, d, m, k, regime)


def representation_count_direct(m: int, k: int, regime: str | None, target: int) -> int:
    """Number of solutions by walking the complete search box."""
    return len(_solutions(m, k, regime or default_regime(k), target))


def representation_basis(m: int, k: int) -> tuple[list[list[int]], list[list[int]]]:
    """Basis of ``{a = d, b = c (mod k)}`` and its Gram matrix times ``k``."""
    basis = [[k, 0, 0, 0], [0, k, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0]]
    weights = [1, m, 1, m]
    g = [[sum(u[t] * weights[t] * v[t] for t in range(4)) for v in basis] for u in basis]
    return basis, g


def representation_lattice(m: int, k: int):
    """Rank-4 lattice whose norms are the values ``(a^2+m b^2+c^2+m d^2)/k``."""
    from ..lattice import GramLattice

    _, g = representation_basis(m, k)
    return GramLattice(g, k)


def representation_count(m: int, k: int, target: int, regime: str | None = None,
                         budget: int = 10**9) -> int:
    """Number of solutions with the given value.

    The Z_k regime is counted as vectors of a rank-4 lattice; the Z_4 regime
    is counted directly over the search box.
    """
    from ..errors import BudgetExceeded
    from ..lattice import short_vectors

    if (regime or default_regime(k)) == "Z4":
        return representation_count_direct(m, k, "Z4", target)

    rep = short_vectors(representation_lattice(m, k), target, budget=budget)
    if not rep.proven:
        raise BudgetExceeded(f"representation count for {target} exceeded {budget} nodes")
    return rep.counts.get(Fraction(target), 0)
