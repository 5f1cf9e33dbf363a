"""Truncated integer q-series on the even-exponent grid, extremal theta series
and the design/Fisher bounds for their shells."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

DEFAULT_PRECISION = 60


def sigma3(m: int) -> int:
    """Sum of cubes of the positive divisors of ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            total += d ** 3
            e = m // d
            if e != d:
                total += e ** 3
        d += 1
    return total


@dataclass(frozen=True)
class QSeries:
    """``sum c[j] q^(2j)`` for ``2j <= precision``; ``coeffs[j]`` is the q^(2j) term."""

    coeffs: tuple[int, ...]
    precision: int

    def __post_init__(self):
        size = self.precision // 2 + 1
        c = tuple(int(v) for v in self.coeffs[:size])
        object.__setattr__(self, "coeffs", c + (0,) * (size - len(c)))

    def __getitem__(self, exponent: int) -> int:
        """Coefficient of ``q^exponent`` (zero on odd exponents)."""
        if exponent % 2 or exponent < 0:
            return 0
        if exponent > self.precision:
            raise IndexError(f"q^{exponent} is beyond precision {self.precision}")
        return self.coeffs[exponent // 2]

    def _meet(self, other: "QSeries") -> int:
        return min(self.precision, other.precision)

    def __add__(self, other: "QSeries") -> "QSeries":
        p = self._meet(other)
        n = p // 2 + 1
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), p)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "QSeries":
        return QSeries(tuple(c * v for v in self.coeffs), self.precision)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        p = self._meet(other)
        n = p // 2 + 1
        a, b = self.coeffs, other.coeffs
        out = [0] * n
        for i in range(n):
            if a[i]:
                ai = a[i]
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return QSeries(tuple(out), p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            raise ValueError("negative power")
        result = one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_json(self) -> dict:
        return {"precision": self.precision,
                "coeffs": [[2 * j, str(v)] for j, v in enumerate(self.coeffs)]}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        p = int(data["precision"])
        c = [0] * (p // 2 + 1)
        for e, v in data["coeffs"]:
            c[int(e) // 2] = int(v)
        return cls(tuple(c), p)


def one(precision: int) -> QSeries:
    return QSeries((1,), precision)


def e4(precision: int = DEFAULT_PRECISION) -> QSeries:
    """``1 + 240 sum sigma3(m) q^(2m)``."""
    if precision < 2:
        raise ValueError("precision must be at least 2")
    n = precision // 2
    return QSeries((1,) + tuple(240 * sigma3(m) for m in range(1, n + 1)), precision)


def delta(precision: int = DEFAULT_PRECISION) -> QSeries:
    """``q^2 prod (1 - q^(2m))^24``."""
    if precision < 2:
        raise ValueError("precision must be at least 2")
    n = precision // 2
    # the product up to q^(2(n-1)), then shift by one slot
    prod = [0] * n
    prod[0] = 1
    for m in range(1, n):
        for _ in range(24):
            for j in range(n - 1, m - 1, -1):
                prod[j] -= prod[j - m]
    return QSeries((0,) + tuple(prod), precision)


def extremal_coefficients(n: int, precision: int = DEFAULT_PRECISION) -> list[Fraction]:
    """The ``a_r`` with ``a_0 = 1`` killing q^2 .. q^(2 floor(n/24))."""
    if n % 8 or n <= 0:
        raise ValueError("n must be a positive multiple of 8")
    top = n // 24
    precision = max(precision, 2 * top + 2)
    e, d = e4(precision), delta(precision)
    terms = [(e ** (n // 8 - 3 * r)) * (d ** r) for r in range(top + 1)]
    # delta^r starts at q^(2r) with coefficient 1, so the system is triangular
    a = [Fraction(1)] + [Fraction(0)] * top
    for j in range(1, top + 1):
        acc = sum(a[r] * terms[r].coeffs[j] for r in range(j))
        a[j] = -acc / terms[j].coeffs[j]
    return a


def extremal_theta(n: int, precision: int = DEFAULT_PRECISION) -> QSeries:
    """Theta series of an extremal even unimodular lattice of dimension ``n``."""
    top = n // 24
    a = extremal_coefficients(n, precision)
    work = max(precision, 2 * top + 2)
    e, d = e4(work), delta(work)
    size = work // 2 + 1
    total = [Fraction(0)] * size
    for r, ar in enumerate(a):
        if ar:
            t = (e ** (n // 8 - 3 * r)) * (d ** r)
            for j in range(size):
                total[j] += ar * t.coeffs[j]
    if any(v.denominator != 1 for v in total):
        raise ArithmeticError("extremal theta series has non-integral coefficients")
    return QSeries(tuple(int(v) for v in total), precision)


def design_strength(n: int) -> int:
    """Strength of the spherical designs formed by shells of extremal lattices."""
    if n % 8:
        raise ValueError("n must be a multiple of 8")
    return {0: 11, 8: 7, 16: 3}[n % 24]


def fisher_bound(n: int, t: int) -> int:
    """Lower bound ``2 C(n+e-1, e)`` on the size of an antipodal ``(2e+1)``-design."""
    if t % 2 == 0 or t < 1:
        raise ValueError("t must be odd and positive")
    e = (t - 1) // 2
    return 2 * comb(n + e - 1, e)


@dataclass
class CorollaryReport:
    n: int
    bound: int
    margins: dict[int, int]  # norm -> coefficient - bound

    @property
    def ok(self) -> bool:
        return bool(self.margins) and all(v >= 0 for v in self.margins.values())

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"n": self.n, "bound": self.bound, "ok": self.ok,
                "margins": {str(k): str(v) for k, v in sorted(self.margins.items())}}


def corollary_norms(n: int, m_max: int) -> list[int]:
    """Norms ``2m`` for ``floor(n/24) < m <= m_max``; for ``n = 72`` the norms ``4m``, ``m >= 2``."""
    if n == 72:
        return [4 * m for m in range(2, m_max + 1)]
    return [2 * m for m in range(n // 24 + 1, m_max + 1)]


def corollary_check(n: int, m_max: int) -> CorollaryReport:
    """Compare every relevant extremal theta coefficient with the Fisher bound."""
    if n not in (32, 40, 48, 56, 64, 72):
        raise ValueError("n must be one of 32, 40, 48, 56, 64, 72")
    norms = corollary_norms(n, m_max)
    series = extremal_theta(n, max(norms, default=2))
    bound = fisher_bound(n, design_strength(n))
    return CorollaryReport(n, bound, {e: series[e] - bound for e in norms})
