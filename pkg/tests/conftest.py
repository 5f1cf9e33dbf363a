import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def brute_counts(gram, scale, bound):
    """Norm counts by walking a coordinate box that provably holds every short vector.

    |x_i| <= sqrt(bound * (G^-1)_ii) for the actual Gram G.
    """
    g = np.array(gram, dtype=float) / scale
    inv = np.linalg.inv(g)
    n = len(gram)
    radii = [int(math.floor(math.sqrt(float(bound) * inv[i, i]) + 1e-9)) for i in range(n)]
    gi = [[int(v) for v in row] for row in gram]
    out = {}
    for x in itertools.product(*[range(-r, r + 1) for r in radii]):
        if not any(x):
            continue
        q = sum(x[i] * gi[i][j] * x[j] for i in range(n) for j in range(n))
        norm = Fraction(q, scale)
        if norm <= bound:
            out[norm] = out.get(norm, 0) + 1
    return out


def random_unimodular(n, rng, steps=30):
    u = np.eye(n, dtype=np.int64)
    for _ in range(steps):
        i, j = rng.choice(n, size=2, replace=False)
        u[i] += int(rng.integers(-2, 3)) * u[j]
    return u


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def verdict():
    """Record one pass/fail line per acceptance criterion; shown in the terminal summary."""
    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
