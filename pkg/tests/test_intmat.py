import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from latframe.intmat import det, hnf, inverse, matmul, solve_upper


def _minor_gcd(rows):
    from math import gcd

    n = len(rows[0])
    g = 0
    for pick in itertools.combinations(range(len(rows)), n):
        g = gcd(g, det([rows[i] for i in pick]))
    return g


matrices = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n + 2))


@given(matrices)
def test_hnf_shape_and_lattice(rows):
    n = len(rows[0])
    g = _minor_gcd(rows)
    if g == 0:
        with pytest.raises(ValueError):
            hnf(rows, modulus=0)
        return
    h = hnf(rows, modulus=g)
    for i in range(n):
        assert h[i][i] > 0
        assert all(h[i][j] == 0 for j in range(i))
        for r in range(i):
            assert 0 <= h[r][i] < h[i][i]
    # same lattice: pivot product equals the minor gcd and every generator lies in it
    assert np.prod([h[i][i] for i in range(n)]) == g
    for row in rows:
        assert solve_upper(h, row) is not None


def test_hnf_small_case():
    assert hnf([[2, 1], [0, 3]]) == [[2, 1], [0, 3]]
    assert hnf([[4, 0], [0, 4], [1, 1]], modulus=4) == [[1, 1], [0, 4]]


def test_det_and_inverse():
    a = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert det(a) == 18
    inv = inverse(a)
    prod = [[sum(a[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[1 if i == j else 0 for j in range(3)] for i in range(3)]


def test_solve_upper_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_upper([[1, 0], [0, 1]], [1, 2, 3])


def test_matmul_matches_numpy():
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 0]]
    assert matmul(a, b) == (np.array(a) @ np.array(b)).tolist()
