import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import brute_counts, random_unimodular
from latframe import catalog
from latframe.errors import BudgetExceeded
from latframe.intmat import det, hnf
from latframe.lattice import (
    GramLattice, ScaledLattice, construction_a, contains, dual, enum, even_neighbors,
    even_sublattice, find_frame, gram, gram_det, integer_lattice, intersection, is_even,
    is_sublattice, is_unimodular, lll_reduce, min_norm, short_vectors, sublattice_index,
    theta_coefficients,
)
from latframe.zkcore import ZkCode, min_weight_bruteforce, random_self_dual_code

M1 = GramLattice(catalog.GRAM_M1)
M2 = GramLattice(catalog.GRAM_M2)


@pytest.fixture(scope="module")
def e8():
    return even_neighbors(integer_lattice(8)).first


# --- construction and basic predicates -----------------------------------------

def test_construction_a_of_z4_code():
    lat = construction_a(ZkCode(4, [[2]]))
    assert lat.rows == [[2]] and lat.scale == 4
    assert lat.det ** 2 == 4
    assert gram(lat) == ([[4]], 4)
    assert is_unimodular(lat) and not is_even(lat)


def test_construction_a_warns_for_non_self_dual():
    with pytest.warns(UserWarning):
        construction_a(ZkCode(4, [[1, 1]]))


@pytest.mark.parametrize("name", catalog.code_names())
def test_catalog_lattices(name):
    code = catalog.code(name)
    lat = construction_a(code)
    assert lat.det ** 2 == code.k ** code.n
    assert is_unimodular(lat)
    assert is_even(lat) == (code.k % 2 == 0)


def test_odd_catalog_lattices_are_odd():
    for name in ("C3_W24_23", "C3_W32_23", "C3_W32_17", "C5_D28"):
        lat = construction_a(catalog.code(name))
        assert is_unimodular(lat) and not is_even(lat)


def test_gram_of_integer_lattice_and_m1():
    assert gram(integer_lattice(3)) == ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1)
    assert gram(M1) == ([list(r) for r in catalog.GRAM_M1], 1)


def test_scaled_lattice_rejects_singular():
    with pytest.raises(ValueError):
        ScaledLattice([[1, 1], [2, 2]])


# --- LLL -----------------------------------------------------------------------

@pytest.mark.parametrize("name", ["C22_32", "C3_W24_23", "C8_72"])
def test_lll_preserves_lattice(name):
    lat = construction_a(catalog.code(name))
    red = lll_reduce(lat)
    assert red.hnf == lat.hnf
    assert max(red.gram[i][i] for i in range(red.dim)) <= max(lat.gram[i][i] for i in range(lat.dim))


def test_lll_gram_keeps_determinant():
    red = lll_reduce(M1)
    assert det(red.gram) == det(M1.gram)


# --- enumeration -----------------------------------------------------------------

def test_short_vector_examples(e8):
    assert short_vectors(integer_lattice(2), 1).counts == {1: 4}
    assert short_vectors(M1, 11).counts == {3: 4, 6: 4, 8: 4, 9: 4, 11: 8}
    assert short_vectors(e8, 2).counts == {2: 240}


def test_theta_examples(e8):
    assert theta_coefficients(integer_lattice(1), 4) == {0: 1, 1: 2, 4: 2}
    assert theta_coefficients(M2, 11) == {0: 1, 5: 4, 6: 4, 9: 4, 10: 4, 11: 8}
    assert theta_coefficients(e8, 4) == {0: 1, 2: 240, 4: 2160}


def test_m1_missing_norms():
    coeffs = theta_coefficients(M1, 11)
    assert all(Fraction(v) not in coeffs for v in (1, 2, 4, 5, 7, 10))


@pytest.mark.parametrize("lat,bound", [(M1, 20), (M2, 20),
                                       (GramLattice([[2, 1, 0], [1, 2, 1], [0, 1, 2]]), 8),
                                       (GramLattice([[4, 1], [1, 3]], 2), 9)])
def test_counts_match_box_oracle(lat, bound):
    assert short_vectors(lat, bound).counts == brute_counts(lat.gram, lat.scale, bound)


@given(st.integers(2, 12), st.integers(0, 2**32 - 1))
def test_counts_invariant_under_basis_change(n, seed):
    rng = np.random.default_rng(seed)
    base = rng.integers(-2, 3, size=(n, n)) + 3 * np.eye(n, dtype=np.int64)
    if det(base.tolist()) == 0:
        return
    lat = ScaledLattice(base.tolist(), 2)
    moved = ScaledLattice((random_unimodular(n, rng) @ base).tolist(), 2)
    assert moved.hnf == lat.hnf
    bound = Fraction(min(lat.gram[i][i] for i in range(n)), 2) + 3
    a = short_vectors(lat, bound)
    assert a.proven
    assert short_vectors(moved, bound).counts == a.counts
    assert short_vectors(lll_reduce(moved), bound).counts == a.counts


def test_vectors_have_claimed_norms():
    lat = construction_a(catalog.code("C22_32"))
    rep = short_vectors(lat, 4, collect=50)
    assert len(rep.vectors) == 50
    for v in rep.vectors:
        assert lat.vector_norm(v) == 4 and contains(lat, v)


def test_threads_give_same_counts():
    lat = construction_a(catalog.code("C22_32"))
    assert short_vectors(lat, 4, threads=3).counts == {4: 146880}


def test_budget_exhaustion_reports_lower_bounds():
    lat = construction_a(catalog.code("C22_32"))
    rep = short_vectors(lat, 4, budget=100000)
    assert rep.proof_status == "budget-exhausted"
    assert rep.counts.get(Fraction(4), 0) <= 146880
    assert json.loads(json.dumps(rep.to_json()))["proof_status"] == "budget-exhausted"
    with pytest.raises(BudgetExceeded):
        theta_coefficients(lat, 4, budget=1000)


def test_checkpoint_resume(tmp_path, monkeypatch):
    monkeypatch.setattr(enum, "CHECKPOINT_EVERY", 1000)
    lat = construction_a(catalog.code("C22_32"))
    ck = tmp_path / "state.json"
    first = short_vectors(lat, 4, budget=2_000_000, checkpoint=ck)
    assert not first.proven and ck.exists()
    second = short_vectors(lat, 4, budget=10**9, checkpoint=ck)
    assert second.proven and second.counts == {4: 146880}


# --- minimum norms ---------------------------------------------------------------

def test_min_norm_examples():
    assert min_norm(integer_lattice(5)).value == 1
    res = min_norm(construction_a(catalog.code("C22_32")))
    assert res.proven and res.value == 4
    res = min_norm(construction_a(catalog.code("C4T_W20_11")))
    assert res.proven and res.value == 4


def test_min_norm_budget_is_honest():
    lat = construction_a(catalog.code("C14_48"))
    res = min_norm(lat, budget=10**6)
    assert res.proof_status == "budget-exhausted"
    assert res.value == 6 and lat.vector_norm(res.vector) == 6


@pytest.mark.parametrize("k,n", [(2, 4), (2, 8), (3, 4), (3, 8), (4, 3), (4, 6), (4, 8),
                                 (5, 4), (5, 8)])
def test_min_norm_formula_on_small_codes(k, n, rng):
    for _ in range(3):
        code = random_self_dual_code(k, n, rng)
        d_e = min_weight_bruteforce(code, "euclidean")
        res = min_norm(construction_a(code))
        assert res.proven
        assert res.value == min(Fraction(k), Fraction(d_e, k))


# --- sublattices, duals, neighbors ----------------------------------------------

def test_even_sublattice_examples():
    l0 = even_sublattice(integer_lattice(2))
    assert gram_det(l0) == 4
    assert contains(l0, [1, 1]) and not contains(l0, [1, 0])
    d8 = even_sublattice(integer_lattice(8))
    assert gram_det(d8) == 4 and min_norm(d8).value == 2
    assert short_vectors(d8, 2).counts == {2: 112}
    lat = construction_a(catalog.code("C3_W24_23"))
    assert gram_det(even_sublattice(lat)) == 4
    with pytest.raises(ValueError, match="already even"):
        even_sublattice(construction_a(catalog.code("C22_32")))


def test_dual_examples():
    z = integer_lattice(4)
    assert dual(z) == z
    d8 = even_sublattice(integer_lattice(8))
    d8s = dual(d8)
    assert gram_det(d8) / gram_det(d8s) == 16
    assert is_sublattice(d8, d8s) and sublattice_index(d8, d8s) == 4
    m1d = dual(M1)
    scaled = [[Fraction(v * 23, m1d.scale) for v in row] for row in m1d.gram]
    assert all(v.denominator == 1 for row in scaled for v in row)
    prod = np.array(M1.gram, dtype=object).dot(np.array(scaled, dtype=object))
    assert prod.tolist() == (23 * np.eye(4, dtype=np.int64)).tolist()


@pytest.mark.parametrize("name", ["C22_32", "C3_W24_23"])
def test_unimodular_lattices_are_self_dual(name):
    lat = construction_a(catalog.code(name))
    assert dual(lat) == lat


def test_contains_examples():
    assert contains(integer_lattice(2), [1, 1])
    with pytest.raises(ValueError):
        contains(integer_lattice(2), [1, 1, 1])


@pytest.mark.parametrize("n", [8, 16])
def test_even_neighbors_of_integer_lattice(n):
    z = integer_lattice(n)
    pair = even_neighbors(z)
    l0 = even_sublattice(z)
    for m in pair.members:
        assert is_even(m) and is_unimodular(m)
        assert is_sublattice(l0, m) and sublattice_index(l0, m) == 2
        assert min_norm(m).value == 2
    assert intersection(pair.first, pair.second) == l0
    assert pair.first != pair.second
    if n == 8:
        assert all(short_vectors(m, 2).counts == {2: 240} for m in pair.members)


def test_neighbor_vectors_have_even_norms(rng):
    pair = even_neighbors(construction_a(catalog.code("C3_W24_23")))
    for m in pair.members:
        for _ in range(50):
            x = rng.integers(-3, 4, size=m.dim)
            v = x @ np.array(m.rows, dtype=object)
            norm = m.vector_norm(v)
            assert norm.denominator == 1 and norm % 2 == 0


def test_neighbor_errors():
    with pytest.raises(ValueError):
        even_neighbors(integer_lattice(4))
    with pytest.raises(ValueError):
        even_neighbors(even_neighbors(integer_lattice(8)).first)


def test_find_frame(e8):
    frame = find_frame(e8, 2)
    assert frame is not None and len(frame) == 8
    g = np.array(frame) @ np.array(frame).T
    assert np.array_equal(g, 2 * e8.scale * np.eye(8, dtype=np.int64))
    assert find_frame(integer_lattice(3), 2) is None
