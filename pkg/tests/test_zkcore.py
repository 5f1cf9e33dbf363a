import numpy as np
import pytest
from hypothesis import given, strategies as st

from latframe import catalog
from latframe.errors import BudgetExceeded, UnsupportedError
from latframe.zkcore import (
    NegacirculantSpec, ZkCode, bordered_qr_matrix, code_size, crt_combine, crt_value,
    direct_sum, euclidean_weight, four_block_generator, hamming_weight, iter_codewords,
    min_hamming_weight_isd, min_weight_bruteforce, negacirculant, random_self_dual_code,
    self_dual_check, type2_check, weighing_check,
)

HAMMING_8 = ZkCode(2, [[1, 0, 0, 0, 0, 1, 1, 1], [0, 1, 0, 0, 1, 0, 1, 1],
                       [0, 0, 1, 0, 1, 1, 0, 1], [0, 0, 0, 1, 1, 1, 1, 0]])
# [I | M] with M M^T = -I over Z_11 (1 + 9 = 10)
Z11_4 = ZkCode(11, [[1, 0, 1, 3], [0, 1, -3, 1]])


# --- matrices ------------------------------------------------------------------

def test_negacirculant_examples():
    assert negacirculant([0, 1, 2]).tolist() == [[0, 1, 2], [-2, 0, 1], [-1, -2, 0]]
    assert negacirculant([5]).tolist() == [[5]]
    assert negacirculant([0, 1, 2], negate=False).tolist() == [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
    with pytest.raises(ValueError):
        negacirculant([])


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=9))
def test_negacirculant_gram_is_symmetric(row):
    a = negacirculant(row)
    g = a @ a.T
    assert np.array_equal(g, g.T)
    assert np.array_equal(a.T.T, a)
    # A A^T is again negacirculant: determined by its first row
    assert np.array_equal(g, negacirculant(g[0]))


def test_four_block_small_case():
    code = four_block_generator(NegacirculantSpec(4, (0,), (1,)))
    assert code.generator.tolist() == [[1, 0, 0, 1], [0, 1, 3, 0]]
    assert code.standard_form


def test_four_block_table_shapes():
    c = catalog.code("C22_32")
    assert (c.k, c.generator.shape) == (22, (16, 32))
    c = catalog.code("C34_56")
    assert (c.k, c.generator.shape) == (34, (28, 56))


def test_four_block_rejects_mismatched_rows():
    with pytest.raises(ValueError):
        NegacirculantSpec(4, (0, 1), (1,))


@given(st.integers(2, 13), st.integers(1, 5), st.data())
def test_self_orthogonal_iff_sum_condition(k, n4, data):
    ra = data.draw(st.lists(st.integers(0, k - 1), min_size=n4, max_size=n4))
    rb = data.draw(st.lists(st.integers(0, k - 1), min_size=n4, max_size=n4))
    a, b = negacirculant(ra), negacirculant(rb)
    cond = np.all((a @ a.T + b @ b.T + np.eye(n4, dtype=np.int64)) % k == 0)
    g = four_block_generator(NegacirculantSpec(k, tuple(ra), tuple(rb))).generator
    assert bool(np.all((g @ g.T) % k == 0)) == bool(cond)


def test_bordered_qr_listing_and_weights():
    w = bordered_qr_matrix(23)
    assert w[1, 1:].tolist() == [0, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1,
                                 1, -1, -1, -1, -1]
    assert w[1, 1:].tolist() == list(catalog.W24_23_CORE)
    w11 = bordered_qr_matrix(11)
    assert w11[1, 1:].tolist() == [0, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1]
    w3 = bordered_qr_matrix(3)
    assert np.array_equal(w3 @ w3.T, 3 * np.eye(4, dtype=np.int64))
    assert np.array_equal(w3.T, -w3)


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23])
def test_bordered_qr_is_skew_weighing(p):
    assert weighing_check(bordered_qr_matrix(p), p, skew=True)


@pytest.mark.parametrize("p", [2, 5, 9, 13])
def test_bordered_qr_rejects(p):
    with pytest.raises(ValueError):
        bordered_qr_matrix(p)


def test_weighing_check_examples():
    assert weighing_check(catalog.matrix("W20_11"), 11, skew=True)
    assert weighing_check(catalog.matrix("D28"), 29, skew=True, max_entry=2)
    res = weighing_check(np.eye(3, dtype=np.int64), 1, skew=True)
    assert not res and res.detail
    # D28 uses +-2 entries, so the plain weighing alphabet rejects it
    assert not weighing_check(catalog.matrix("D28"), 29, skew=True)


# --- weights -------------------------------------------------------------------

def test_weights():
    assert euclidean_weight([1, 2, 0, 3], 4) == 6
    assert euclidean_weight([0, 0, 0], 5) == 0
    assert euclidean_weight([11], 22) == 121
    assert hamming_weight([1, 0, 2]) == 2
    assert hamming_weight([0, 0]) == 0
    c5 = catalog.code("C5_D28")
    row = c5.generator[0]
    d_row = catalog.matrix("D28")[0] % 5
    assert hamming_weight(row) == 1 + int(np.count_nonzero(d_row))


@given(st.integers(2, 30), st.lists(st.integers(-100, 100), max_size=12))
def test_euclidean_weight_is_negation_invariant(k, v):
    assert euclidean_weight([x % k for x in v], k) == euclidean_weight([-x % k for x in v], k)


# --- self-duality and Type II ---------------------------------------------------

def test_self_dual_examples():
    assert self_dual_check(ZkCode(4, [[2, 0], [0, 2]]))
    assert self_dual_check(catalog.code("C5_D28"))
    assert not self_dual_check(ZkCode(4, [[1, 1]]))
    assert self_dual_check(ZkCode(4, [[2]]))
    assert not self_dual_check(ZkCode(3, [[0, 0, 0]]))


def test_type2_examples():
    assert type2_check(catalog.code("C22_32"))
    assert type2_check(catalog.code("C8_72"))
    rep = type2_check(ZkCode(4, [[2, 0], [0, 2]]))
    assert rep.self_dual and not rep.even and not rep
    with pytest.raises(ValueError):
        type2_check(ZkCode(3, [[1, 1, 1]]))


@pytest.mark.parametrize("name", ["C22_32", "C14_48", "C46_64", "C8_72"])
def test_sampled_codewords_have_divisible_weights(name, rng):
    code = catalog.code(name)
    q = 2 * code.k
    for _ in range(200):
        msg = rng.integers(0, code.k, size=code.rows)
        word = (msg @ code.generator) % code.k
        assert euclidean_weight(word, code.k) % q == 0


def test_code_size_and_enumeration():
    assert code_size(HAMMING_8) == 16
    words = np.concatenate(list(iter_codewords(HAMMING_8, chunk=5)))
    assert len({tuple(w) for w in words}) == 16
    assert not words[0].any()


# --- CRT ----------------------------------------------------------------------

def test_crt_values():
    assert crt_value(1, 0, 11) == 11
    assert crt_value(0, 1, 11) == 12


def test_crt_combine_round_trip():
    ck = direct_sum([Z11_4, Z11_4])
    assert self_dual_check(ck)
    out = crt_combine(HAMMING_8, ck)
    assert out.k == 22 and out.n == 8
    assert self_dual_check(out)
    assert out.reduce(2) == HAMMING_8
    assert out.reduce(11) == ck


def test_crt_combine_errors():
    with pytest.raises(ValueError):
        crt_combine(HAMMING_8, Z11_4)
    with pytest.raises(ValueError):
        crt_combine(HAMMING_8, ZkCode(4, np.eye(8, dtype=np.int64)))


# --- minimum weights -----------------------------------------------------------

def test_min_weight_examples():
    assert min_weight_bruteforce(ZkCode(4, [[2, 0], [0, 2]]), "euclidean") == 4
    assert min_weight_bruteforce(HAMMING_8, "hamming") == 4
    assert min_weight_bruteforce(ZkCode(4, [[2, 0], [0, 2]]), "hamming") == 1
    assert min_hamming_weight_isd(ZkCode(2, [[1, 1, 1, 1]])) == 4


def test_min_weight_cap():
    with pytest.raises(BudgetExceeded, match="65536"):
        min_weight_bruteforce(direct_sum([HAMMING_8] * 4), cap=1000)


def test_isd_rejects_composite():
    with pytest.raises(UnsupportedError):
        min_hamming_weight_isd(ZkCode(4, [[2, 0], [0, 2]]))


@pytest.mark.parametrize("k,n", [(2, 8), (2, 12), (3, 8), (3, 12), (5, 6), (5, 8)])
def test_isd_matches_bruteforce(k, n, rng):
    for _ in range(4):
        code = random_self_dual_code(k, n, rng)
        assert self_dual_check(code)
        assert min_hamming_weight_isd(code) == min_weight_bruteforce(code, "hamming")


def test_isd_pless_code():
    assert min_hamming_weight_isd(catalog.code("C3_W24_23")) == 15
