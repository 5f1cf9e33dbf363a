import numpy as np
import pytest

from latframe import catalog
from latframe.formats import (FormatError, format_code, format_frame, format_lattice,
                              format_matrix, parse_code, parse_frame, parse_lattice,
                              parse_matrix)
from latframe.lattice import ScaledLattice
from latframe.zkcore import ZkCode, type2_check


def test_code_round_trip():
    code = catalog.code("C22_32")
    back = parse_code(format_code(code))
    assert back == code
    assert np.array_equal(back.generator, code.generator)


def test_matrix_and_lattice_round_trip():
    m = [[1, -2], [3, 4]]
    assert parse_matrix(format_matrix(m)) == m
    lat = ScaledLattice([[2, 1], [0, 2]], 4)
    back = parse_lattice(format_lattice(lat))
    assert back.scale == 4 and back.rows == lat.rows


def test_frame_round_trip():
    vecs = [[2, 0], [0, 2]]
    assert parse_frame(format_frame(4, vecs)) == (4, vecs)


@pytest.mark.parametrize("text,line", [
    ("2 2 1\n1 x\n", 2),
    ("2 3 1\n1 0\n", 2),
    ("2 3\n", 1),
])
def test_code_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as err:
        parse_code(text, "bad.code")
    assert err.value.line == line
    assert "bad.code" in str(err.value)


def test_singular_lattice_file():
    with pytest.raises(FormatError):
        parse_lattice("1 2\n1 1\n1 1\n")


def test_comments_and_blank_lines():
    code = parse_code("# header\n4 2 1\n\n2 2  # row\n")
    assert code.generator.tolist() == [[2, 2]]


def test_catalog_golden_rows():
    # spot values transcribed from the source listings
    k, ra, rb = catalog.TABLE_CODES["C22_32"]
    assert k == 22 and ra == (0, 0, 0, 0, 1, 10, 21, 6) and rb == (11, 2, 20, 20, 9, 3, 21, 11)
    assert catalog.FOUR_BLOCK_MATRICES["W20_11"][0] == (0, 1, 0, 1, 0, 1, 0, 1, 0, 1)
    assert catalog.M8_72_ROWS[0] == "000404444444276260502007044004400004"
    assert len(catalog.M8_72_ROWS) == 36 and all(len(r) == 36 for r in catalog.M8_72_ROWS)
    assert catalog.GRAM_M1 == ((3, 0, 1, 0), (0, 69, 0, 23), (1, 0, 8, 0), (0, 23, 0, 8))
    assert catalog.GRAM_M2 == ((5, 0, 1, 0), (0, 145, 0, 29), (1, 0, 6, 0), (0, 29, 0, 6))


def test_catalog_names():
    assert set(catalog.TABLE_CODES) <= set(catalog.code_names())
    for name in ("W20_11", "W24_23", "W32_23", "W32_17", "D28", "M8_72"):
        assert name in catalog.matrix_names()
    with pytest.raises(KeyError):
        catalog.code("C99_99")


def test_catalog_override(tmp_path, monkeypatch):
    (tmp_path / "C22_32.code").write_text("4 2 1\n2 2\n")
    monkeypatch.setenv(catalog.ENV_VAR, str(tmp_path))
    code = catalog.code("C22_32")
    assert code.k == 4 and code.n == 2
    # entries without an override file still come from the embedded data
    assert catalog.code("C22_40").k == 22
    assert not type2_check(ZkCode(4, [[2, 2]]))
