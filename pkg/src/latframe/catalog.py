"""Explicit matrices and codes listed in the source tables, kept verbatim.

Entries are addressable by name (``C22_32``, ``W24_23``, ``M8_72``, ...).
Setting ``LATFRAME_CATALOG`` to a directory lets ``NAME.code`` / ``NAME.mat``
files there replace the embedded data.
"""
from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .formats import parse_code, parse_matrix
from .zkcore import NegacirculantSpec, ZkCode, four_block_generator, four_block_negacirculant, circulant
from .zkcore.matrices import identity_plus

ENV_VAR = "LATFRAME_CATALOG"

# Four-block negacirculant Type II codes: name -> (2k, r_A, r_B)
TABLE_CODES: dict[str, tuple[int, tuple[int, ...], tuple[int, ...]]] = {
    "C22_32": (22, (0, 0, 0, 0, 1, 10, 21, 6),
               (11, 2, 20, 20, 9, 3, 21, 11)),
    "C22_40": (22, (0, 0, 0, 0, 1, 19, 2, 10, 1, 6),
               (13, 1, 10, 14, 10, 16, 13, 6, 9, 4)),
    "C14_48": (14, (1, 11, 6, 6, 9, 9, 11, 1, 7, 0, 7, 7),
               (5, 3, 11, 12, 4, 5, 1, 0, 4, 6, 11, 8)),
    "C46_48": (46, (0, 0, 1, 26, 29, 3, 13, 13, 45, 21, 0, 23),
               (30, 9, 23, 37, 33, 37, 35, 40, 6, 8, 33, 28)),
    "C14_56": (14, (0, 0, 0, 0, 1, 9, 0, 12, 8, 10, 12, 9, 12, 7),
               (8, 1, 13, 4, 9, 7, 9, 0, 10, 7, 0, 0, 8, 1)),
    "C34_56": (34, (0, 0, 0, 0, 1, 13, 6, 1, 4, 0, 6, 4, 22, 8),
               (17, 32, 4, 30, 1, 1, 6, 32, 31, 23, 23, 14, 9, 27)),
    "C46_56": (46, (0, 0, 0, 0, 1, 23, 6, 33, 43, 19, 30, 18, 29, 11),
               (17, 13, 32, 23, 42, 16, 38, 31, 29, 1, 30, 25, 41, 22)),
    "C14_64": (14, (0, 0, 0, 0, 1, 9, 1, 2, 7, 9, 13, 0, 10, 3, 10, 1),
               (0, 5, 12, 13, 5, 6, 8, 8, 1, 10, 8, 1, 3, 0, 8, 3)),
    "C46_64": (46, (0, 0, 0, 0, 1, 10, 24, 27, 35, 22, 7, 20, 22, 7, 36, 18),
               (5, 15, 19, 43, 19, 18, 35, 5, 5, 42, 34, 27, 23, 36, 4, 32)),
}

# Four-block negacirculant (0, +-1, +-2) matrices: name -> (r_A, r_B)
FOUR_BLOCK_MATRICES: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "W20_11": ((0, 1, 0, 1, 0, 1, 0, 1, 0, 1),
               (1, 1, -1, -1, 1, 0, 0, 1, 0, 0)),
    "D28": ((0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1),
            (-1, 0, 1, -1, 0, 2, -1, 2, 0, 1, 1, 0, -1, 2)),
    "W32_23": ((0, 1, 1, 0, -1, 1, -1, 0, 0, 0, -1, 1, -1, 0, 1, 1),
               (0, 1, 0, 1, 1, 1, 1, -1, 0, -1, -1, 1, -1, -1, -1, 1)),
    "W32_17": ((0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0),
               (0, 1, -1, -1, 0, -1, 1, 0, 1, -1, 1, 1, 1, 0, -1, 1)),
}

# First row of the circulant core of the bordered order-24 matrix.
W24_23_CORE = (0, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1, 1, -1, -1, -1, -1)

M8_72_ROWS = (
    "000404444444276260502007044004400004",
    "444400400444035522611141064440040444",
    "004040004004725430437502014040004004",
    "044444404444437162115704404040440400",
    "444440004044402144472442074400444044",
    "004404444040142273042604020004400400",
    "004400044040064160263204410444404444",
    "044404004044707461671100414000040000",
    "400404044000207033255140074004000440",
    "040040004044445560422004010000444044",
    "000000044040266504204702414044404444",
    "444444404440401366111547444040440404",
    "400404444440404004044424042414230661",
    "400044004000400400404404604064336223",
    "444440040004444444044424744660227162",
    "400000000004400000400000404030136026",
    "040444040440040404440054340031762541",
    "440404444404444004440454347236540305",
    "044040404400044440404040705211520543",
    "000000044040000004044060304300622360",
    "444000040044440044404050205221242642",
    "404404400404404040400444046756741311",
    "444444440400440444444020544732763677",
    "004400000000000040000020142220444752",
    "272420542247004004444404044004400004",
    "430216002627000400004404400400400040",
    "723141607130004440004404004040004004",
    "034454706026400000400040000000000004",
    "002357524571004000400404400440004440",
    "143224276042004044044004040004400400",
    "464551763307440404444040004404044040",
    "706143413552044040444000444000040000",
    "203707035152404004040040044004000440",
    "044516363535404040400444444040004440",
    "666517121453440444444040040004044040",
    "402433523733440440400040444040440404",
)

# Gram matrices of the two rank-4 congruence lattices.
GRAM_M1 = ((3, 0, 1, 0), (0, 69, 0, 23), (1, 0, 8, 0), (0, 23, 0, 8))
GRAM_M2 = ((5, 0, 1, 0), (0, 145, 0, 29), (1, 0, 6, 0), (0, 29, 0, 6))

# Weights (and max |entry|) of the skew matrices above.
MATRIX_WEIGHTS = {"W20_11": (11, 1), "W24_23": (23, 1), "W32_23": (23, 1),
                  "W32_17": (17, 1), "D28": (29, 2)}

# Codes ``[I | M]`` (or ``[I | M + 2I]`` for the Z_4 tilde form) over a catalog matrix.
DERIVED_CODES: dict[str, tuple[str, int, int]] = {
    "C3_W24_23": ("W24_23", 3, 0),
    "C3_W32_23": ("W32_23", 3, 0),
    "C3_W32_17": ("W32_17", 3, 0),
    "C5_D28": ("D28", 5, 0),
    "C4T_W20_11": ("W20_11", 4, 2),
    "C8_72": ("M8_72", 8, 0),
}


def _override_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def _override_file(name: str, suffix: str) -> Path | None:
    d = _override_dir()
    if d is None:
        return None
    path = d / f"{name}{suffix}"
    return path if path.is_file() else None


def embedded_matrix(name: str) -> np.ndarray:
    if name in FOUR_BLOCK_MATRICES:
        r_a, r_b = FOUR_BLOCK_MATRICES[name]
        return four_block_negacirculant(r_a, r_b)
    if name == "W24_23":
        out = np.zeros((24, 24), dtype=np.int64)
        out[0, 1:] = 1
        out[1:, 0] = -1
        out[1:, 1:] = circulant(W24_23_CORE)
        return out
    if name == "M8_72":
        return np.array([[int(ch) for ch in row] for row in M8_72_ROWS], dtype=np.int64)
    if name == "M1":
        return np.array(GRAM_M1, dtype=np.int64)
    if name == "M2":
        return np.array(GRAM_M2, dtype=np.int64)
    raise KeyError(f"unknown catalog matrix {name!r}")


def matrix(name: str) -> np.ndarray:
    path = _override_file(name, ".mat")
    if path is not None:
        return np.array(parse_matrix(path.read_text(), str(path)), dtype=np.int64)
    return embedded_matrix(name)


def embedded_code(name: str) -> ZkCode:
    if name in TABLE_CODES:
        k, r_a, r_b = TABLE_CODES[name]
        return four_block_generator(NegacirculantSpec(k, r_a, r_b), name=name)
    if name in DERIVED_CODES:
        mat, k, shift = DERIVED_CODES[name]
        return identity_plus(matrix(mat), k, shift, name=name)
    raise KeyError(f"unknown catalog code {name!r}")


def code(name: str) -> ZkCode:
    path = _override_file(name, ".code")
    if path is not None:
        return parse_code(path.read_text(), str(path))
    return embedded_code(name)


def matrix_names() -> list[str]:
    return list(FOUR_BLOCK_MATRICES) + ["W24_23", "M8_72", "M1", "M2"]


def code_names() -> list[str]:
    return list(TABLE_CODES) + list(DERIVED_CODES)
