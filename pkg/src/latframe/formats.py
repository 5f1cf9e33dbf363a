"""Plain-text file formats for codes, matrices, lattices and frames.

code:    ``k n g`` then ``g`` rows of ``n`` residues
matrix:  ``r c`` then ``r`` rows of ``c`` integers
lattice: ``s n`` then ``n`` rows of ``n`` integers (basis, scale ``s``)
frame:   ``k n`` then ``n`` rows (vectors in the host's scale convention)
"""
from __future__ import annotations

from pathlib import Path


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def _int_rows(text: str, source: str | None):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise FormatError(f"non-integer token in {raw.strip()!r}", lineno, source) from None
    if not out:
        raise FormatError("empty input", None, source)
    return out


def _table(text: str, header_len: int, source: str | None):
    rows = _int_rows(text, source)
    lineno, header = rows[0]
    if len(header) != header_len:
        raise FormatError(f"header needs {header_len} integers, got {len(header)}", lineno, source)
    return header, rows[1:]


def _body(rows, nrows: int, ncols: int, source: str | None, last_line: int):
    if len(rows) != nrows:
        line = rows[nrows][0] if len(rows) > nrows else last_line
        raise FormatError(f"expected {nrows} rows, found {len(rows)}", line, source)
    for lineno, row in rows:
        if len(row) != ncols:
            raise FormatError(f"expected {ncols} entries, found {len(row)}", lineno, source)
    return [row for _, row in rows]


def parse_code(text: str, source: str | None = None):
    (k, n, g), rows = _table(text, 3, source)
    if k < 2 or n < 1 or g < 1:
        raise FormatError(f"bad header k={k} n={n} g={g}", 1, source)
    body = _body(rows, g, n, source, len(text.splitlines()))
    from .zkcore import ZkCode

    return ZkCode(k, body, name=Path(source).stem if source else None)


def format_code(code) -> str:
    lines = [f"{code.k} {code.n} {code.rows}"]
    lines += [" ".join(str(int(v)) for v in row) for row in code.generator]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, source: str | None = None) -> list[list[int]]:
    (r, c), rows = _table(text, 2, source)
    return _body(rows, r, c, source, len(text.splitlines()))


def format_matrix(m) -> str:
    m = [[int(v) for v in row] for row in m]
    lines = [f"{len(m)} {len(m[0]) if m else 0}"]
    lines += [" ".join(str(v) for v in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_lattice(text: str, source: str | None = None):
    (s, n), rows = _table(text, 2, source)
    if s < 1 or n < 1:
        raise FormatError(f"bad header s={s} n={n}", 1, source)
    body = _body(rows, n, n, source, len(text.splitlines()))
    from .lattice import ScaledLattice

    try:
        return ScaledLattice(body, s)
    except ValueError as exc:
        raise FormatError(str(exc), None, source) from None


def format_lattice(lat) -> str:
    lines = [f"{lat.scale} {lat.dim}"]
    lines += [" ".join(str(v) for v in row) for row in lat.basis]
    return "\n".join(lines) + "\n"


def parse_frame(text: str, source: str | None = None) -> tuple[int, list[list[int]]]:
    (k, n), rows = _table(text, 2, source)
    body = [row for _, row in rows]
    if len(body) != n:
        raise FormatError(f"expected {n} vectors, found {len(body)}", None, source)
    widths = {len(r) for r in body}
    if len(widths) != 1:
        raise FormatError("vectors have different lengths", None, source)
    return k, body


def format_frame(k: int, vectors) -> str:
    lines = [f"{k} {len(vectors)}"]
    lines += [" ".join(str(int(v)) for v in row) for row in vectors]
    return "\n".join(lines) + "\n"
