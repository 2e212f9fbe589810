"""JSON schemas and alist serialisation.

Matrix:     {"rows": R, "cols": C, "entries": [[...], ...]}
Spreading:  {"base": <matrix>, "parts": [<matrix>, ...]}
Shifts:     {"N": n, "shifts": [[row, col, [exponents...]], ...]}   (0-indexed cells)
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from scipy import sparse

from .errors import ValidationError
from .protograph import BaseMatrix, EdgeSpreading, validate_spreading
from .qc_lift import QCParityCheck, ShiftAssignment


class ParseError(ValueError):
    """Input text is not valid JSON/alist or does not follow the schema."""


def _load_json(path) -> object:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def matrix_from_json(obj) -> BaseMatrix:
    if not isinstance(obj, dict) or not {"rows", "cols", "entries"} <= obj.keys():
        raise ParseError('matrix must be an object with "rows", "cols" and "entries"')
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not (_is_int(rows) and _is_int(cols)) or not isinstance(entries, list):
        raise ParseError('"rows" and "cols" must be integers and "entries" a list')
    if len(entries) != rows or any(not isinstance(r, list) or len(r) != cols for r in entries):
        raise ParseError(f"entries do not form a {rows} x {cols} grid")
    if any(not _is_int(v) for r in entries for v in r):
        raise ParseError("entries must be integers")
    try:
        return BaseMatrix(entries)
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc


def matrix_to_json(b: BaseMatrix) -> dict:
    return {"rows": b.n_c, "cols": b.n_v, "entries": b.tolist()}


def spreading_from_json(obj) -> EdgeSpreading:
    if not isinstance(obj, dict) or "base" not in obj or not isinstance(obj.get("parts"), list):
        raise ParseError('spreading must be an object with "base" and a "parts" list')
    base = matrix_from_json(obj["base"])
    parts = [matrix_from_json(p) for p in obj["parts"]]
    return validate_spreading(base, parts)


def spreading_to_json(s: EdgeSpreading) -> dict:
    return {"base": matrix_to_json(s.base), "parts": [matrix_to_json(p) for p in s.parts]}


def shifts_from_json(obj) -> ShiftAssignment:
    if not isinstance(obj, dict) or not _is_int(obj.get("N")) or not isinstance(obj.get("shifts"), list):
        raise ParseError('shifts must be an object with integer "N" and a "shifts" list')
    cells = {}
    for item in obj["shifts"]:
        if (
            not isinstance(item, list) or len(item) != 3
            or not _is_int(item[0]) or not _is_int(item[1])
            or not isinstance(item[2], list) or any(not _is_int(e) for e in item[2])
        ):
            raise ParseError(f"bad shift entry {item!r}; expected [row, col, [exponents...]]")
        cell = (item[0], item[1])
        if cell in cells:
            raise ParseError(f"cell {list(cell)} listed twice")
        cells[cell] = tuple(item[2])
    return ShiftAssignment(obj["N"], cells)


def shifts_to_json(a: ShiftAssignment) -> dict:
    return {"N": a.N, "shifts": [[x, y, list(e)] for (x, y), e in sorted(a.shifts.items())]}


def load_matrix(path) -> BaseMatrix:
    return matrix_from_json(_load_json(path))


def load_spreading(path) -> EdgeSpreading:
    return spreading_from_json(_load_json(path))


def load_shifts(path) -> ShiftAssignment:
    return shifts_from_json(_load_json(path))


# -- alist ----------------------------------------------------------------------

def to_alist(bits) -> str:
    """alist text, variable-major: first line is "n m" (columns, rows), neighbour lists 1-indexed."""
    if isinstance(bits, QCParityCheck):
        bits = bits.bits
    h = sparse.csr_matrix(bits)
    m, n = h.shape
    csc = h.tocsc()
    col_nbrs = [csc.indices[csc.indptr[j]:csc.indptr[j + 1]] + 1 for j in range(n)]
    row_nbrs = [h.indices[h.indptr[i]:h.indptr[i + 1]] + 1 for i in range(m)]
    max_c = max((len(c) for c in col_nbrs), default=0)
    max_r = max((len(r) for r in row_nbrs), default=0)

    def padded(nbrs, width):
        vals = sorted(int(v) for v in nbrs) + [0] * (width - len(nbrs))
        return " ".join(str(v) for v in vals)

    lines = [
        f"{n} {m}",
        f"{max_c} {max_r}",
        " ".join(str(len(c)) for c in col_nbrs),
        " ".join(str(len(r)) for r in row_nbrs),
    ]
    lines += [padded(c, max_c) for c in col_nbrs]
    lines += [padded(r, max_r) for r in row_nbrs]
    return "\n".join(lines) + "\n"


def from_alist(text: str) -> sparse.csr_matrix:
    try:
        tokens = [int(t) for t in text.split()]
        n, m, max_c, max_r = tokens[:4]
        pos = 4
        col_deg = tokens[pos:pos + n]
        pos += n
        pos += m  # row degrees are implied by the column lists
        rows, cols = [], []
        for j in range(n):
            nbrs = tokens[pos:pos + max_c]
            pos += max_c
            for i in nbrs[:col_deg[j]]:
                if i:
                    rows.append(i - 1)
                    cols.append(j)
        if pos > len(tokens):
            raise ValueError("file ends before the neighbour lists do")
    except (ValueError, IndexError) as exc:
        raise ParseError(f"malformed alist: {exc}") from exc
    data = np.ones(len(rows), dtype=np.uint8)
    return sparse.csr_matrix((data, (rows, cols)), shape=(m, n))
