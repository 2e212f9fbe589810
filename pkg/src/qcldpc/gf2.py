"""Binary linear algebra on packed rows.

Rows are Python ints used as bitsets: bit ``j`` of a row is column ``j``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def pack_rows(dense: np.ndarray) -> list[int]:
    dense = np.asarray(dense, dtype=np.uint8) & 1
    out = []
    for row in dense:
        # little-endian bit order so that bit j <-> column j
        out.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return out


def unpack_rows(rows: Sequence[int], ncols: int) -> np.ndarray:
    nbytes = (ncols + 7) // 8
    out = np.zeros((len(rows), ncols), dtype=np.uint8)
    for i, r in enumerate(rows):
        bits = np.unpackbits(np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8), bitorder="little")
        out[i] = bits[:ncols]
    return out


def support(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def weight(v: int) -> int:
    return v.bit_count()


def rank(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = r
                break
            r ^= p
    return len(pivots)


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero reduced rows, pivot columns)."""
    rows = list(rows)
    pivcols = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        for i in range(r, len(rows)):
            if rows[i] & bit:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r]
        for j in range(len(rows)):
            if j != r and rows[j] & bit:
                rows[j] ^= piv
        pivcols.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivcols


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of {c : row . c = 0 for every row}, one vector per free column."""
    red, pivcols = rref(rows, ncols)
    pivset = set(pivcols)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = 1 << f
        fbit = 1 << f
        for row, pc in zip(red, pivcols):
            if row & fbit:
                v |= 1 << pc
        basis.append(v)
    return basis


def in_kernel(rows: Sequence[int], v: int) -> bool:
    return all((r & v).bit_count() % 2 == 0 for r in rows)
