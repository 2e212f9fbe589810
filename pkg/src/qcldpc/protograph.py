"""Protograph base matrices, edge spreadings, termination and graph covers.

A protograph is stored only through its multiplicity matrix: entry (x, y)
counts the parallel edges between check node x and variable node y.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidEntries, NotACover, SumMismatch

MAX_ENTRY = 255


class BaseMatrix:
    """Immutable nonnegative integer matrix (check nodes x variable nodes)."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim == 1 and a.size > 0:
            a = a.reshape(1, -1)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise InvalidEntries(f"base matrix must be a nonempty 2-D grid, got shape {a.shape}")
        if (a < 0).any():
            raise InvalidEntries("base matrix entries must be nonnegative")
        if (a > MAX_ENTRY).any():
            raise InvalidEntries(f"edge multiplicities above {MAX_ENTRY} are not supported")
        a.flags.writeable = False
        self._a = a

    @property
    def entries(self) -> np.ndarray:
        return self._a

    @property
    def n_c(self) -> int:
        return self._a.shape[0]

    @property
    def n_v(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def __getitem__(self, key):
        return self._a[key]

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def check_degrees(self) -> list[int]:
        return self._a.sum(axis=1).tolist()

    def variable_degrees(self) -> list[int]:
        return self._a.sum(axis=0).tolist()

    def __eq__(self, other):
        if not isinstance(other, BaseMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self._a == other._a).all())

    def __hash__(self):
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self):
        return f"BaseMatrix({self.tolist()})"


def as_base(m) -> BaseMatrix:
    return m if isinstance(m, BaseMatrix) else BaseMatrix(m)


@dataclass(frozen=True)
class EdgeSpreading:
    """A decomposition ``base = parts[0] + ... + parts[ms]``."""

    base: BaseMatrix
    parts: tuple[BaseMatrix, ...]

    @property
    def ms(self) -> int:
        return len(self.parts) - 1

    @property
    def part_shape(self) -> tuple[int, int]:
        return self.base.shape


@dataclass(frozen=True)
class TerminatedProtograph:
    spreading: EdgeSpreading
    L: int
    assembled: BaseMatrix

    @property
    def ms(self) -> int:
        return self.spreading.ms


@dataclass(frozen=True)
class GraphCover:
    m: int
    original: EdgeSpreading
    covered: EdgeSpreading


def validate_spreading(base, parts: Sequence) -> EdgeSpreading:
    base = as_base(base)
    parts = tuple(as_base(p) for p in parts)
    if not parts:
        raise DimensionMismatch("an edge spreading needs at least one part")
    for i, p in enumerate(parts):
        if p.shape != base.shape:
            raise DimensionMismatch(f"part {i} has shape {p.shape}, base has {base.shape}")
    total = sum(p.entries for p in parts)
    bad = np.argwhere(total != base.entries)
    if len(bad):
        x, y = (int(v) for v in bad[0])
        raise SumMismatch((x, y), int(base[x, y]), int(total[x, y]))
    return EdgeSpreading(base, parts)


def spreading_from_parts(parts: Sequence) -> EdgeSpreading:
    """Spreading whose base is, by definition, the sum of ``parts``."""
    parts = [as_base(p) for p in parts]
    return validate_spreading(BaseMatrix(sum(p.entries for p in parts)), parts)


def terminate(spreading: EdgeSpreading, L: int) -> TerminatedProtograph:
    """Assemble the banded base matrix of the convolutional protograph cut to ``L`` time instants.

    Column block ``j`` carries ``parts[i]`` in row block ``j + i``.
    """
    if L < 1:
        raise ValueError(f"termination factor must be >= 1, got {L}")
    bc, bv = spreading.part_shape
    ms = spreading.ms
    out = np.zeros(((L + ms) * bc, L * bv), dtype=np.int64)
    for j in range(L):
        for i, part in enumerate(spreading.parts):
            out[(j + i) * bc:(j + i + 1) * bc, j * bv:(j + 1) * bv] = part.entries
    return TerminatedProtograph(spreading, L, BaseMatrix(out))


def design_rate(p) -> Fraction:
    """``1 - n_c / n_v`` as an exact rational; accepts a terminated protograph or a base matrix."""
    b = p.assembled if isinstance(p, TerminatedProtograph) else as_base(p)
    return 1 - Fraction(b.n_c, b.n_v)


def degree_profile(b) -> tuple[Counter, Counter]:
    """(check-degree multiset, variable-degree multiset)."""
    b = b.assembled if isinstance(b, TerminatedProtograph) else as_base(b)
    return Counter(b.check_degrees()), Counter(b.variable_degrees())


def cover_violation(original, covered, m: int):
    """First cell whose m x m block breaks the cover condition, or None.

    Returns ``(cell, detail)``.
    """
    original, covered = as_base(original), as_base(covered)
    rows, cols = original.shape
    if covered.shape != (m * rows, m * cols):
        return (0, 0), f"covered shape {covered.shape} != {(m * rows, m * cols)}"
    blocks = covered.entries.reshape(rows, m, cols, m)
    row_sums = blocks.sum(axis=3)  # rows x m x cols
    col_sums = blocks.sum(axis=1)  # rows x cols x m
    target = original.entries
    for x in range(rows):
        for y in range(cols):
            if (row_sums[x, :, y] != target[x, y]).any():
                return (x, y), f"row sums {row_sums[x, :, y].tolist()} != {target[x, y]}"
            if (col_sums[x, y, :] != target[x, y]).any():
                return (x, y), f"column sums {col_sums[x, y, :].tolist()} != {target[x, y]}"
    return None


def is_cover(original, covered, m: int) -> bool:
    return cover_violation(original, covered, m) is None


def check_cover(original: EdgeSpreading, covered: EdgeSpreading, m: int) -> GraphCover:
    if m < 1:
        raise ValueError(f"cover degree must be >= 1, got {m}")
    if len(covered.parts) != len(original.parts):
        raise DimensionMismatch(
            f"covered spreading has {len(covered.parts)} parts, original has {len(original.parts)}"
        )
    bc, bv = original.part_shape
    for i, (o, c) in enumerate(zip(original.parts, covered.parts)):
        if c.shape != (m * bc, m * bv):
            raise DimensionMismatch(f"covered part {i} has shape {c.shape}, expected {(m * bc, m * bv)}")
        bad = cover_violation(o, c, m)
        if bad is not None:
            raise NotACover(i, *bad)
    return GraphCover(m, original, covered)

