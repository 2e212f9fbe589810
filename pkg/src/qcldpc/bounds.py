"""Permanent-based minimum-distance upper bounds for QC protograph codes.

For a column set S of the base matrix with |S| = (number of rows) + 1,
every quasi-cyclic lift contains the codeword whose block i in S is the
GF(2)[X]/(X^N - 1) determinant of the polynomial submatrix on S minus i.
Its weight is at most the integer permanent of the matching base
submatrix, which yields the bound minimised in :func:`theorem1_bound`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import gf2
from .errors import (
    DimensionTooLarge,
    NoNonzeroBound,
    NoNonzeroCodeword,
    NotApplicable,
    NotSquare,
    SideTooLarge,
    WrongSubsetSize,
    ZeroDimension,
)
from .protograph import BaseMatrix, as_base
from .qc_lift import QCParityCheck, nullspace_basis, poly_mul

MAX_PERMANENT_SIDE = 16
MAX_EXHAUSTIVE_DIMENSION = 24
# column-subset table for the full-row bound costs 8 * 2**n_v bytes
_DP_MAX_COLUMNS = 22


# -- permanents ----------------------------------------------------------------

def _ryser(a: list[list[int]]) -> int:
    """Ryser's inclusion-exclusion formula walked in Gray-code order."""
    n = len(a)
    if n == 0:
        return 1
    sums = [0] * n
    total = 0
    sign = -1 if n % 2 else 1  # (-1)^(n - |T|) with T empty; flipped per step
    prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        j = (gray ^ prev).bit_length() - 1
        if gray & (1 << j):
            for i in range(n):
                sums[i] += a[i][j]
        else:
            for i in range(n):
                sums[i] -= a[i][j]
        prev = gray
        sign = -sign
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        total += sign * prod
    return total


def permanent(m) -> int:
    """Exact permanent of a square nonnegative integer matrix (side <= 16)."""
    a = np.asarray(m, dtype=np.int64)
    if a.size == 0:
        return 1
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"permanent needs a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_PERMANENT_SIDE:
        raise SideTooLarge(f"side {a.shape[0]} exceeds the cap of {MAX_PERMANENT_SIDE}")
    return _ryser(a.tolist())


@lru_cache(maxsize=None)
def _subset_indicator(n: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(1, 1 << n, dtype=np.int64)
    ind = ((idx[:, None] >> np.arange(n)) & 1).astype(np.int64)
    signs = np.where((n - ind.sum(axis=1)) % 2, -1, 1).astype(np.int64)
    return ind, signs


def _fits_int64(a: np.ndarray) -> bool:
    n = a.shape[0]
    bound = 1
    for s in a.sum(axis=1).tolist():
        bound *= max(int(s), 1)
    return bound << n < 2**62


def _permanent_fast(a: np.ndarray) -> int:
    """Vectorised Ryser; falls back to exact Python integers when int64 could overflow."""
    n = a.shape[0]
    if n == 0:
        return 1
    if n > MAX_PERMANENT_SIDE or not _fits_int64(a):
        return _ryser(a.tolist())
    ind, signs = _subset_indicator(n)
    rowsums = ind @ a.T
    return int(np.dot(np.prod(rowsums, axis=1), signs))


def _row_prefix_permanents(a: np.ndarray, depth: int) -> np.ndarray:
    """P[T] = perm(a[:|T|, T]) for every column bitmask T with |T| <= depth."""
    n_v = a.shape[1]
    size = 1 << n_v
    masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    for y in range(n_v):
        pop += (masks >> y) & 1
    exact = not _fits_int64(a[:depth])
    P = np.zeros(size, dtype=object if exact else np.int64)
    P[0] = 1
    for k in range(1, depth + 1):
        level = masks[pop == k]
        row = a[k - 1]
        for y in range(n_v):
            if not row[y]:
                continue
            sel = level[(level >> y) & 1 == 1]
            P[sel] += int(row[y]) * P[sel ^ (1 << y)]
    return P


# -- the bound -------------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    value: int
    witness: tuple[int, ...]
    rows: tuple[int, ...]
    subsets_examined: int
    complete: bool = True
    per_subset: dict | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        """JSON form; rows and columns are 1-indexed."""
        return {
            "bound": self.value,
            "witness": [c + 1 for c in self.witness],
            "rows": [r + 1 for r in self.rows],
            "subsets_examined": self.subsets_examined,
            "complete": self.complete,
        }


def subset_sum(b, subset: Sequence[int], rows: Sequence[int] | None = None) -> int:
    """Sum over i in ``subset`` of perm(B[rows, subset minus i])."""
    a = as_base(b).entries
    rows = range(a.shape[0]) if rows is None else rows
    sub = a[np.ix_(list(rows), list(subset))]
    if sub.shape[1] != sub.shape[0] + 1:
        raise WrongSubsetSize(f"need {sub.shape[0] + 1} columns for {sub.shape[0]} rows, got {sub.shape[1]}")
    # expanding along a prepended all-ones row gives exactly the sum of minors
    return _permanent_fast(np.vstack([np.ones(sub.shape[1], dtype=np.int64), sub]))


def theorem1_bound(
    b,
    *,
    submatrices: bool = False,
    max_subsets: int | None = None,
    keep_table: bool = False,
) -> BoundReport:
    """Smallest nonzero permanent-sum bound on the minimum distance of every QC lift of ``b``.

    Default: column sets S of size n_c + 1 against all n_c rows.  With
    ``submatrices=True`` every column set S whose touched rows R(S) number
    exactly |S| - 1 is also tried, using the submatrix on (R(S), S); any
    such bound applies because the remaining rows vanish on S.
    """
    b = as_base(b)
    if submatrices:
        return _submatrix_bound(b, max_subsets, keep_table)
    n_c, n_v = b.shape
    if n_v < n_c + 1:
        raise NotApplicable(f"need at least {n_c + 1} columns for {n_c} rows, got {n_v}")
    a = b.entries
    table = {} if keep_table else None
    best, witness = None, None
    examined = 0
    complete = True
    combos = itertools.combinations(range(n_v), n_c + 1)
    if n_v <= _DP_MAX_COLUMNS:
        P = _row_prefix_permanents(a, n_c)
        for S in combos:
            if max_subsets is not None and examined >= max_subsets:
                complete = False
                break
            examined += 1
            mask = 0
            for y in S:
                mask |= 1 << y
            total = 0
            for y in S:
                total += int(P[mask ^ (1 << y)])
                if best is not None and total > best and table is None:
                    break
            else:
                if table is not None:
                    table[S] = total
                if total and (best is None or total < best):
                    best, witness = total, S
    else:
        for S in combos:
            if max_subsets is not None and examined >= max_subsets:
                complete = False
                break
            examined += 1
            total = subset_sum(b, S)
            if table is not None:
                table[S] = total
            if total and (best is None or total < best):
                best, witness = total, S
    if best is None:
        raise NoNonzeroBound("every column subset has a zero permanent sum")
    return BoundReport(best, tuple(witness), tuple(range(n_c)), examined, complete, table)


def _submatrix_bound(b: BaseMatrix, max_subsets, keep_table) -> BoundReport:
    a = b.entries
    n_c, n_v = b.shape
    colmask = [sum(1 << x for x in range(n_c) if a[x, y]) for y in range(n_v)]
    table = {} if keep_table else None
    best = None
    examined = 0
    complete = True
    for size in range(2, min(n_v, n_c + 1) + 1):
        for S in itertools.combinations(range(n_v), size):
            if max_subsets is not None and examined >= max_subsets:
                complete = False
                break
            examined += 1
            m = 0
            for y in S:
                m |= colmask[y]
            if m.bit_count() != size - 1:
                continue
            R = tuple(gf2.support(m))
            total = subset_sum(b, S, R)
            if table is not None:
                table[(S, R)] = total
            if total and (best is None or (total, S) < (best[0], best[1])):
                best = (total, S, R)
        else:
            continue
        break
    if best is None:
        raise NoNonzeroBound("no column subset yields a nonzero permanent sum")
    return BoundReport(best[0], best[1], best[2], examined, complete, table)


# -- explicit codewords ------------------------------------------------------------

@dataclass(frozen=True)
class CofactorCodeword:
    subset: tuple[int, ...]
    rows: tuple[int, ...]
    N: int
    polynomials: dict  # column -> bitmask polynomial
    expanded: int  # packed codeword, bit y*N + j is coefficient j of block y
    integer_bound: int

    @property
    def weight(self) -> int:
        return self.expanded.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.expanded == 0

    def support(self) -> list[int]:
        return gf2.support(self.expanded)

    def to_array(self, n: int) -> np.ndarray:
        return gf2.unpack_rows([self.expanded], n)[0]

    def to_json(self) -> dict:
        return {
            "subset": [c + 1 for c in self.subset],
            "rows": [r + 1 for r in self.rows],
            "N": self.N,
            "weight": self.weight,
            "is_zero": self.is_zero,
            "integer_bound": self.integer_bound,
            "blocks": [
                {"column": c + 1, "exponents": gf2.support(self.polynomials[c])} for c in self.subset
            ],
            "support": self.support(),
        }


def _ring_determinant(mat: list[list[int]], N: int) -> int:
    """Determinant (= permanent in characteristic 2) over GF(2)[X]/(X^N - 1), Laplace along rows."""
    n = len(mat)

    @lru_cache(maxsize=None)
    def det(k: int, cols: int) -> int:
        if k == n:
            return 1
        acc = 0
        row = mat[k]
        for j in range(n):
            if cols >> j & 1 and row[j]:
                minor = det(k + 1, cols & ~(1 << j))
                if minor:
                    acc ^= poly_mul(row[j], minor, N)
        return acc

    return det(0, (1 << n) - 1)


def cofactor_codeword(h: QCParityCheck, subset: Sequence[int], rows: Sequence[int] | None = None) -> CofactorCodeword:
    """Codeword of the lift built from the cofactors of the polynomial submatrix on ``subset``.

    ``rows`` defaults to every check row; a smaller row set is allowed only
    when the omitted rows vanish on ``subset``.  The result may be the zero
    vector (check ``is_zero``).
    """
    base = h.base
    subset = tuple(int(c) for c in subset)
    rows = tuple(range(base.n_c)) if rows is None else tuple(int(r) for r in rows)
    if len(subset) != len(rows) + 1 or len(set(subset)) != len(subset):
        raise WrongSubsetSize(f"need {len(rows) + 1} distinct columns for {len(rows)} rows, got {list(subset)}")
    outside = [x for x in range(base.n_c) if x not in set(rows)]
    if outside and base.entries[np.ix_(outside, list(subset))].any():
        raise NotApplicable("omitted rows must be zero on the chosen columns")
    N = h.N
    P = h.poly.entries
    polys = {}
    expanded = 0
    for i in subset:
        cols = [c for c in subset if c != i]
        w = _ring_determinant([[P[x][c] for c in cols] for x in rows], N)
        polys[i] = w
        expanded |= w << (i * N)
    return CofactorCodeword(subset, rows, N, polys, expanded, subset_sum(base, subset, rows))


# -- searches ------------------------------------------------------------------------

def exhaustive_dmin(h: QCParityCheck, max_dimension: int = MAX_EXHAUSTIVE_DIMENSION) -> int:
    """Exact minimum distance by Gray-code walk over all nonzero codewords."""
    basis = nullspace_basis(h)
    k = len(basis)
    if k > max_dimension:
        raise DimensionTooLarge(f"dimension {k} exceeds the exhaustive cap of {max_dimension}")
    if k == 0:
        raise NoNonzeroCodeword("the code has dimension 0")
    best = None
    v = 0
    for i in range(1, 1 << k):
        v ^= basis[(i & -i).bit_length() - 1]
        w = v.bit_count()
        if best is None or w < best:
            best = w
    return best


def isd_codeword(h: QCParityCheck, iterations: int, seed: int) -> tuple[int, int]:
    """Randomised information-set search; returns (weight, packed codeword) of the lightest find.

    Each iteration draws a random column order, brings the generator matrix
    to systematic form on the first independent columns in that order, and
    inspects every sum of at most two systematic rows.
    """
    if iterations < 1:
        raise ValueError("iterations must be positive")
    n = h.shape[1]
    G = nullspace_basis(h)
    k = len(G)
    if k == 0:
        raise ZeroDimension("the code has dimension 0")
    rng = np.random.default_rng(seed)
    best_v = min(G, key=int.bit_count)
    best = best_v.bit_count()
    for _ in range(iterations):
        order = rng.permutation(n).tolist()
        free = list(range(k))
        for col in order:
            if not free:
                break
            bit = 1 << col
            for pos, r in enumerate(free):
                if G[r] & bit:
                    break
            else:
                continue
            free.pop(pos)
            piv = G[r]
            for j in range(k):
                if j != r and G[j] & bit:
                    G[j] ^= piv
        for i in range(k):
            gi = G[i]
            w = gi.bit_count()
            if w < best:
                best, best_v = w, gi
            for j in range(i + 1, k):
                v = gi ^ G[j]
                w = v.bit_count()
                if w < best:
                    best, best_v = w, v
    return best, best_v


def isd_search(h: QCParityCheck, iterations: int, seed: int) -> int:
    return isd_codeword(h, iterations, seed)[0]
