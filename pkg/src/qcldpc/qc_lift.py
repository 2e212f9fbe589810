"""Circulant lifting of a base matrix and structural analysis of the lifted code.

Circulant convention: ``I_a`` is the N x N identity with each row shifted
cyclically left by ``a``, i.e. ``I_a[r, (r - a) mod N] = 1``.  With a code
vector block read as the polynomial ``c(X) = sum_j c[j] X^j``, multiplying
by ``I_a`` is multiplication by ``X^a`` in GF(2)[X]/(X^N - 1).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np
from scipy import sparse

from . import gf2
from .errors import (
    DuplicateExponent,
    ExponentOutOfRange,
    LengthMismatch,
    MultiplicityMismatch,
)
from .protograph import BaseMatrix, as_base

Cell = tuple[int, int]


@dataclass(frozen=True)
class ShiftAssignment:
    N: int
    shifts: Mapping[Cell, tuple[int, ...]]

    def __post_init__(self):
        if self.N < 1:
            raise ExponentOutOfRange(f"circulant size must be >= 1, got {self.N}")
        clean = {}
        for cell, exps in self.shifts.items():
            exps = tuple(int(e) for e in exps)
            for e in exps:
                if not 0 <= e < self.N:
                    raise ExponentOutOfRange(f"exponent {e} at cell {cell} outside [0, {self.N})")
            if len(set(exps)) != len(exps):
                raise DuplicateExponent(f"cell {cell} repeats an exponent: {list(exps)}")
            clean[(int(cell[0]), int(cell[1]))] = exps
        object.__setattr__(self, "shifts", clean)

    @classmethod
    def from_grid(cls, N: int, grid: Sequence[Sequence]) -> "ShiftAssignment":
        """Build from a row-major grid whose cells are exponent lists (empty or None for zero blocks)."""
        shifts = {}
        for x, row in enumerate(grid):
            for y, exps in enumerate(row):
                if exps is None:
                    continue
                if isinstance(exps, int):
                    exps = (exps,)
                if len(exps):
                    shifts[(x, y)] = tuple(exps)
        return cls(N, shifts)

    def check_against(self, base: BaseMatrix) -> None:
        a = base.entries
        for (x, y), exps in self.shifts.items():
            if not (0 <= x < base.n_c and 0 <= y < base.n_v):
                raise MultiplicityMismatch(f"cell ({x}, {y}) lies outside the {base.shape} base matrix")
            if len(exps) != a[x, y]:
                raise MultiplicityMismatch(
                    f"cell ({x}, {y}) has {len(exps)} exponents but multiplicity {a[x, y]}"
                )
        for x, y in zip(*np.nonzero(a)):
            if (int(x), int(y)) not in self.shifts:
                raise MultiplicityMismatch(f"cell ({x}, {y}) has multiplicity {a[x, y]} but no exponents")


def random_assignment(base, N: int, seed=None) -> ShiftAssignment:
    """Exponent sets drawn uniformly without replacement from [0, N)."""
    base = as_base(base)
    rng = np.random.default_rng(seed)
    shifts = {}
    for x, y in zip(*np.nonzero(base.entries)):
        r = int(base[x, y])
        if r > N:
            raise MultiplicityMismatch(f"multiplicity {r} exceeds circulant size {N}")
        shifts[(int(x), int(y))] = tuple(int(e) for e in rng.choice(N, size=r, replace=False))
    return ShiftAssignment(N, shifts)


# -- polynomial ring GF(2)[X]/(X^N - 1); polynomials are int bitmasks ---------

def poly_from_exponents(exps) -> int:
    p = 0
    for e in exps:
        p ^= 1 << e
    return p


def poly_rotate(p: int, a: int, N: int) -> int:
    a %= N
    if a == 0:
        return p
    mask = (1 << N) - 1
    return ((p << a) | (p >> (N - a))) & mask


def poly_mul(p: int, q: int, N: int) -> int:
    if p.bit_count() > q.bit_count():
        p, q = q, p
    out = 0
    for a in gf2.support(p):
        out ^= poly_rotate(q, a, N)
    return out


@dataclass(frozen=True)
class PolyMatrix:
    N: int
    entries: tuple[tuple[int, ...], ...]  # bitmask polynomials

    @classmethod
    def from_assignment(cls, base: BaseMatrix, a: ShiftAssignment) -> "PolyMatrix":
        grid = tuple(
            tuple(poly_from_exponents(a.shifts.get((x, y), ())) for y in range(base.n_v))
            for x in range(base.n_c)
        )
        return cls(a.N, grid)

    def exponents(self, x: int, y: int) -> list[int]:
        return gf2.support(self.entries[x][y])

    def to_dense(self) -> np.ndarray:
        N = self.N
        rows, cols = len(self.entries), len(self.entries[0])
        out = np.zeros((rows * N, cols * N), dtype=np.uint8)
        r = np.arange(N)
        for x in range(rows):
            for y in range(cols):
                for e in self.exponents(x, y):
                    out[x * N + r, y * N + (r - e) % N] ^= 1
        return out


@dataclass(frozen=True, eq=False)
class QCParityCheck:
    base: BaseMatrix
    assignment: ShiftAssignment
    bits: sparse.csr_matrix = field(repr=False)

    @property
    def N(self) -> int:
        return self.assignment.N

    @property
    def shape(self) -> tuple[int, int]:
        return self.bits.shape

    @cached_property
    def packed_rows(self) -> list[int]:
        out = []
        indptr, indices = self.bits.indptr, self.bits.indices
        for i in range(self.shape[0]):
            v = 0
            for j in indices[indptr[i]:indptr[i + 1]]:
                v |= 1 << int(j)
            out.append(v)
        return out

    @cached_property
    def poly(self) -> PolyMatrix:
        return PolyMatrix.from_assignment(self.base, self.assignment)

    def to_dense(self) -> np.ndarray:
        return self.bits.toarray().astype(np.uint8)


def lift(base, a: ShiftAssignment) -> QCParityCheck:
    base = as_base(base)
    a.check_against(base)
    N = a.N
    r = np.arange(N)
    rows, cols = [], []
    for (x, y), exps in sorted(a.shifts.items()):
        for e in exps:
            rows.append(x * N + r)
            cols.append(y * N + (r - e) % N)
    shape = (base.n_c * N, base.n_v * N)
    if rows:
        rr, cc = np.concatenate(rows), np.concatenate(cols)
    else:
        rr = cc = np.zeros(0, dtype=np.int64)
    bits = sparse.csr_matrix((np.ones(len(rr), dtype=np.uint8), (rr, cc)), shape=shape)
    bits.sum_duplicates()
    bits.sort_indices()
    return QCParityCheck(base, a, bits)


def read_assignment(base, bits, N: int) -> ShiftAssignment:
    """Recover exponent sets from a lifted matrix (inverse of :func:`lift`)."""
    base = as_base(base)
    dense = bits.toarray() if sparse.issparse(bits) else np.asarray(bits)
    shifts = {}
    for x in range(base.n_c):
        for y in range(base.n_v):
            row0 = dense[x * N, y * N:(y + 1) * N]
            exps = tuple(sorted((-int(c)) % N for c in np.nonzero(row0)[0]))
            if exps:
                shifts[(x, y)] = exps
    return ShiftAssignment(N, shifts)


def _tanner_adjacency(h: QCParityCheck) -> list[list[int]]:
    """Variable nodes 0..n-1, check nodes n..n+m-1."""
    m, n = h.shape
    adj: list[list[int]] = [[] for _ in range(n + m)]
    coo = h.bits.tocoo()
    for i, j in zip(coo.row.tolist(), coo.col.tolist()):
        adj[j].append(n + i)
        adj[n + i].append(j)
    return adj


def _shortest_cycle_through(adj, root: int, cap: int) -> float:
    dist = {root: 0}
    parent = {root: -1}
    q = deque([root])
    best = math.inf
    while q:
        u = q.popleft()
        du = dist[u]
        if 2 * du + 1 >= best or 2 * du + 1 > cap:
            break
        for w in adj[u]:
            if w == parent[u]:
                continue
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent[w] = u
                q.append(w)
            else:
                best = min(best, du + dw + 1)
    return best


def _is_forest(adj) -> bool:
    n = len(adj)
    edges = sum(len(a) for a in adj) // 2
    seen = [False] * n
    comps = 0
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return edges == n - comps


def girth(h: QCParityCheck, cap: int = 20, use_symmetry: bool = True):
    """Length of the shortest Tanner-graph cycle.

    Returns an even int when the girth is at most ``cap``, ``math.inf`` when
    the graph is a forest, and ``None`` when cycles exist but all are longer
    than ``cap``.  With ``use_symmetry`` only the first variable node of each
    circulant column block is used as a BFS root; cyclic shifts within a
    block are graph automorphisms, so every cycle is equivalent to one
    through such a root.
    """
    adj = _tanner_adjacency(h)
    n = h.shape[1]
    roots = range(0, n, h.N) if use_symmetry else range(n)
    best = math.inf
    for root in roots:
        best = min(best, _shortest_cycle_through(adj, root, cap))
    if best <= cap:
        return int(best)
    return math.inf if _is_forest(adj) else None


def gf2_rank(h: QCParityCheck) -> int:
    return gf2.rank(h.packed_rows)


def code_params(h: QCParityCheck) -> tuple[int, int]:
    n = h.shape[1]
    return n, n - gf2_rank(h)


def _as_int_vector(c, n: int) -> int:
    if isinstance(c, int):
        if c.bit_length() > n:
            raise LengthMismatch(f"codeword has bits beyond position {n - 1}")
        return c
    arr = np.asarray(c).ravel()
    if arr.size != n:
        raise LengthMismatch(f"vector length {arr.size} != block length {n}")
    return gf2.pack_rows(arr.reshape(1, -1))[0]


def is_codeword(h: QCParityCheck, c) -> bool:
    """True iff H c = 0 over GF(2); ``c`` may be a 0/1 array or a packed int."""
    v = _as_int_vector(c, h.shape[1])
    return gf2.in_kernel(h.packed_rows, v)


def nullspace_basis(h: QCParityCheck) -> list[int]:
    return gf2.nullspace(h.packed_rows, h.shape[1])
