"""Protograph density evolution on the binary erasure channel.

Every parallel edge of the protograph carries its own pair of erasure
probabilities; an update on an edge excludes only that edge, not the other
edges joining the same two nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .protograph import as_base


@dataclass(frozen=True)
class DEConfig:
    convergence_eps: float = 1e-10
    max_iters: int = 200_000
    bisect_tol: float = 1e-5

    def __post_init__(self):
        if self.convergence_eps <= 0 or self.max_iters <= 0 or self.bisect_tol <= 0:
            raise ValueError("DEConfig values must be positive")
        if self.bisect_tol < 1e-8:
            raise ValueError("bisect_tol below 1e-8 is not meaningful in double precision")


@dataclass(frozen=True)
class ThresholdReport:
    epsilon_star: float
    bracket: tuple[float, float]
    iters_at_threshold: int

    def to_json(self) -> dict:
        lo, hi = self.bracket
        return {
            "epsilon_star": round(self.epsilon_star, 6),
            "lo": round(lo, 6),
            "hi": round(hi, 6),
            "iters": self.iters_at_threshold,
        }


@dataclass(frozen=True)
class DERun:
    converged: bool
    iterations: int
    max_message: float


class EdgeSet:
    """Edge expansion of a base matrix with padded 'other edges' index tables.

    ``var_others[e]`` lists the edges sharing e's variable node (excluding e),
    padded with the sentinel index ``count``; likewise ``check_others`` for
    the check node.  Message arrays carry one extra slot at the sentinel so
    that padding contributes the neutral factor of each product.
    """

    def __init__(self, b):
        b = as_base(b)
        a = b.entries
        cells = [(x, y) for x in range(b.n_c) for y in range(b.n_v) for _ in range(int(a[x, y]))]
        self.count = len(cells)
        self.check_of = np.array([c[0] for c in cells], dtype=np.int64)
        self.var_of = np.array([c[1] for c in cells], dtype=np.int64)
        self.var_others = self._others(self.var_of)
        self.check_others = self._others(self.check_of)

    def _others(self, owner: np.ndarray) -> np.ndarray:
        groups: dict[int, list[int]] = {}
        for e, node in enumerate(owner.tolist()):
            groups.setdefault(node, []).append(e)
        width = max([len(g) - 1 for g in groups.values()] + [1])
        out = np.full((self.count, width), self.count, dtype=np.int64)
        for g in groups.values():
            for e in g:
                rest = [f for f in g if f != e]
                out[e, :len(rest)] = rest
        return out


def run_de(b, epsilon: float, cfg: DEConfig = DEConfig(), edges: EdgeSet | None = None) -> DERun:
    """Flooding-schedule erasure density evolution from all variable messages = epsilon.

    Stops early on convergence (max message below ``cfg.convergence_eps``) or
    when an iteration reproduces the previous messages bit for bit, which is
    a fixed point the iteration can never leave.
    """
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"erasure probability must lie in [0, 1], got {epsilon}")
    es = edges if edges is not None else EdgeSet(b)
    E = es.count
    if E == 0:
        return DERun(True, 0, 0.0)
    # slot E is padding: variable->check pad is 0 (1 - p = 1), check->variable pad is 1
    p = np.full(E + 1, epsilon)
    p[E] = 0.0
    q = np.ones(E + 1)
    for it in range(1, cfg.max_iters + 1):
        q[:E] = 1.0 - np.prod(1.0 - p[es.check_others], axis=1)
        new = epsilon * np.prod(q[es.var_others], axis=1)
        top = float(new.max())
        if top > 1.0 or float(new.min()) < 0.0 or float(q[:E].min()) < 0.0 or float(q[:E].max()) > 1.0:
            raise AssertionError("erasure message left [0, 1]")
        if top < cfg.convergence_eps:
            return DERun(True, it, top)
        if np.array_equal(new, p[:E]):
            return DERun(False, it, top)
        p[:E] = new
    return DERun(False, cfg.max_iters, float(p[:E].max()))


def de_converges(b, epsilon: float, cfg: DEConfig = DEConfig()) -> bool:
    return run_de(b, epsilon, cfg).converged


def threshold(b, cfg: DEConfig = DEConfig()) -> ThresholdReport:
    """BP threshold by bisection on [0, 1]; assumes convergence is monotone in epsilon."""
    es = EdgeSet(b)
    lo, hi = 0.0, 1.0
    iters = run_de(b, 0.0, cfg, es).iterations
    top = run_de(b, 1.0, cfg, es)
    if top.converged:
        return ThresholdReport(1.0, (1.0, 1.0), top.iterations)
    while hi - lo > cfg.bisect_tol:
        mid = 0.5 * (lo + hi)
        r = run_de(b, mid, cfg, es)
        if r.converged:
            lo, iters = mid, r.iterations
        else:
            hi = mid
    return ThresholdReport(0.5 * (lo + hi), (lo, hi), iters)
