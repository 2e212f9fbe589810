"""Cross-check a DE threshold with a peeling decoder on one large random circulant lift.

Erases each bit with probability eps and repeatedly resolves checks that see
exactly one erased bit.  Below the threshold the residual erasure fraction
should collapse to about zero; above it a constant fraction remains.
"""

import argparse

import numpy as np

from qcldpc.fixtures import EXAMPLES
from qcldpc.qc_lift import lift, random_assignment


def peel(bits, erased):
    erased = erased.copy()
    while True:
        counts = bits @ erased.astype(np.int64)
        active = np.flatnonzero(counts == 1)
        if len(active) == 0:
            return erased
        sub = bits[active].multiply(erased[None, :]).tocoo()
        erased[np.unique(sub.col)] = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--example", default="ex3")
    ap.add_argument("-L", type=int, default=2)
    ap.add_argument("-N", type=int, default=20_000)
    ap.add_argument("--eps", type=float, nargs="+", default=[0.49, 0.52, 0.55, 0.56, 0.58, 0.60])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    base = EXAMPLES[args.example].terminated(args.L).assembled
    h = lift(base, random_assignment(base, args.N, args.seed))
    bits = h.bits.astype(np.int64).tocsr()
    rng = np.random.default_rng(args.seed)
    print("eps,residual_erasure_fraction")
    for eps in args.eps:
        left = peel(bits, rng.random(bits.shape[1]) < eps)
        print(f"{eps:.4f},{left.mean():.6f}")


if __name__ == "__main__":
    main()
