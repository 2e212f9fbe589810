"""BEC thresholds of terminated spreadings as the termination length grows."""

import argparse

from qcldpc.density_evolution import DEConfig, threshold
from qcldpc.fixtures import EXAMPLES
from qcldpc.protograph import design_rate, terminate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--example", default="ex1", choices=sorted(EXAMPLES))
    ap.add_argument("--L", type=int, nargs="+", default=[2, 3, 4, 5, 6, 8, 10, 15, 20])
    ap.add_argument("--bisect-tol", type=float, default=1e-5)
    args = ap.parse_args()
    cfg = DEConfig(bisect_tol=args.bisect_tol)
    s = EXAMPLES[args.example].spreading
    print("L,rate,epsilon_star,iters")
    for L in args.L:
        t = terminate(s, L)
        r = threshold(t.assembled, cfg)
        print(f"{L},{design_rate(t)},{r.epsilon_star:.6f},{r.iters_at_threshold}")


if __name__ == "__main__":
    main()
