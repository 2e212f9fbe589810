"""Command-line entry point: ``qcldpc <subcommand> ...``.

Every subcommand prints one JSON object (``lift`` prints alist text) to
stdout or to ``--out``.  Failures print ``{"error": ..., "kind": ...,
"message": ...}`` and exit with a code that identifies the failure class.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io
from .bounds import cofactor_codeword, exhaustive_dmin, isd_codeword, theorem1_bound
from .density_evolution import DEConfig, threshold
from .errors import ValidationError
from .fixtures import EXAMPLES, TABLE1_REFERENCE
from .protograph import BaseMatrix, check_cover, degree_profile, design_rate, terminate
from .qc_lift import code_params, girth, gf2_rank, lift, random_assignment

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_IO = 5

TABLE1_COLUMNS = [
    "example",
    "epsilon_star_computed",
    "dminqc_bound_computed",
    "delta_min_reference",
    "epsilon_star_reference",
]


class CLIError(Exception):
    def __init__(self, kind: str, exit_code: int, exc: Exception):
        self.kind = kind
        self.exit_code = exit_code
        self.exc = exc


# -- input resolution -------------------------------------------------------------

def _example(args):
    try:
        return EXAMPLES[args.example]
    except KeyError:
        raise ValidationError(f"unknown example {args.example!r}; choose from {sorted(EXAMPLES)}") from None


def _spreading(args):
    if args.example:
        return _example(args).spreading
    if args.spreading:
        return io.load_spreading(args.spreading)
    raise ValidationError("give --spreading FILE or --example NAME")


def _L(args):
    if args.L is not None:
        return args.L
    if args.example:
        return _example(args).L
    raise ValidationError("give -L")


def _base(args) -> BaseMatrix:
    if getattr(args, "matrix", None):
        return io.load_matrix(args.matrix)
    return terminate(_spreading(args), _L(args)).assembled


def _lift(args):
    base = _base(args)
    if getattr(args, "random_shifts", None):
        a = random_assignment(base, args.random_shifts, args.seed)
    elif getattr(args, "shifts", None):
        a = io.load_shifts(args.shifts)
    elif args.example and _example(args).shifts is not None and args.L in (None, _example(args).L):
        a = _example(args).shifts
    else:
        raise ValidationError("give --shifts FILE or --random-shifts N (the example has no built-in exponents here)")
    return lift(base, a)


def _parse_indices(text: str | None):
    if text is None:
        return None
    try:
        return [int(t) - 1 for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise io.ParseError(f"bad index list {text!r}") from exc


# -- subcommands --------------------------------------------------------------------

def cmd_validate_spreading(args):
    s = _spreading(args)
    return {"valid": True, "ms": s.ms, **io.spreading_to_json(s)}


def cmd_terminate(args):
    t = terminate(_spreading(args), _L(args))
    return {"L": t.L, "ms": t.ms, **io.matrix_to_json(t.assembled)}


def cmd_cover_check(args):
    if args.example:
        ex = _example(args)
        if ex.cover_of is None:
            raise ValidationError(f"example {ex.name} is not a cover")
        original, covered, m = ex.cover_of, ex.spreading, ex.cover_degree
    else:
        if not (args.original and args.covered and args.m):
            raise ValidationError("give --original FILE --covered FILE -m M, or --example")
        original, covered, m = io.load_spreading(args.original), io.load_spreading(args.covered), args.m
    c = check_cover(original, covered, m)
    return {"valid": True, "m": c.m, "parts": len(c.covered.parts)}


def cmd_lift(args):
    return io.to_alist(_lift(args))


def cmd_girth(args):
    g = girth(_lift(args), cap=args.cap)
    if g is None:
        return {"girth": f">{args.cap}", "cap": args.cap}
    return {"girth": g if isinstance(g, int) else "inf", "cap": args.cap}


def cmd_rank(args):
    h = _lift(args)
    r = gf2_rank(h)
    n, k = code_params(h)
    return {"rank": r, "check_rows": h.shape[0], "redundant_rows": h.shape[0] - r, "n": n, "k": k}


def cmd_bound(args):
    r = theorem1_bound(_base(args), submatrices=args.submatrices, max_subsets=args.max_subsets)
    return r.to_json()


def cmd_codeword(args):
    h = _lift(args)
    subset = _parse_indices(args.subset)
    rows = _parse_indices(args.rows)
    if subset is None:
        r = theorem1_bound(h.base, submatrices=args.submatrices)
        subset, rows = list(r.witness), list(r.rows)
    return cofactor_codeword(h, subset, rows).to_json()


def cmd_dmin(args):
    h = _lift(args)
    if args.method == "exhaustive":
        return {"method": "exhaustive", "dmin": exhaustive_dmin(h)}
    w, v = isd_codeword(h, args.iterations, args.seed)
    return {"method": "isd", "iterations": args.iterations, "seed": args.seed, "weight": w,
            "support": [i for i in range(h.shape[1]) if v >> i & 1]}


def _de_config(args) -> DEConfig:
    return DEConfig(args.convergence_eps, args.max_iters, args.bisect_tol)


def cmd_threshold(args):
    return threshold(_base(args), _de_config(args)).to_json()


def cmd_rate(args):
    r = design_rate(_base(args))
    return {"rate": f"{r.numerator}/{r.denominator}", "value": round(float(r), 6)}


def cmd_degrees(args):
    checks, variables = degree_profile(_base(args))
    return {
        "check_degrees": {str(d): c for d, c in sorted(checks.items())},
        "variable_degrees": {str(d): c for d, c in sorted(variables.items())},
    }


def _table1_row(job):
    label, fixture, L, delta_ref, eps_ref, cfg = job
    base = terminate(EXAMPLES[fixture].spreading, L).assembled
    return {
        "example": label,
        "epsilon_star_computed": f"{threshold(base, cfg).epsilon_star:.6f}",
        "dminqc_bound_computed": theorem1_bound(base, submatrices=True).value,
        "delta_min_reference": f"{delta_ref:.4f}",
        "epsilon_star_reference": f"{eps_ref:.4f}",
    }


def reproduce_table1(out=None, threads: int = 1, cfg: DEConfig = DEConfig()) -> list[dict]:
    """Recompute the threshold and QC bound columns of the reference table.

    The delta_min and epsilon* reference columns are transcribed constants.
    """
    jobs = [(*row, cfg) for row in TABLE1_REFERENCE]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_table1_row, jobs))
    else:
        rows = [_table1_row(j) for j in jobs]
    if out is not None:
        Path(out).write_text(table1_csv(rows))
    return rows


def table1_csv(rows) -> str:
    buf = _stdio.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE1_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_reproduce_table1(args):
    rows = reproduce_table1(None, args.threads, _de_config(args))
    return table1_csv(rows)


# -- parser ----------------------------------------------------------------------------

def _add_spreading_source(p):
    p.add_argument("--example", choices=sorted(EXAMPLES), help="built-in fixture")
    p.add_argument("--spreading", help="spreading JSON file")
    p.add_argument("-L", type=int, help="termination factor")


def _add_base_source(p):
    p.add_argument("--matrix", help="base matrix JSON file")
    _add_spreading_source(p)


def _add_lift_source(p):
    _add_base_source(p)
    p.add_argument("--shifts", help="shift assignment JSON file")
    p.add_argument("--random-shifts", type=int, metavar="N", help="draw a random circulant assignment of size N")
    p.add_argument("--seed", type=int, default=0)


def _add_de_options(p):
    p.add_argument("--convergence-eps", type=float, default=DEConfig.convergence_eps)
    p.add_argument("--max-iters", type=int, default=DEConfig.max_iters)
    p.add_argument("--bisect-tol", type=float, default=DEConfig.bisect_tol)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcldpc", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write output here instead of stdout")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for reproduce-table1")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-spreading", help="check that the parts sum to the base")
    _add_spreading_source(p)
    p.set_defaults(func=cmd_validate_spreading)

    p = sub.add_parser("terminate", help="assemble the terminated base matrix")
    _add_spreading_source(p)
    p.set_defaults(func=cmd_terminate)

    p = sub.add_parser("cover-check", help="verify a graph cover of a spreading")
    p.add_argument("--example", choices=[k for k, v in EXAMPLES.items() if v.cover_of is not None])
    p.add_argument("--original")
    p.add_argument("--covered")
    p.add_argument("-m", type=int)
    p.set_defaults(func=cmd_cover_check)

    p = sub.add_parser("lift", help="export the QC parity-check matrix in alist format")
    _add_lift_source(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("girth", help="Tanner-graph girth of a lift")
    _add_lift_source(p)
    p.add_argument("--cap", type=int, default=20)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("rank", help="GF(2) rank and code parameters of a lift")
    _add_lift_source(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("bound", help="permanent upper bound on the QC minimum distance")
    _add_base_source(p)
    p.add_argument("--submatrices", action="store_true", help="also search row-restricted substructures")
    p.add_argument("--max-subsets", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("codeword", help="cofactor codeword of a lift")
    _add_lift_source(p)
    p.add_argument("--subset", help="1-indexed columns, comma separated (default: bound witness)")
    p.add_argument("--rows", help="1-indexed rows for a substructure codeword")
    p.add_argument("--submatrices", action="store_true")
    p.set_defaults(func=cmd_codeword)

    p = sub.add_parser("dmin", help="minimum distance by exhaustive enumeration or ISD search")
    _add_lift_source(p)
    p.add_argument("--method", choices=["exhaustive", "isd"], default="isd")
    p.add_argument("--iterations", type=int, default=10_000)
    p.set_defaults(func=cmd_dmin)

    p = sub.add_parser("threshold", help="BEC density-evolution threshold")
    _add_base_source(p)
    _add_de_options(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("rate", help="design rate")
    _add_base_source(p)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("degrees", help="check and variable degree profile")
    _add_base_source(p)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("reproduce-table1", help="CSV of computed vs reference table values")
    _add_de_options(p)
    p.set_defaults(func=cmd_reproduce_table1)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Execute one request; returns (exit code, text written)."""
    args = build_parser().parse_args(argv)
    try:
        try:
            result = args.func(args)
        except io.ParseError as exc:
            raise CLIError("parse", EXIT_PARSE, exc)
        except ValidationError as exc:
            raise CLIError("validation", EXIT_VALIDATION, exc)
        except OSError as exc:
            raise CLIError("io", EXIT_IO, exc)
        text = result if isinstance(result, str) else json.dumps(result, sort_keys=True) + "\n"
        if args.out:
            try:
                Path(args.out).write_text(text)
            except OSError as exc:
                raise CLIError("io", EXIT_IO, exc)
        else:
            sys.stdout.write(text)
        return EXIT_OK, text
    except CLIError as err:
        payload = {"error": type(err.exc).__name__, "kind": err.kind, "message": str(err.exc)}
        text = json.dumps(payload, sort_keys=True) + "\n"
        sys.stdout.write(text)
        return err.exit_code, text


def main(argv=None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
