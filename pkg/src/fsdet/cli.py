"""Command-line front end.

    fsdet bound  --theorem t4 --params 1,1,1
    fsdet eval   --function koebe --functional h2_2 --params 1
    fsdet search --functional b2_1 --params 2 --backend lemma3
    fsdet sweep  --functional fekete_szego --grid 0:1.5:0.25
    fsdet table  corollary4 --format md
    fsdet verify --suite lemmas --samples 10000 --seed 1
    fsdet coeffs --function kfold:3 --order 8

Exit status: 0 success, 1 a verification suite found a violation,
2 usage or input error.
"""

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import bound_for, corollary4_table, thm1_bound, thm2_bound, thm3_bound, thm4_bound
from .determinants import DeterminantSpec, Functional, functional_eval
from .report import to_csv, to_json, to_markdown
from .search import BACKENDS, SearchConfig, sharpness_sweep
from .series import read_csv, write_csv
from .starlike import CATALOG_NAMES, StarlikeCoeffs, catalog
from .verify import run_suite

DEFAULT_SEED = 42
THEOREMS = {"t1": (thm1_bound, 1), "t2": (thm2_bound, 1), "t3": (thm3_bound, 1), "t4": (thm4_bound, 3)}
FUNCTIONALS = ("fekete_szego", "h2_2", "b2_1", "h3", "hankel", "bdet")


class UsageError(Exception):
    pass


def _floats(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


def _grid(text):
    try:
        a, b, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"grid must look like a:b:step, got {text!r}") from None
    if step <= 0 or b < a:
        raise UsageError("grid needs step > 0 and b >= a")
    n = int(np.floor((b - a) / step + 1e-9)) + 1
    return [round(a + i * step, 12) for i in range(n)]


def _load_function(spec, order):
    if spec.endswith(".csv") or Path(spec).is_file():
        with open(spec, newline="", encoding="utf-8") as fh:
            coeffs = read_csv(fh)
        return StarlikeCoeffs(coeffs, f"csv:{spec}")
    name, _, param = spec.partition(":")
    if name not in CATALOG_NAMES:
        raise UsageError(f"unknown function {spec!r}; catalog: {', '.join(CATALOG_NAMES)}")
    return catalog(name, float(param) if param else None, order)


def _functional(name, params):
    if name in ("hankel", "bdet"):
        if len(params) < 3:
            raise UsageError(f"{name} needs --params n,q,l1,...,lq")
        n, q = int(params[0]), int(params[1])
        return DeterminantSpec("H" if name == "hankel" else "B", n, q, params[2:])
    return Functional(name, params)


def _search_config(args):
    return SearchConfig(atoms=args.atoms, restarts=args.restarts, max_iters=args.max_iters,
                        tol=args.tol, seed=args.seed, grid=args.resolution, workers=args.workers)


# -- commands -------------------------------------------------------------------

def cmd_bound(args):
    fn, arity = THEOREMS[args.theorem]
    params = _floats(args.params)
    if len(params) != arity:
        raise UsageError(f"{args.theorem} takes {arity} parameter(s)")
    return [{"theorem": args.theorem, "params": params, **fn(*params).as_dict()}]


def cmd_eval(args):
    f = _load_function(args.function, args.order)
    target = _functional(args.functional, _floats(args.params))
    if isinstance(target, DeterminantSpec):
        value, bound = complex(target.evaluate(f)), None
    else:
        value = complex(functional_eval(f, target))
        try:
            bound = bound_for(target).as_dict()
        except ValueError:
            bound = None
    return [{"function": f.provenance, "suspect": f.suspect, "functional": args.functional,
             "params": _floats(args.params), "value": [value.real, value.imag],
             "modulus": abs(value), "bound": bound}]


def cmd_search(args):
    target = Functional(args.functional, _floats(args.params))
    return [BACKENDS[args.backend](target, _search_config(args)).as_dict()]


def cmd_sweep(args):
    if args.functional == "h3":
        if not args.triples:
            raise UsageError("h3 sweeps need --triples l1,l2,l3;...")
        params = [tuple(_floats(t)) for t in args.triples.split(";")]
    else:
        if not args.grid:
            raise UsageError("sweep needs --grid a:b:step")
        params = _grid(args.grid)
    backends = None if args.backend == "both" else [args.backend]
    report = sharpness_sweep(args.functional, params, _search_config(args), backends)
    return report.as_dict()["entries"]


def cmd_table(args):
    return [{"l1": r.lambdas[0], "l2": r.lambdas[1], "l3": r.lambdas[2], "printed": r.printed,
             "recomputed": r.recomputed, "match": r.match} for r in corollary4_table()]


def cmd_verify(args):
    passed, rows = run_suite(args.suite, args.samples, args.seed, args.resolution)
    args.exit_code = 0 if passed else 1
    return rows


# -- parsing ----------------------------------------------------------------------

def _env_seed():
    raw = os.environ.get("FSDET_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"FSDET_SEED must be an integer, got {raw!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--seed", type=int, default=None, help="default: $FSDET_SEED or 42")
    common.add_argument("--config", help="file of key=value lines supplying flag defaults")

    searchy = _Parser(add_help=False)
    searchy.add_argument("--functional", required=True, choices=FUNCTIONALS[:4])
    searchy.add_argument("--restarts", type=int, default=64)
    searchy.add_argument("--atoms", type=int, default=4)
    searchy.add_argument("--max-iters", type=int, default=400)
    searchy.add_argument("--tol", type=float, default=1e-10)
    searchy.add_argument("--resolution", type=int, default=65, help="lemma3 grid points per axis")
    searchy.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="fsdet", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", parents=[common], help="closed-form bound")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("eval", parents=[common], help="evaluate a functional on one function")
    p.add_argument("--function", required=True, help="catalog name[:param] or coefficient CSV")
    p.add_argument("--functional", required=True, choices=FUNCTIONALS)
    p.add_argument("--params", required=True)
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("search", parents=[common, searchy], help="estimate a supremum")
    p.add_argument("--params", required=True)
    p.add_argument("--backend", choices=sorted(BACKENDS), default="atoms")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", parents=[common, searchy], help="sharpness sweep over parameters")
    p.add_argument("--grid", help="a:b:step for one-parameter functionals")
    p.add_argument("--triples", help="l1,l2,l3;... for h3")
    p.add_argument("--backend", choices=("atoms", "lemma3", "both"), default="both")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", parents=[common], help="printed vs recomputed corollary table")
    p.add_argument("name", choices=("corollary4",))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="randomized and grid verification suites")
    p.add_argument("--suite", choices=("lemmas", "identities", "proofs", "all"), default="all")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--resolution", type=int, default=512, help="proof grid points per axis")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coeffs", parents=[common], help="write catalog coefficients as k,re,im CSV")
    p.add_argument("--function", required=True)
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=None)
    return parser


def _apply_config(parser, argv, args):
    """Re-parse with defaults taken from the key=value config file."""
    sub = parser._subparsers._group_actions[0].choices[args.command]
    dests = {a.dest: a for a in sub._actions}
    defaults = {}
    for lineno, line in enumerate(Path(args.config).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in dests or key in ("config", "func", "help"):
            raise UsageError(f"{args.config}:{lineno}: unknown config key {key!r}")
        action = dests[key]
        value = value.strip()
        defaults[key] = action.type(value) if action.type else value
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


def _emit(args, results):
    if args.format == "json":
        # workers only changes scheduling, never the numbers, so it stays out of the report
        params = {k: v for k, v in vars(args).items()
                  if k not in ("func", "command", "format", "seed", "config", "exit_code", "workers")}
        return to_json({"command": args.command, "params": params, "results": results,
                        "seed": args.seed, "version": __version__})
    if args.format == "csv":
        return to_csv(results)
    return to_markdown(results)


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            args = _apply_config(parser, argv, args)
        if args.seed is None:
            args.seed = _env_seed()
        args.exit_code = 0
        if args.command == "coeffs":
            f = _load_function(args.function, args.order)
            stdout.write(write_csv(f.a))
            return 0
        results = args.func(args)
        stdout.write(_emit(args, results))
        return args.exit_code
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"fsdet: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
