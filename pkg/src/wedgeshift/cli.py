"""Batch command-line front end.

Exit codes: 0 verified/completed, 1 input or usage error, 2 a certified claim
was falsified (bound violated, oracle mismatch, broken invariant), 3 budget
or iteration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .errors import (
    BudgetExceededError,
    FalsificationError,
    IterationLimitError,
    ParseError,
)
from .exterior import format_multivector
from .factor import common_annihilator, complement_pair_space, factor_report, linear_factors
from .families import ENUMERATION_MODES, SetFamily, ShiftPair, combinatorial_shift
from .ekr import ekr_pipeline, hilton_milner_verify, shifted_ekr_verify
from .limits import initial_subspace, limit_shift, pluecker_limit, decreasing_pairs
from .sampling import random_subspace
from .serialize import family_record, parse_input, save_json, subspace_record
from .subspace import MonomialOrder, Subspace


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise _UsageError(message)


def _pair(text: str) -> ShiftPair:
    try:
        i, j = (int(tok) for tok in text.split(","))
        return ShiftPair(i, j)
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"bad --pair {text!r}: expected I,J with distinct indices") from exc


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _need_subspace(value, what: str) -> Subspace:
    if not isinstance(value, Subspace):
        raise ParseError(f"{what} expects a subspace record, got {type(value).__name__}")
    return value


def _need_family(value, what: str) -> SetFamily:
    if not isinstance(value, SetFamily):
        raise ParseError(f"{what} expects a family record, got {type(value).__name__}")
    return value


def build_parser() -> _Parser:
    parser = _Parser(prog="wedgeshift", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify-family", help="certify the shifted intersecting bound for a family file")
    p.add_argument("input")

    p = sub.add_parser("pipeline", help="bound a self-annihilating subspace via the fixed-point drive")
    p.add_argument("input")
    p.add_argument("--route", choices=["iterate", "init-shift"], default="init-shift")
    p.add_argument("--trace", metavar="PATH")

    p = sub.add_parser("shift", help="apply one combinatorial shift to a family")
    p.add_argument("input")
    p.add_argument("--pair", required=True)

    p = sub.add_parser("limit", help="apply one shear limit to a subspace")
    p.add_argument("input")
    p.add_argument("--pair", required=True)

    p = sub.add_parser("init", help="initial-monomial degeneration of a subspace")
    p.add_argument("input")
    p.add_argument("--order", choices=["lex", "weight2"])

    p = sub.add_parser("factor", help="linear factors of a multivector literal")
    p.add_argument("input")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("annihilator", help="common annihilator of a subspace")
    p.add_argument("input")

    p = sub.add_parser("example-cross", help="build the complement-pair space on 2k indices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("enumerate", help="stream intersecting families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=[m.replace("_", "-") for m in ENUMERATION_MODES],
                   default="all-intersecting")
    p.add_argument("--budget", type=int, default=10 ** 7)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("hm-verify", help="exhaustive non-star bound check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=10 ** 7)

    p = sub.add_parser("oracle-pluecker", help="compare the shear limit against its Pluecker oracle")
    p.add_argument("input", nargs="?")
    p.add_argument("--pair")
    p.add_argument("--random", type=int, metavar="TRIALS")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int, default=2)
    return parser


def _run_verify_family(args) -> int:
    fam = _need_family(parse_input(args.input), "verify-family")
    report = shifted_ekr_verify(fam, identifier=args.input)
    print(f"size {report.size} <= bound {report.bound}: "
          f"{'satisfied' if report.satisfied else 'VIOLATED'}")
    _emit(report.record())
    if not report.satisfied:
        raise FalsificationError("bound violated")
    return 0


def _run_pipeline(args) -> int:
    V = _need_subspace(parse_input(args.input), "pipeline")
    route = "init-then-shift" if args.route == "init-shift" else args.route
    report = ekr_pipeline(V, route=route, identifier=args.input)
    print(f"dim {report.size} <= bound {report.bound}: "
          f"{'satisfied' if report.satisfied else 'VIOLATED'}")
    if args.trace:
        save_json(args.trace, report.certificate["steps"])
    _emit(report.record())
    if not report.satisfied:
        raise FalsificationError("bound violated")
    return 0


def _run_shift(args) -> int:
    fam = _need_family(parse_input(args.input), "shift")
    _emit(family_record(combinatorial_shift(fam, _pair(args.pair))))
    return 0


def _run_limit(args) -> int:
    V = _need_subspace(parse_input(args.input), "limit")
    _emit(subspace_record(limit_shift(V, _pair(args.pair))))
    return 0


def _run_init(args) -> int:
    V = _need_subspace(parse_input(args.input), "init")
    if args.order and args.order != V.order.kind:
        V = Subspace(MonomialOrder(args.order, V.n, V.k), list(V.rows))
    _emit(subspace_record(initial_subspace(V)))
    return 0


def _run_factor(args) -> int:
    value = parse_input(args.input, n=args.n)
    if isinstance(value, (SetFamily, Subspace)):
        raise ParseError("factor expects a multivector literal")
    report = factor_report(value, identifier=args.input)
    _emit(report.record())
    return 0


def _run_annihilator(args) -> int:
    V = _need_subspace(parse_input(args.input), "annihilator")
    ann = common_annihilator(V)
    print(f"annihilator dimension {ann.dim}")
    _emit(subspace_record(ann))
    return 0


def _run_example_cross(args) -> int:
    V = complement_pair_space(args.k)  # construction re-verifies its guarantees
    out = {
        "k": args.k,
        "n": V.n,
        "dim": V.dim,
        "spanning_rows": [format_multivector(r) for r in V.rows[:3]] + (["..."] if V.dim > 3 else []),
    }
    if args.check:
        out["self_annihilating"] = True
        out["spanning_elements_factor_free"] = all(
            linear_factors(r).dim == 0 for r in V.rows
        )
        out["annihilator_dim"] = common_annihilator(V).dim
    _emit(out)
    return 0


def _run_enumerate(args) -> int:
    from .families import enumerate_families

    mode = args.mode.replace("-", "_")
    count = 0
    max_size = 0
    for fam in enumerate_families(args.n, args.k, mode, budget=args.budget):
        count += 1
        max_size = max(max_size, fam.size)
        if not args.count_only:
            print(json.dumps(family_record(fam), separators=(",", ":")))
    _emit({"mode": mode, "n": args.n, "k": args.k, "count": count, "max_size": max_size})
    return 0


def _run_hm_verify(args) -> int:
    report = hilton_milner_verify(args.n, args.k, budget=args.budget)
    print(f"max non-star size {report.size} <= bound {report.bound}: "
          f"{'satisfied' if report.satisfied else 'VIOLATED'}")
    _emit(report.record())
    return 0


def _run_oracle_pluecker(args) -> int:
    if args.random is not None:
        if args.n is None or args.k is None:
            raise _UsageError("--random needs --n and --k")
        rng = random.Random(args.seed)
        order = MonomialOrder("lex", args.n, args.k)
        pairs = decreasing_pairs(args.n)
        for trial in range(args.random):
            V = random_subspace(rng, order, 1 + trial % args.m)
            for p in pairs:
                left = limit_shift(V, p).pluecker()
                right = pluecker_limit(V, p)
                if left != right:
                    raise FalsificationError(
                        f"oracle mismatch at trial {trial}, pair ({p.i}, {p.j})"
                    )
        _emit({"trials": args.random, "pairs_per_trial": len(pairs), "match": True,
               "seed": args.seed})
        return 0
    if not args.input or not args.pair:
        raise _UsageError("oracle-pluecker needs an input file and --pair, or --random")
    V = _need_subspace(parse_input(args.input), "oracle-pluecker")
    p = _pair(args.pair)
    left = limit_shift(V, p).pluecker()
    right = pluecker_limit(V, p)
    if left != right:
        raise FalsificationError(f"oracle mismatch at pair ({p.i}, {p.j})")
    _emit({"pair": [p.i, p.j], "match": True})
    return 0


_HANDLERS = {
    "verify-family": _run_verify_family,
    "pipeline": _run_pipeline,
    "shift": _run_shift,
    "limit": _run_limit,
    "init": _run_init,
    "factor": _run_factor,
    "annihilator": _run_annihilator,
    "example-cross": _run_example_cross,
    "enumerate": _run_enumerate,
    "hm-verify": _run_hm_verify,
    "oracle-pluecker": _run_oracle_pluecker,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.verb](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FalsificationError as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, IterationLimitError) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    sys.exit(main())
