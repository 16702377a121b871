"""Command-line front end.

Exit codes: 0 success (and member, for `check`); 1 non-member (`check`
only); 2 usage or parse errors; 3 closure non-convergence.  Diagnostics go
to stderr; results go to stdout, as JSON when --json is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .exprparse import ParseError, parse_poly
from .geometry import (
    NonConvergenceError,
    SuperalgebraicSet,
    closure,
    isotropic_roots,
    make_point,
    nullstellensatz_check,
    point_from_json,
    vanishing_basis,
)
from .membership import (
    graded_basis,
    is_supersymmetric_additive,
    is_supersymmetric_laurent,
    power_sum,
)
from .poly import LAURENT, POLYNOMIAL, Signature

_MODES = {"poly": POLYNOMIAL, "laurent": LAURENT}


def _signature(args: argparse.Namespace) -> Signature:
    return Signature(args.m, args.n)


def _load_json_argument(value: str):
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as handle:
            value = handle.read()
    return json.loads(value)


def _points_argument(value: str, signature: Signature) -> SuperalgebraicSet:
    data = _load_json_argument(value)
    if isinstance(data, dict) and "subspaces" in data:
        parsed = SuperalgebraicSet.from_json(data)
        if parsed.signature != signature:
            raise ValueError("set signature does not match --m/--n")
        return parsed
    if not isinstance(data, list):
        raise ValueError("expected a JSON list of points or a set object")
    points = [point_from_json(entry, signature) for entry in data]
    return SuperalgebraicSet.from_points(signature, points)


def _emit_set(result: SuperalgebraicSet, as_json: bool) -> None:
    if as_json:
        print(json.dumps(result.to_json()))
    else:
        print(f"{len(result.subspaces)} subspace(s)")
        for subspace in result.subspaces:
            print("  " + subspace.describe())


def cmd_check(args: argparse.Namespace) -> int:
    signature = _signature(args)
    mode = _MODES[args.mode]
    f = parse_poly(args.expr, signature, mode)
    verdict = (
        is_supersymmetric_additive(f) if mode == POLYNOMIAL else is_supersymmetric_laurent(f)
    )
    if args.json:
        print(json.dumps(verdict.to_json()))
    elif verdict.member:
        print("member")
    elif verdict.failed_invariance:
        print("non-member: not invariant under the block permutations")
    else:
        i, j = verdict.failing_root
        print(f"non-member: fails at root ({i},{j}); residual {verdict.residual.render()}")
    return 0 if verdict.member else 1


def cmd_basis(args: argparse.Namespace) -> int:
    signature = _signature(args)
    basis = graded_basis(signature, args.degree)
    if args.json:
        print(
            json.dumps(
                {
                    "signature": {"m": signature.m, "n": signature.n},
                    "degree": args.degree,
                    "dimension": len(basis),
                    "basis": [b.render() for b in basis],
                }
            )
        )
    else:
        print(f"dimension {len(basis)}")
        for b in basis:
            print("  " + b.render())
    return 0


def cmd_closure(args: argparse.Namespace) -> int:
    signature = _signature(args)
    initial = _points_argument(args.points, signature)
    if args.command == "orbit" and len(initial.subspaces) != 1:
        raise ValueError("orbit takes exactly one point")
    result = closure(
        initial, include_weyl=not args.no_weyl, max_subspaces=args.max_subspaces
    )
    _emit_set(result, args.json)
    return 0


def cmd_roots(args: argparse.Namespace) -> int:
    signature = _signature(args)
    roots = isotropic_roots(signature)
    if args.json:
        print(json.dumps([r.to_json() for r in roots]))
    else:
        print(f"{len(roots)} isotropic root(s)")
        for r in roots:
            lead = "+" if r.sign > 0 else "-"
            print(f"  {lead}(e{r.i} - d{r.j})")
    return 0


def cmd_powersum(args: argparse.Namespace) -> int:
    signature = _signature(args)
    f = power_sum(args.r, signature, _MODES[args.mode])
    if args.json:
        print(json.dumps({"power_sum": f.render()}))
    else:
        print(f.render())
    return 0


def cmd_vanish(args: argparse.Namespace) -> int:
    signature = _signature(args)
    data = _load_json_argument(args.set)
    target = SuperalgebraicSet.from_json(data)
    if target.signature != signature:
        raise ValueError("set signature does not match --m/--n")
    basis = vanishing_basis(target, args.degree)
    if args.json:
        print(json.dumps({"dimension": len(basis), "basis": [b.render() for b in basis]}))
    else:
        print(f"dimension {len(basis)}")
        for b in basis:
            print("  " + b.render())
    return 0


def cmd_nullcheck(args: argparse.Namespace) -> int:
    signature = _signature(args)
    point = point_from_json(_load_json_argument(args.point), signature)
    grid = [point_from_json(entry, signature) for entry in _load_json_argument(args.grid)]
    report = nullstellensatz_check(signature, point, args.degree, grid)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(
            f"checked {len(report.entries)} grid point(s): "
            f"{report.violations} violation(s), {report.converse_gaps} converse gap(s)"
        )
        for entry in report.entries:
            coords = ", ".join(str(c) for c in entry.point)
            status = "ok" if entry.theorem_ok else "VIOLATION"
            print(
                f"  ({coords}): vanishes={entry.vanishes} in_closure={entry.in_closure} {status}"
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supersym",
        description="Exact computations with supersymmetric polynomials and orbit closures",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True, help="size of the x block")
    common.add_argument("--n", type=int, required=True, help="size of the y block")
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")

    check = subparsers.add_parser("check", parents=[common], help="membership test")
    check.add_argument("--mode", choices=("poly", "laurent"), required=True)
    check.add_argument("--expr", required=True, help="polynomial expression")
    check.set_defaults(handler=cmd_check)

    basis = subparsers.add_parser("basis", parents=[common], help="homogeneous basis")
    basis.add_argument("--degree", type=int, required=True)
    basis.set_defaults(handler=cmd_basis)

    for name, help_text in (
        ("closure", "saturate a set of points/subspaces"),
        ("orbit", "closure of a single point"),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--points", required=True, help="JSON points/set, or @file")
        sub.add_argument("--no-weyl", action="store_true", help="skip permutation images")
        sub.add_argument("--max-subspaces", type=int, default=1000)
        sub.set_defaults(handler=cmd_closure)

    roots = subparsers.add_parser("roots", parents=[common], help="list isotropic roots")
    roots.set_defaults(handler=cmd_roots)

    powersum = subparsers.add_parser("powersum", parents=[common], help="power-sum generator")
    powersum.add_argument("--r", type=int, required=True)
    powersum.add_argument("--mode", choices=("poly", "laurent"), required=True)
    powersum.set_defaults(handler=cmd_powersum)

    vanish = subparsers.add_parser("vanish", parents=[common], help="truncated vanishing ideal")
    vanish.add_argument("--set", required=True, help="JSON set object, or @file")
    vanish.add_argument("--degree", type=int, required=True)
    vanish.set_defaults(handler=cmd_vanish)

    nullcheck = subparsers.add_parser(
        "nullcheck", parents=[common], help="vanishing vs closure on a grid"
    )
    nullcheck.add_argument("--point", required=True, help="JSON point, or @file")
    nullcheck.add_argument("--degree", type=int, required=True)
    nullcheck.add_argument("--grid", required=True, help="JSON list of points, or @file")
    nullcheck.set_defaults(handler=cmd_nullcheck)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
