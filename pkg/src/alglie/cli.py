"""Command-line front end.

Every subcommand reads the shared JSON schema (``-`` means standard input)
and writes one JSON document to standard output. Exit codes: 0 on
success, 1 when the result is a refutation or a domain error, 2 on usage
or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import catalog, serialize
from .algebraicity import (
    DEFAULT_BOUND,
    DEFAULT_MAX_ROUNDS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    algebraic_hull,
    check_algebraic,
    nilpotent_decomposition,
)
from .errors import AlgLieError
from .jordan import jordan_decompose
from .ratlinalg import Q, Rational
from .replica import replica
from .reproduce import verify_all

CATALOG_NAMES = ("heisenberg4", "hull-m", "n1", "a1", "x4", "filiform", "model-L")


class UsageError(Exception):
    """Malformed input or flags; reported on stderr with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Rational:
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _parse(fn: Callable, data, what: str):
    try:
        return fn(data)
    except serialize.SchemaError as exc:
        raise UsageError(f"{what}: {exc}") from exc
    except (KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"{what}: does not match the expected schema") from exc


def _load_matrix(path):
    return _parse(serialize.qmatrix_from_json, _load(path), "matrix")


def _load_algebra(path):
    data = _load(path)
    # catalog filiform output nests the algebra under "generated"
    if isinstance(data, dict) and "basis" not in data and isinstance(data.get("generated"), dict):
        data = data["generated"]
    return _parse(serialize.lie_from_json, data, "basis")


def _sampling_flags(p: argparse.ArgumentParser):
    p.add_argument("--samples", type=_nonneg, default=DEFAULT_SAMPLES, help="random samples beyond the basis and pair sums")
    p.add_argument("--bound", type=_nonneg, default=DEFAULT_BOUND, help="random coordinates lie in [-bound, bound]")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alglie", description="Exact algebraicity checks for matrix Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("jordan", help="semisimple + nilpotent parts of a matrix")
    p.add_argument("--matrix", required=True, metavar="FILE")

    p = sub.add_parser("replica", help="replica algebra g(X) of a matrix")
    p.add_argument("--matrix", required=True, metavar="FILE")

    p = sub.add_parser("check", help="sample-based algebraicity verdict")
    p.add_argument("--basis", required=True, metavar="FILE")
    _sampling_flags(p)

    p = sub.add_parser("hull", help="smallest algebraic algebra containing the input")
    p.add_argument("--basis", required=True, metavar="FILE")
    _sampling_flags(p)
    p.add_argument("--max-rounds", type=_nonneg, default=DEFAULT_MAX_ROUNDS)

    p = sub.add_parser("decompose", help="nilpotent ideal + central torus splitting")
    p.add_argument("--basis", required=True, metavar="FILE")

    p = sub.add_parser("catalog", help="print one of the worked examples")
    p.add_argument("name", choices=CATALOG_NAMES)
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--beta", type=_rational)
    p.add_argument("--a", type=_rational)
    p.add_argument("--n", type=int)

    p = sub.add_parser("verify-paper", help="run every reproduction claim")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _cmd_jordan(args):
    return serialize.jordan_pair_to_json(jordan_decompose(_load_matrix(args.matrix))), 0


def _cmd_replica(args):
    return serialize.replica_to_json(replica(_load_matrix(args.matrix))), 0


def _cmd_check(args):
    v = check_algebraic(_load_algebra(args.basis), args.samples, args.bound, args.seed)
    return serialize.verdict_to_json(v), int(v.is_refutation)


def _cmd_hull(args):
    r = algebraic_hull(_load_algebra(args.basis), args.samples, args.bound, args.seed, args.max_rounds)
    return serialize.hull_to_json(r), int(not r.valid)


def _cmd_decompose(args):
    d = nilpotent_decomposition(_load_algebra(args.basis))
    return serialize.decomposition_to_json(d), int(not d.valid)


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"catalog {args.name} needs {' '.join(missing)}")


def _cmd_catalog(args):
    name = args.name
    if name == "model-L":
        _need(args, "n")
        if args.n < 3:
            raise UsageError("model-L needs --n >= 3")
        out = serialize.structure_constants_to_json(catalog.model_Ln(args.n))
        return {"n": args.n, **out}, 0
    _need(args, "alpha", "beta")
    a, b = args.alpha, args.beta
    if name == "heisenberg4":
        return serialize.lie_to_json(catalog.heisenberg_h(a, b)), 0
    if name == "hull-m":
        return serialize.lie_to_json(catalog.hull_m(a, b)), 0
    if name == "n1":
        return serialize.subspace_to_json(catalog.nilradical_n1(a, b)), 0
    if name == "a1":
        return serialize.subspace_to_json(catalog.torus_a1(a, b)), 0
    if name == "x4":
        return serialize.qmatrix_to_json(catalog.x4(a, b)), 0
    _need(args, "a", "n")
    return serialize.filiform_to_json(catalog.filiform_rep(args.n, args.a, a, b)), 0


def _cmd_verify(args):
    results = verify_all(args.seed)
    report = {
        "seed": args.seed,
        "passed": all(r.passed for r in results),
        "claims": [
            {"criterion": r.number, "title": r.title, "passed": r.passed, "details": list(r.details)}
            for r in results
        ],
    }
    return report, int(not report["passed"])


COMMANDS = {
    "jordan": _cmd_jordan,
    "replica": _cmd_replica,
    "check": _cmd_check,
    "hull": _cmd_hull,
    "decompose": _cmd_decompose,
    "catalog": _cmd_catalog,
    "verify-paper": _cmd_verify,
}


def error_object(exc: Exception) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        payload, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except AlgLieError as exc:
        payload, code = error_object(exc), 1
    stdout.write(serialize.dumps(payload))
    return code


def main() -> None:
    # argparse still exits directly for --help
    sys.exit(run())


if __name__ == "__main__":
    main()
