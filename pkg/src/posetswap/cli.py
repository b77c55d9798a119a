"""Command-line interface.

Subcommands: ``run`` (simulate to the terminal arrangement), ``predict``
(compute it analytically), ``verify`` (exhaustive confluence check),
``fences`` (per-pair verdicts with certificates), ``gen`` (emit poset
documents), ``hasse`` (DOT export). Machine-readable results go to
stdout, diagnostics to stderr.

Exit codes: 0 success, 1 usage error, 2 invalid input (schema, cycle,
arrangement mismatch), 3 verification failure, 4 node limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import analysis, engine, generators, oracle, serialization
from .errors import (
    ArrangementMismatchError,
    CycleError,
    DuplicateElementError,
    InternalInconsistencyError,
    InvalidSpecError,
    LimitExceededError,
    ReflexivePairError,
    SchemaError,
    UnknownElementError,
)
from .poset import Poset

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_LIMIT = 4

_INPUT_ERRORS = (
    SchemaError,
    DuplicateElementError,
    UnknownElementError,
    ReflexivePairError,
    CycleError,
    ArrangementMismatchError,
    InvalidSpecError,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage by default; this CLI reserves 2 for
    invalid input, so usage problems exit 1 instead."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except InternalInconsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


def _build_parser() -> _Parser:
    parser = _Parser(prog="posetswap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="apply permissible swaps until terminal")
    _add_instance_args(run)
    run.add_argument(
        "--strategy",
        choices=["leftmost", "rightmost", "random"],
        default="leftmost",
        help="which permissible swap to take at each step",
    )
    run.add_argument("--seed", type=int, help="seed for --strategy random")
    run.add_argument("--trace", action="store_true", help="stream one record per swap")
    run.add_argument(
        "--verbose", action="store_true", help="include the arrangement after each swap"
    )
    run.set_defaults(handler=_cmd_run)

    predict = sub.add_parser("predict", help="terminal arrangement and count, no simulation")
    _add_instance_args(predict)
    predict.set_defaults(handler=_cmd_predict)

    verify = sub.add_parser("verify", help="exhaustive confluence check against the prediction")
    _add_instance_args(verify)
    verify.add_argument(
        "--max-n",
        type=int,
        default=oracle.DEFAULT_NODE_LIMIT,
        metavar="N",
        help="abort once the explored set would exceed N arrangements",
    )
    verify.add_argument("--render", metavar="FILE", help="draw the explored state space to FILE")
    verify.set_defaults(handler=_cmd_verify)

    fences = sub.add_parser("fences", help="per-pair verdicts with fence certificates")
    _add_instance_args(fences)
    fences.set_defaults(handler=_cmd_fences)

    gen = sub.add_parser("gen", help="emit a poset document")
    gen.add_argument(
        "--kind",
        required=True,
        choices=sorted(generators.NAMED_KINDS) + ["random"],
    )
    gen.add_argument("--n", type=int, help="size for chain, antichain, random")
    gen.add_argument("--k", type=int, help="set size for boolean")
    gen.add_argument("--a", type=int, help="rows for grid")
    gen.add_argument("--b", type=int, help="columns for grid")
    gen.add_argument("--edge-prob", type=float, help="pair probability for random")
    gen.add_argument("--seed", type=int, help="seed for random")
    gen.set_defaults(handler=_cmd_gen)

    hasse = sub.add_parser("hasse", help="emit the order diagram as DOT")
    hasse.add_argument("--poset", required=True, metavar="FILE")
    hasse.add_argument("--render", metavar="FILE", help="also draw the diagram to FILE")
    hasse.set_defaults(handler=_cmd_hasse)

    return parser


def _add_instance_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--poset", required=True, metavar="FILE", help="poset document")
    sub.add_argument(
        "--perm", required=True, metavar="LIST", help="comma-separated starting arrangement"
    )


def _load_instance(args) -> tuple[Poset, engine.Arrangement]:
    with open(args.poset, encoding="utf-8") as fh:
        poset = serialization.parse_poset(fh.read())
    return poset, serialization.parse_arrangement(args.perm, poset)


def _usage_error(args, message: str):
    print(f"posetswap {args.command}: error: {message}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def _cmd_run(args) -> int:
    if args.strategy == "random" and args.seed is None:
        _usage_error(args, "--strategy random requires --seed")
    if args.strategy != "random" and args.seed is not None:
        _usage_error(args, "--seed only applies to --strategy random")
    poset, arr = _load_instance(args)
    strategy: engine.Strategy
    if args.strategy == "random":
        strategy = engine.Random(args.seed)
    elif args.strategy == "rightmost":
        strategy = engine.RIGHTMOST
    else:
        strategy = engine.LEFTMOST
    terminal, trace = engine.run_to_terminal(poset, arr, strategy)
    if args.trace:
        sys.stdout.write(serialization.write_trace(trace, verbose=args.verbose))
    else:
        print(serialization.format_arrangement(terminal))
        print(len(trace.events))
    return EXIT_OK


def _cmd_predict(args) -> int:
    poset, arr = _load_instance(args)
    print(serialization.format_arrangement(analysis.predict_terminal(poset, arr)))
    print(analysis.predict_swap_count(poset, arr))
    return EXIT_OK


def _cmd_verify(args) -> int:
    poset, arr = _load_instance(args)
    report = oracle.check_confluence(poset, arr, node_limit=args.max_n)
    print(
        json.dumps(
            {
                "reachable_count": report.reachable_count,
                "terminals": sorted(list(t) for t in report.terminals),
                "swap_count_set": sorted(report.swap_count_set),
                "predicted_terminal": list(report.predicted_terminal),
                "predicted_count": report.predicted_count,
                "confluent": report.confluent,
                "agrees": report.agrees,
            }
        )
    )
    if args.render:
        from . import viz

        viz.render_state_space(poset, arr, args.render, node_limit=args.max_n)
    if report.confluent and report.agrees:
        return EXIT_OK
    print("verification failure: exploration disagrees with the prediction", file=sys.stderr)
    return EXIT_VERIFICATION_FAILED


def _cmd_fences(args) -> int:
    poset, arr = _load_instance(args)
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            outcome = analysis.classify_pair(poset, arr, arr[i], arr[j])
            record: dict[str, object] = {
                "x": arr[i],
                "y": arr[j],
                "outcome": outcome.kind.value,
            }
            if outcome.certificate is not None:
                record["certificate"] = list(outcome.certificate.chain)
            print(json.dumps(record))
    return EXIT_OK


def _cmd_gen(args) -> int:
    given = {
        name: getattr(args, name)
        for name in ("n", "k", "a", "b", "edge_prob", "seed")
        if getattr(args, name) is not None
    }
    if args.kind == "random":
        wanted = {"n", "edge_prob", "seed"}
    else:
        wanted = set(generators.NAMED_KINDS[args.kind][1])
    missing = sorted(wanted - set(given))
    extra = sorted(set(given) - wanted)
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))
        if extra:
            parts.append("unexpected " + ", ".join("--" + e.replace("_", "-") for e in extra))
        _usage_error(args, f"kind {args.kind!r}: " + "; ".join(parts))
    if args.kind == "random":
        poset = generators.random_poset(given["n"], given["edge_prob"], given["seed"])
    else:
        poset = generators.named_poset(args.kind, **given)
    sys.stdout.write(serialization.write_poset(poset))
    return EXIT_OK


def _cmd_hasse(args) -> int:
    with open(args.poset, encoding="utf-8") as fh:
        poset = serialization.parse_poset(fh.read())
    sys.stdout.write(serialization.export_dot(poset))
    if args.render:
        from . import viz

        viz.render_hasse(poset, args.render)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
