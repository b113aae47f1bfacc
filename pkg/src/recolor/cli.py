"""Command-line interface.

Exit codes: 0 mixing / success, 1 not mixing / invalid, 2 usage or input
error, 3 state space over budget.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .coloring import apply_sequence
from .decider import Reason, decide_mixing, three_to_two
from .errors import (
    NotBipartite,
    NotMixing,
    RecolorError,
    SequenceError,
    ShapeError,
    TooLarge,
)
from .explorer import census
from .graph import bipartition
from .io import (
    export_config_dot,
    parse_coloring,
    parse_graph,
    parse_sequence,
    serialize_graph,
    serialize_sequence,
)
from .reduction import non_mixing_witness, reduce
from .synthesis import synthesize_k

MAX_STATES_ENV = "RECOLOR_MAX_STATES"

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _max_states(args: argparse.Namespace) -> int | None:
    if args.max_states is not None:
        return args.max_states
    env = os.environ.get(MAX_STATES_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{MAX_STATES_ENV} must be an integer, got {env!r}") from None
    return None


def _fmt(colors: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in colors) + ")"


def _emit(args: argparse.Namespace, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=False))
    else:
        print("\n".join(lines))


def _verdict_lines(verdict) -> list[str]:
    lines = [f"mixing: {'yes' if verdict.answer else 'no'}", f"reason: {verdict.reason.value}"]
    if verdict.witness is not None:
        lines.append(f"witness: {_fmt(verdict.witness.colors)}")
    return lines


def cmd_decide(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    verdict = decide_mixing(g, args.k, args.method, _max_states(args))
    if verdict.reason is Reason.VACUOUS_NO_COLORINGS:
        _warn(f"graph has no proper {args.k}-coloring; mixing holds vacuously")
    _emit(args, {"command": "decide", "k": args.k, **verdict.as_dict()}, _verdict_lines(verdict))
    return EXIT_OK if verdict.answer else EXIT_NO


def cmd_three_to_two(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    if bipartition(g) is None:
        _warn("graph is not bipartite; answering the predicate as stated")
    verdict = three_to_two(g, _max_states(args))
    lines = [f"three-to-two: {'yes' if verdict.answer else 'no'}", f"reason: {verdict.reason.value}"]
    if verdict.witness is not None:
        lines.append(f"witness: {_fmt(verdict.witness.colors)}")
    _emit(args, {"command": "three-to-two", **verdict.as_dict()}, lines)
    return EXIT_OK if verdict.answer else EXIT_NO


def cmd_reduce(args: argparse.Namespace) -> int:
    b = parse_graph(_read(args.graph))
    try:
        inst = reduce(b, args.k)
    except NotBipartite as exc:
        print(f"no instance: {exc}", file=sys.stderr)
        return EXIT_NO
    sidecar = inst.sidecar()
    _write(args.output, serialize_graph(inst.g, [f"reduction of a {b.n}-vertex bipartite graph, k={inst.k}"]))
    sidecar_path = args.output + ".json"
    _write(sidecar_path, json.dumps(sidecar) + "\n")
    report = {"command": "reduce", "output": args.output, "sidecar": sidecar_path, "n": inst.g.n, "m": inst.g.m, **sidecar}
    _emit(args, report, [f"wrote {args.output} ({inst.g.n} vertices, {inst.g.m} edges)", f"x_range: {sidecar['x_range']}"])
    return EXIT_OK


def cmd_synthesize(args: argparse.Namespace) -> int:
    b = parse_graph(_read(args.graph))
    inst = reduce(b, args.k)
    c1 = parse_coloring(_read(args.source), inst.g.n)
    c2 = parse_coloring(_read(args.target), inst.g.n)
    try:
        steps = synthesize_k(inst, c1, c2, _max_states(args))
    except NotMixing as exc:
        print(f"not mixing: {exc}", file=sys.stderr)
        return EXIT_NO
    _write(args.output, serialize_sequence(steps))
    _emit(
        args,
        {"command": "synthesize", "output": args.output, "length": len(steps), "final": list(c2.colors)},
        [f"wrote {args.output} ({len(steps)} steps, verified)"],
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    start = parse_coloring(_read(args.source), g.n).with_palette(args.k)
    steps = parse_sequence(_read(args.steps))
    try:
        final = apply_sequence(g, start, steps)
    except (SequenceError, ShapeError) as exc:
        _emit(args, {"command": "verify", "valid": False, "error": str(exc)}, [f"invalid: {exc}"])
        return EXIT_NO
    _emit(
        args,
        {"command": "verify", "valid": True, "length": len(steps), "final": list(final.colors), "k": final.k},
        [f"valid: {len(steps)} steps", f"final: {_fmt(final.colors)}"],
    )
    return EXIT_OK


def cmd_explore(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    cen = census(g, args.k, _max_states(args))
    stats = cen.stats()
    if stats.num_colorings == 0:
        _warn(f"graph has no proper {args.k}-coloring")
    if args.dot:
        _write(args.dot, export_config_dot(g, args.k, _max_states(args)))
    report = {"command": "explore", "k": args.k, **stats.as_dict()}
    lines = [f"{key}: {value}" for key, value in stats.as_dict().items()]
    if args.stats:
        sizes = sorted(cen.sizes.tolist(), reverse=True)
        report["component_sizes"] = sizes
        lines.append(f"component_sizes: {sizes}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_frozen(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    cen = census(g, args.k, _max_states(args))
    frozen = [[int(a) for a in cen.colorings[i]] for i in cen.frozen_indices()]
    _emit(
        args,
        {"command": "frozen", "k": args.k, "count": len(frozen), "frozen": frozen},
        [f"frozen: {len(frozen)}"] + [_fmt(c) for c in frozen],
    )
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    b = parse_graph(_read(args.graph))
    inst = reduce(b, args.k)
    verdict = three_to_two(b, _max_states(args))
    if verdict.answer:
        _emit(args, {"command": "witness", "found": False}, ["no witness: every 3-coloring of B reaches a 2-coloring"])
        return EXIT_OK
    pair = non_mixing_witness(inst, verdict.witness, _max_states(args))
    _emit(
        args,
        {
            "command": "witness",
            "found": True,
            "k": inst.k,
            "first": list(pair.first.colors),
            "second": list(pair.second.colors),
            "verification": pair.verification,
        },
        [
            f"first: {_fmt(pair.first.colors)}",
            f"second: {_fmt(pair.second.colors)}",
            f"verification: {pair.verification}",
        ],
    )
    return EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--max-states", type=int, default=None, help=f"state budget (env {MAX_STATES_ENV})")

    parser = argparse.ArgumentParser(prog="recolor", description="Recoloring reconfiguration of graph colorings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *, k=True, k_required=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--graph", required=True, help="DIMACS graph file")
        if k:
            p.add_argument("-k", type=int, required=k_required, help="palette size")
        p.set_defaults(func=func)
        return p

    p = add("decide", cmd_decide, "decide k-mixing")
    p.add_argument("--method", choices=("auto", "brute", "lemma3"), default="auto")
    add("three-to-two", cmd_three_to_two, "can every 3-coloring reach a 2-coloring?", k=False)
    p = add("reduce", cmd_reduce, "build the clique-join reduction instance")
    p.add_argument("-o", "--output", required=True)
    p = add("synthesize", cmd_synthesize, "recoloring sequence on a reduction instance")
    p.add_argument("--from", dest="source", required=True, help="start coloring (JSON)")
    p.add_argument("--to", dest="target", required=True, help="target coloring (JSON)")
    p.add_argument("-o", "--output", required=True)
    p = add("verify", cmd_verify, "replay a sequence")
    p.add_argument("--from", dest="source", required=True, help="start coloring (JSON)")
    p.add_argument("--steps", required=True, help="sequence file (JSON)")
    p = add("explore", cmd_explore, "configuration graph statistics")
    p.add_argument("--dot", help="write the configuration graph as DOT")
    p.add_argument("--stats", action="store_true", help="also list component sizes")
    add("frozen", cmd_frozen, "list frozen colorings")
    add("witness", cmd_witness, "non-mixing pair for the reduction instance")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "k", None) is not None and args.k < 1:
        print("error: -k must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, RecolorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - exit codes must stay within 0..3
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
