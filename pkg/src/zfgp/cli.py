"""Command-line entry point: ``zfgp {compute,classify,trim,gen,verify,hunt}``.

Reports are JSON lines.  Each line carries the full run configuration and the
tool version; timestamps and solver wall times sit under ``volatile`` so the
rest of the line is reproducible byte for byte.

Exit codes: 0 success or pass, 1 violations / hits / unchecked graphs,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, TextIO

from . import __version__, families, harness
from .forcing import DEFAULT_CAP
from .graph import GraphError, classify
from .graph6 import decode_graph6, encode_graph6, write_graph6
from .pathcover import is_partial_sun, trimmed_form

ENUMERATIONS = {
    "trees": families.enumerate_trees,
    "unicyclic": families.enumerate_unicyclic,
    "bicyclic": families.enumerate_bicyclic,
    "connected": families.enumerate_connected,
    "block": families.enumerate_block_graphs,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph6: list = field(default_factory=list)
    input: str | None = None
    output: str | None = None
    n_range: list | None = None
    family: str | None = None
    params: dict = field(default_factory=dict)
    seed: int = 0
    cap: int = DEFAULT_CAP
    workers: int = 1
    format: str = "json"
    options: dict = field(default_factory=dict)


def parse_range(text: str) -> list[int]:
    """``"a..b"`` or ``"a"`` to ``[a, b]``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = [int(lo), int(hi)]
        else:
            out = [int(text), int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or a single integer, got {text!r}") from None
    if out[0] > out[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def parse_param(text: str) -> tuple[str, Any]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


# ---------------------------------------------------------------------------
# output


class Emitter:
    def __init__(self, config: RunConfig, stream: TextIO):
        self.config = config
        self.stream = stream
        self.header = {"tool": "zfgp", "version": __version__, "config": asdict(config)}
        self.table_header_done = False

    def emit(self, kind: str, result: dict, volatile: dict | None = None):
        volatile = dict(volatile or {})
        volatile["timestamp"] = datetime.now(timezone.utc).isoformat()
        if self.config.format == "json":
            line = dict(self.header, kind=kind, result=result, volatile=volatile)
            self.stream.write(json.dumps(line, sort_keys=True, default=_jsonable) + "\n")
        else:
            self._table(kind, result)

    def _table(self, kind: str, result: dict):
        if kind == "record":
            cols = ["id", "n", "m", "leaves", "Z", "gp", "P"]
            if not self.table_header_done:
                self.stream.write("  ".join(f"{c:>8}" if c != "id" else f"{c:<24}" for c in cols) + "\n")
                self.table_header_done = True
            cells = [f"{str(result[c])[:24]:<24}" if c == "id" else f"{str(result[c]):>8}" for c in cols]
            self.stream.write("  ".join(cells) + "\n")
            return
        self.stream.write(f"[{kind}]\n")
        for key, value in result.items():
            if isinstance(value, (list, dict)) and len(json.dumps(value, default=_jsonable)) > 100:
                value = f"<{len(value)} entries>"
            self.stream.write(f"  {key}: {value}\n")


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")


# ---------------------------------------------------------------------------
# input graphs


def input_graphs(config: RunConfig):
    graphs = [decode_graph6(line) for line in config.graph6]
    if config.input:
        with open(config.input) as fh:
            graphs += [decode_graph6(line) for line in fh if line.strip()]
    if config.family:
        if config.family in ENUMERATIONS:
            lo, hi = config.n_range or [1, 6]
            graphs += [g for n in range(lo, hi + 1) for g in ENUMERATIONS[config.family](n)]
        else:
            spec = families.FamilySpec(config.family, dict(config.params), config.seed)
            graphs.append(families.generate(spec))
    if not graphs:
        raise UsageError("no input graphs: give --graph6, --input or --family")
    return graphs


# ---------------------------------------------------------------------------
# commands


def cmd_compute(config: RunConfig, out: Emitter) -> int:
    for G in input_graphs(config):
        rec = harness.invariant_record(G, config.cap, fast=config.options.get("fast", False)).to_dict()
        seconds = rec.pop("seconds")
        out.emit("record", rec, {"seconds": seconds})
    return 0


def cmd_classify(config: RunConfig, out: Emitter) -> int:
    for G in input_graphs(config):
        out.emit("classification", dict(graph6=encode_graph6(G), n=G.n, m=G.m, **classify(G).as_dict()))
    return 0


def cmd_trim(config: RunConfig, out: Emitter) -> int:
    import random

    order_seed = config.options.get("random_order")
    for G in input_graphs(config):
        rng = None if order_seed is None else random.Random(order_seed)
        tr = trimmed_form(G, rng)
        sun = None if tr.empty else is_partial_sun(tr.graph)
        out.emit(
            "trim",
            {
                "graph6": encode_graph6(G),
                "n1": tr.n1,
                "n2": tr.n2,
                "n3": tr.n3,
                "empty": tr.empty,
                "remaining": sorted(G.labels[v] for v in tr.remaining),
                "partial_sun": None if sun is None else {"U": len(sun.U), "segments": sun.segment_sizes},
                "log": [{"kind": s.kind, "vertices": sorted(G.labels[v] for v in s.vertices)} for s in tr.log],
            },
        )
    return 0


def cmd_gen(config: RunConfig, out: Emitter) -> int:
    graphs = input_graphs(config)
    if config.output:
        with open(config.output, "w") as fh:
            count = write_graph6(fh, graphs)
        out.emit("gen", {"count": count, "output": config.output})
    else:
        write_graph6(out.stream, graphs)
    return 0


def _verify_source(config: RunConfig) -> harness.Source | None:
    opts = config.options
    sources = []
    if config.family:
        if config.family not in ENUMERATIONS:
            raise UsageError(f"verify sources are {sorted(ENUMERATIONS)}; got {config.family!r}")
        lo, hi = config.n_range or [1, 8]
        sources.append(
            harness.Source(
                config.family,
                f"all {config.family} graphs {lo}<=n<={hi} up to isomorphism",
                lambda: (g for n in range(lo, hi + 1) for g in ENUMERATIONS[config.family](n)),
            )
        )
    count, max_n = opts.get("count", 500), opts.get("max_n")
    if opts.get("random_block"):
        sources.append(harness.random_block_source(count, max_n or 15, config.seed))
    if opts.get("random_quasi"):
        sources.append(harness.random_quasi_tree_source(opts["random_quasi"], count, max_n or 14, config.seed))
    if opts.get("random_forest"):
        sources.append(harness.random_forest_source(count, max_n or 14, seed=config.seed))
    if config.input:
        sources.append(harness.graph6_source(config.input))
    if config.graph6:
        sources.append(harness.list_source("graph6", [decode_graph6(x) for x in config.graph6]))
    if not sources:
        return None
    return sources[0] if len(sources) == 1 else harness.chain("combined", *sources)


def cmd_verify(config: RunConfig, out: Emitter) -> int:
    theorem = config.options["theorem"]
    ids = list(harness.THEOREMS) if theorem == "all" else [theorem]
    for t in ids:
        if t not in harness.THEOREMS:
            raise UsageError(f"unknown theorem {t!r}; choose from {list(harness.THEOREMS)} or 'all'")
    status = 0
    for t in ids:
        report = harness.verify_theorem(t, _verify_source(config), config.workers, config.cap)
        out.emit("theorem_report", report.to_dict())
        if report.verdict != "pass":
            status = 1
    return status


def cmd_hunt(config: RunConfig, out: Emitter) -> int:
    opts = config.options
    lo, hi = config.n_range or [4, 8]
    report = harness.hunt(
        opts["class"],
        opts["relation"],
        (lo, hi),
        mode=opts["mode"],
        seed=config.seed,
        budget=opts.get("budget", 1000),
        workers=config.workers,
        cap=config.cap,
    )
    out.emit("hunt_report", report.to_dict())
    return 1 if report.hits or report.unchecked else 0


COMMANDS = {
    "compute": cmd_compute,
    "classify": cmd_classify,
    "trim": cmd_trim,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "hunt": cmd_hunt,
}


def run(config: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Execute one configured command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        return COMMANDS[config.command](config, Emitter(config, stdout))
    except (UsageError, GraphError, ValueError, KeyError, OSError) as exc:
        stderr.write(f"zfgp {config.command}: error: {exc}\n")
        return 2


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph6", action="append", default=[], metavar="LINE", help="input graph (repeatable)")
    common.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line")
    common.add_argument("--output", metavar="FILE")
    common.add_argument("--n", type=parse_range, metavar="A..B", help="order range")
    common.add_argument("--family", help=f"enumeration ({', '.join(ENUMERATIONS)}) or family kind")
    common.add_argument("--param", action="append", type=parse_param, default=[], metavar="KEY=VALUE")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="solver order cap (env ZFGP_CAP)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=["json", "table"], default="json")
    for name in ENUMERATIONS:
        common.add_argument(f"--{name}", dest="family", action="store_const", const=name, help=f"same as --family {name}")

    parser = argparse.ArgumentParser(prog="zfgp", description="Zero forcing and general position toolkit.")
    parser.add_argument("--version", action="version", version=f"zfgp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact invariants with witnesses")
    p.add_argument("--fast", action="store_true", help="use cross-checked closed forms where they apply")
    sub.add_parser("classify", parents=[common], help="class flags")
    p = sub.add_parser("trim", parents=[common], help="trimmed form with deletion log")
    p.add_argument("--random-order", type=int, metavar="SEED", help="pick legal deletions at random")
    sub.add_parser("gen", parents=[common], help="write graphs as graph6")

    p = sub.add_parser("verify", parents=[common], help="check a theorem over a graph source")
    p.add_argument("--theorem", required=True, help=f"{', '.join(harness.THEOREMS)} or all")
    p.add_argument("--random-block", action="store_true")
    p.add_argument("--random-quasi", choices=[families.NO_PENDANTS, families.NO_DEG2_NEIGHBORS])
    p.add_argument("--random-forest", action="store_true")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-n", type=int)

    p = sub.add_parser("hunt", parents=[common], help="search a class for graphs satisfying a relation")
    p.add_argument("--class", dest="cls", required=True, choices=harness.HUNT_CLASSES)
    p.add_argument("--relation", required=True, help="e.g. 'Z>gp', 'gp>=Z+1'")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", dest="mode", action="store_const", const="exhaustive")
    mode.add_argument("--random", dest="mode", action="store_const", const="random")
    p.add_argument("--budget", type=int, default=1000)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    options: dict[str, Any] = {}
    if args.command == "compute":
        options["fast"] = args.fast
    elif args.command == "trim":
        options["random_order"] = args.random_order
    elif args.command == "verify":
        options.update(
            theorem=args.theorem,
            random_block=args.random_block,
            random_quasi=args.random_quasi,
            random_forest=args.random_forest,
            count=args.count,
            max_n=args.max_n,
        )
    elif args.command == "hunt":
        options.update({"class": args.cls, "relation": args.relation, "mode": args.mode or "exhaustive", "budget": args.budget})
    return RunConfig(
        command=args.command,
        graph6=args.graph6,
        input=args.input,
        output=args.output,
        n_range=args.n,
        family=args.family,
        params=dict(args.param),
        seed=args.seed,
        cap=args.cap,
        workers=args.workers,
        format=args.format,
        options=options,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
