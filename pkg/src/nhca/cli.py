"""Command-line front end.

    nhca recognize [FILE ...] [--format g6|edges] [--emit verdict|model|witness|dot]
    nhca catalog FAMILY
    nhca verify-theorem [--max-n N]

Output is JSON lines, one object per input graph. Exit codes: 0 when every
graph is NHCA (or every check agrees), 1 when some graph has an obstruction
(or some check disagrees), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .builder import InternalContradiction, build_nhca_model
from .catalog import make
from .detector import find_interval_obstruction, find_nhca_obstruction
from .enumeration import enumerate_graphs
from .graph import Graph, GraphError, parse_edge_list, parse_graph6, write_graph6
from .models import ArcModel, to_dot, verify_nhca_model
from .oracle import brute_force_circular_arc, brute_force_interval, brute_force_nhca

EXIT_OK, EXIT_FOUND, EXIT_ERROR = 0, 1, 2
EXHAUSTIVE_MAX_N = 7
HARD_MAX_N = 8


@dataclass
class RunReport:
    checked: int = 0
    agreements: int = 0
    disagreements: int = 0
    undecided: int = 0
    offending: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "undecided": self.undecided,
            "offending": self.offending,
        }


def _map(fn: Callable, items: Iterable, jobs: int) -> Iterator:
    # order-preserving in both modes
    if jobs <= 1:
        return map(fn, items)
    pool = ProcessPoolExecutor(max_workers=jobs)
    return pool.map(fn, items, chunksize=8)


# --- recognize ----------------------------------------------------------------------

def _read_inputs(paths: Sequence[str], fmt: str) -> Iterator[tuple[str, Graph | Exception]]:
    sources = [(p, open(p, "rb").read()) for p in paths] if paths else [("<stdin>", sys.stdin.buffer.read())]
    for name, data in sources:
        if fmt == "edges":
            try:
                yield name, parse_edge_list(data.decode())
            except ValueError as exc:  # also covers UnicodeDecodeError
                yield name, exc
            continue
        for lineno, line in enumerate(data.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            label = f"{name}:{lineno}"
            try:
                yield label, parse_graph6(line)
            except ValueError as exc:
                yield label, exc


@dataclass(frozen=True)
class _RecognizeTask:
    label: str
    graph: Graph
    emit: str | None
    oracle: bool
    budget: int | None
    timing: bool


def _recognize_one(task: _RecognizeTask) -> tuple[int, str]:
    t0 = time.perf_counter()
    g = task.graph
    out: dict = {"input": task.label, "n": g.n}
    try:
        result = build_nhca_model(g)
    except InternalContradiction as exc:
        out["error"] = f"internal contradiction: {exc}"
        return EXIT_ERROR, json.dumps(out)
    status = EXIT_OK
    if isinstance(result, ArcModel):
        # build_nhca_model verifies, checked again so nothing unverified leaves
        assert verify_nhca_model(g, result)
        out["verdict"] = "nhca"
        if task.emit in (None, "model"):
            out["model"] = result.to_json()
    else:
        status = EXIT_FOUND
        out["verdict"] = "obstruction"
        out["family"] = str(result.family)
        if task.emit in (None, "witness"):
            out["witness"] = result.to_json()
    if task.oracle:
        verdict = brute_force_nhca(g, task.budget)
        if not verdict.decided:
            out["oracle"] = "undecided"
        elif verdict.member == isinstance(result, ArcModel):
            out["oracle"] = "agree"
        else:
            out["oracle"] = "disagree"
            status = EXIT_ERROR
    if task.timing:
        out["seconds"] = round(time.perf_counter() - t0, 6)
    if task.emit == "dot":
        model = result if isinstance(result, ArcModel) else None
        return status, to_dot(g, model, name="G").rstrip("\n")
    return status, json.dumps(out)


def cmd_recognize(args: argparse.Namespace) -> int:
    tasks = []
    for label, item in _read_inputs(args.inputs, args.format):
        if isinstance(item, Exception):
            tasks.append((label, item))
        else:
            tasks.append((label, _RecognizeTask(label, item, args.emit, args.oracle, args.budget, args.timing)))
    good = [t for _, t in tasks if isinstance(t, _RecognizeTask)]
    results = iter(_map(_recognize_one, good, args.jobs))
    code = EXIT_OK
    for label, t in tasks:
        if isinstance(t, Exception):
            print(json.dumps({"input": label, "error": str(t)}))
            code = EXIT_ERROR
            continue
        status, line = next(results)
        print(line)
        code = max(code, status)
    return code


# --- catalog ------------------------------------------------------------------------

def cmd_catalog(args: argparse.Namespace) -> int:
    try:
        entry = make(args.family)
    except GraphError as exc:
        print(f"nhca catalog: {exc}", file=sys.stderr)
        return EXIT_ERROR
    g = entry.graph
    print(json.dumps({
        "family": str(entry.family),
        "graph6": write_graph6(g).decode(),
        "n": g.n,
        "m": g.edge_count(),
        "edges": [list(e) for e in g.edges()],
        "marked_vertex": entry.marked_vertex,
    }))
    return EXIT_OK


# --- verify-theorem -----------------------------------------------------------------

@dataclass(frozen=True)
class _TheoremTask:
    graph: Graph
    modes: tuple[str, ...]
    budget: int | None


def _verify_one(task: _TheoremTask) -> tuple[str, list[str]]:
    """(status, problems) with status one of agree / disagree / undecided."""
    g = task.graph
    problems: list[str] = []
    undecided = False
    if "nhca" in task.modes:
        witness = find_nhca_obstruction(g)
        verdict = brute_force_nhca(g, task.budget)
        if not verdict.decided:
            undecided = True
        elif verdict.member != (witness is None):
            problems.append("nhca: detector and oracle disagree")
        if witness is not None and not witness.verify(g):
            problems.append("nhca: witness does not re-verify")
        if witness is None:
            try:
                model = build_nhca_model(g)
                if not isinstance(model, ArcModel) or not verify_nhca_model(g, model):
                    problems.append("builder: no verified model")
            except InternalContradiction as exc:
                problems.append(f"builder: {exc}")
    if "interval" in task.modes:
        witness = find_interval_obstruction(g)
        verdict = brute_force_interval(g, task.budget)
        if not verdict.decided:
            undecided = True
        elif verdict.member != (witness is None):
            problems.append("interval: detector and oracle disagree")
    if problems:
        return "disagree", problems
    return ("undecided" if undecided else "agree"), problems


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    if args.max_n > HARD_MAX_N or (args.max_n > EXHAUSTIVE_MAX_N and not args.allow_8):
        print(
            f"nhca verify-theorem: max-n {args.max_n} refused; exhaustive mode supports up to "
            f"{EXHAUSTIVE_MAX_N} (or {HARD_MAX_N} with --allow-8)",
            file=sys.stderr,
        )
        return EXIT_ERROR
    modes = tuple(args.modes.split(","))
    for m in modes:
        if m not in ("nhca", "interval"):
            print(f"nhca verify-theorem: unknown mode {m!r}", file=sys.stderr)
            return EXIT_ERROR
    report = RunReport()
    t0 = time.perf_counter()
    for n in range(1, args.max_n + 1):
        graphs = list(enumerate_graphs(n))
        tasks = [_TheoremTask(g, modes, args.budget) for g in graphs]
        for g, (status, problems) in zip(graphs, _map(_verify_one, tasks, args.jobs)):
            report.checked += 1
            if status == "agree":
                report.agreements += 1
            elif status == "undecided":
                report.undecided += 1
            else:
                report.disagreements += 1
                g6 = write_graph6(g).decode()
                report.offending.append(g6)
                print(f"{g6}: {'; '.join(problems)}", file=sys.stderr)
        if args.progress:
            print(f"n={n}: {report.checked} graphs so far", file=sys.stderr)
    out = report.to_json()
    out["max_n"] = args.max_n
    out["modes"] = list(modes)
    if args.timing:
        out["seconds"] = round(time.perf_counter() - t0, 3)
    print(json.dumps(out))
    return EXIT_OK if report.disagreements == 0 else EXIT_FOUND


# --- oracle (debugging) -------------------------------------------------------------

_ORACLES = {"nhca": brute_force_nhca, "interval": brute_force_interval, "circular-arc": brute_force_circular_arc}


def cmd_oracle(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for label, item in _read_inputs(args.inputs, args.format):
        if isinstance(item, Exception):
            print(json.dumps({"input": label, "error": str(item)}))
            code = EXIT_ERROR
            continue
        verdict = _ORACLES[args.kind](item, args.budget)
        out = {"input": label, "decided": verdict.decided, "member": verdict.member, "nodes": verdict.nodes_explored}
        if verdict.model is not None:
            out["model"] = verdict.model.to_json()
        print(json.dumps(out))
    return code


# --- entry point --------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nhca", description="Certifying recognizer for normal Helly circular-arc graphs.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="{recognize,catalog,verify-theorem}")

    rec = sub.add_parser("recognize", help="recognize graphs and emit a model or an obstruction")
    rec.add_argument("inputs", nargs="*", help="input files (default: stdin)")
    rec.add_argument("--format", choices=("g6", "edges"), default="g6")
    rec.add_argument("--emit", choices=("verdict", "model", "witness", "dot"), default=None,
                     help="restrict output (default: verdict plus its certificate)")
    rec.add_argument("--oracle", action="store_true", help="cross-check each verdict by brute force")
    rec.add_argument("--budget", type=_positive, default=None, help="node budget for the oracle")
    rec.add_argument("--jobs", type=_positive, default=1)
    rec.add_argument("--timing", action="store_true", help="add per-graph wall time")
    rec.set_defaults(func=cmd_recognize)

    cat = sub.add_parser("catalog", help="print a forbidden graph, e.g. wheel:4, net:2, g1, gimbel:2")
    cat.add_argument("family")
    cat.set_defaults(func=cmd_catalog)

    ver = sub.add_parser("verify-theorem", help="compare detector, builder and oracle on all small graphs")
    ver.add_argument("--max-n", type=int, default=EXHAUSTIVE_MAX_N)
    ver.add_argument("--allow-8", action="store_true", help="permit max-n 8 (slow)")
    ver.add_argument("--modes", default="nhca,interval", help="comma list of nhca, interval")
    ver.add_argument("--budget", type=_positive, default=None)
    ver.add_argument("--jobs", type=_positive, default=1)
    ver.add_argument("--progress", action="store_true")
    ver.add_argument("--timing", action="store_true")
    ver.set_defaults(func=cmd_verify_theorem)

    orc = sub.add_parser("oracle", help=argparse.SUPPRESS)
    orc.add_argument("inputs", nargs="*")
    orc.add_argument("--kind", choices=tuple(_ORACLES), default="nhca")
    orc.add_argument("--format", choices=("g6", "edges"), default="g6")
    orc.add_argument("--budget", type=_positive, default=None)
    orc.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except OSError as exc:
        print(f"nhca: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
