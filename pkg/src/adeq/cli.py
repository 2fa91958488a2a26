"""Command-line front end: ``adeq {parse,check,search,bound,export} FILE...``.

Each non-blank input line holds one PD code, optionally preceded by a name
(``4_1 X[...]`` or ``4_1: X[...]``). Lines starting with ``#`` are comments.
Records go to stdout as NDJSON; errors go to stderr as one JSON line.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from adeq import __version__
from adeq.bound import best_bound
from adeq.diagram import Diagram, is_prime, parse_pd
from adeq.exceptions import AdeqError, BudgetExceeded
from adeq.export import (
    complex_json,
    dumps,
    h_sketch_svg,
    piece_graph_dot,
    state_graph_dot,
)
from adeq.resolution import apply_state, reduce, state_graph, verdicts
from adeq.search import DEFAULT_BUDGET, FULL, TWIST, find_homogeneously_adequate
from adeq.upperpoly import build_shaded_faces

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_BUDGET = 0, 1, 2, 3

_NAMED_LINE = re.compile(r"^\s*([^\s\[\]:]+?)\s*:?\s+(?=(?:PD|X)?\s*[\[(])")


class CliError(Exception):
    def __init__(self, kind: str, message: str, location: str = "", code: int = EXIT_INPUT):
        super().__init__(message)
        self.kind, self.message, self.location, self.code = kind, message, location, code

    def record(self) -> dict:
        return {"schema": "adeq.error/1", "error": self.kind, "message": self.message,
                "location": self.location or None}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which means "unknown E_c" here
        raise CliError("UsageError", message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    paths: tuple[str, ...]
    mode: str = TWIST
    budget: int = DEFAULT_BUDGET
    mirror: bool = False
    precision: int = 4
    hyperbolic: bool = False
    fmt: str = "json"
    best_only: bool = False
    state: Optional[str] = None
    out: Optional[str] = None
    jobs: int = 1


@dataclass(frozen=True)
class Item:
    location: str
    name: str
    text: str


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mode", choices=[FULL, TWIST], default=TWIST,
                        help="enumerate all 2^n states or one letter per twist region")
    common.add_argument("--budget", type=int, default=None,
                        help=f"maximum states to examine (env ADEQ_BUDGET, default {DEFAULT_BUDGET})")
    common.add_argument("--mirror", action="store_true", help="reflect every diagram (swaps A and B)")
    common.add_argument("--precision", type=int, default=4, help="digits after the point in bounds")
    common.add_argument("--hyperbolic", action="store_true", help="assert the links are hyperbolic")
    common.add_argument("--format", dest="fmt", choices=["json", "text", "dot", "svg"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes; output order is kept")

    p = _Parser(prog="adeq", description="Homogeneously adequate states and volume bounds.")
    p.add_argument("--version", action="version", version=f"adeq {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in [
        ("parse", "parse and validate PD codes"),
        ("check", "primeness plus adequacy of the all-A and all-B states"),
        ("search", "list homogeneously adequate states"),
        ("bound", "best certified volume lower bound per diagram"),
        ("export", "write DOT, JSON or SVG renderings of one state"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("paths", nargs="+", metavar="FILE", help="input file, or - for stdin")
        if name == "search":
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--all", dest="best_only", action="store_false")
            g.add_argument("--best", dest="best_only", action="store_true")
            sp.set_defaults(best_only=False)
        if name == "export":
            sp.add_argument("--state", help="state string such as AABB (default: best found)")
            sp.add_argument("--out", help="directory for output files (default: stdout)")
    return p


def config_from_args(argv: Optional[list[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    budget = ns.budget
    if budget is None:
        env = os.environ.get("ADEQ_BUDGET")
        try:
            budget = int(env) if env else DEFAULT_BUDGET
        except ValueError:
            raise CliError("UsageError", f"ADEQ_BUDGET is not an integer: {env!r}")
    if budget < 1 or ns.precision < 0 or ns.jobs < 1:
        raise CliError("UsageError", "--budget and --jobs must be positive, --precision non-negative")
    if ns.command != "export" and ns.fmt in ("dot", "svg"):
        raise CliError("UsageError", f"--format {ns.fmt} only applies to export")
    if ns.command == "export" and ns.fmt == "text":
        raise CliError("UsageError", "export supports --format json, dot or svg")
    return RunConfig(
        command=ns.command, paths=tuple(ns.paths), mode=ns.mode, budget=budget,
        mirror=ns.mirror, precision=ns.precision, hyperbolic=ns.hyperbolic, fmt=ns.fmt,
        best_only=getattr(ns, "best_only", False), state=getattr(ns, "state", None),
        out=getattr(ns, "out", None), jobs=ns.jobs,
    )


def read_items(paths) -> list[Item]:
    items = []
    for path in paths:
        try:
            if path == "-":
                text = sys.stdin.read()
            else:
                text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise CliError(type(exc).__name__, str(exc), path)
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            m = _NAMED_LINE.match(stripped)
            name, code = (m.group(1), stripped[m.end():]) if m else ("", stripped)
            items.append(Item(f"{path}:{lineno}", name or f"{path}:{lineno}", code))
    return items


def load(item: Item, cfg: RunConfig) -> Diagram:
    try:
        return parse_pd(item.text, mirror=cfg.mirror, name=item.name)
    except AdeqError as exc:
        raise CliError(type(exc).__name__, str(exc), item.location)


# Each handler returns (stdout chunks, exit status). Handlers run in workers.

def _do_parse(item: Item, cfg: RunConfig):
    d = load(item, cfg)
    rec = {"schema": "adeq.diagram/1", "location": item.location, "crossings_count": d.n,
           "edges_count": len(d.edges), "faces_count": len(d.faces),
           "alternating": d.is_alternating(), **d.to_dict()}
    if cfg.fmt == "text":
        return [f"{d.name}: {d.n} crossings, {len(d.edges)} edges, {len(d.faces)} faces"], EXIT_OK
    return [dumps(rec)], EXIT_OK


def _adequacy_phrase(a: bool, b: bool) -> str:
    return f"{'' if a else 'not '}A-adequate, {'' if b else 'not '}B-adequate"


def _do_check(item: Item, cfg: RunConfig):
    d = load(item, cfg)
    cert = is_prime(d)
    per = {}
    for letter in "AB":
        v = verdicts(apply_state(d, letter * d.n))
        per[letter] = {"adequate": v.adequate, "homogeneous": v.homogeneous,
                       "loop_segment": v.adequacy.loop_segment}
    ok = cert.verdict and all(p["adequate"] and p["homogeneous"] for p in per.values())
    summary = _adequacy_phrase(per["A"]["adequate"], per["B"]["adequate"])
    rec = {"schema": "adeq.check/1", "diagram": d.name, "location": item.location,
           "prime": cert.verdict, "prime_witness": None if cert.witness is None else list(cert.witness),
           "all_A": per["A"], "all_B": per["B"], "summary": summary, "ok": ok}
    if cfg.fmt == "text":
        line = f"{d.name}: {'prime' if cert.verdict else 'not prime'}, {summary}"
        return [line], EXIT_OK if ok else EXIT_UNKNOWN
    return [dumps(rec)], EXIT_OK if ok else EXIT_UNKNOWN


def _search(d: Diagram, item: Item, cfg: RunConfig):
    try:
        return find_homogeneously_adequate(d, cfg.mode, cfg.budget)
    except BudgetExceeded as exc:
        raise CliError("BudgetExceeded", str(exc), item.location, EXIT_BUDGET)
    except AdeqError as exc:
        raise CliError(type(exc).__name__, str(exc), item.location)


def _do_search(item: Item, cfg: RunConfig):
    d = load(item, cfg)
    res = _search(d, item, cfg)
    records = res.records[:1] if cfg.best_only else res.records
    out = []
    for rank, r in enumerate(records):
        if cfg.fmt == "text":
            out.append(f"{d.name}  #{rank}  {r.state}  chi_-={r.chi_minus}  "
                       f"loop_condition={'yes' if r.loop.holds else 'no'}")
        else:
            out.append(dumps({"schema": "adeq.search/1", "diagram": d.name,
                              "location": item.location, "mode": res.mode, "rank": rank,
                              "examined": res.examined, **r.to_dict()}))
    return out, EXIT_OK


def _do_bound(item: Item, cfg: RunConfig):
    d = load(item, cfg)
    try:
        rep = best_bound(d, cfg.mode, cfg.budget, cfg.hyperbolic, cfg.precision)
    except BudgetExceeded as exc:
        raise CliError("BudgetExceeded", str(exc), item.location, EXIT_BUDGET)
    except AdeqError as exc:
        raise CliError(type(exc).__name__, str(exc), item.location)
    status = EXIT_OK if rep.has_bound else EXIT_UNKNOWN
    if cfg.fmt == "text":
        return [rep.summary()], status
    return [dumps({**rep.to_dict(), "location": item.location})], status


def _stem(item: Item) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", item.name)


def _do_export(item: Item, cfg: RunConfig):
    d = load(item, cfg)
    state = cfg.state
    if state is None:
        best = _search(d, item, cfg).best
        state = best.state if best is not None else "A" * d.n
    try:
        sc = apply_state(d, state)
        v = verdicts(sc)
        up = build_shaded_faces(sc) if v.adequate and v.homogeneous else None
    except AdeqError as exc:
        raise CliError(type(exc).__name__, str(exc), item.location)
    g = state_graph(sc)
    if cfg.fmt == "dot":
        docs = [("G.dot", state_graph_dot(g, sc, "G")),
                ("Greduced.dot", state_graph_dot(reduce(g), sc, "Greduced"))]
        if up is not None:
            docs.append(("shaded.dot", piece_graph_dot(up)))
    elif cfg.fmt == "svg":
        docs = [("H.svg", h_sketch_svg(sc))]
    else:
        docs = [("complex.json", dumps(complex_json(sc, up)) + "\n")]
    if cfg.out is None:
        return [body.rstrip("\n") for _, body in docs], EXIT_OK
    out = []
    for suffix, body in docs:
        path = Path(cfg.out) / f"{_stem(item)}.{sc.state}.{suffix}"
        path.write_text(body, encoding="utf-8")
        out.append(dumps({"schema": "adeq.export/1", "diagram": d.name,
                          "location": item.location, "state": sc.state, "path": str(path)}))
    return out, EXIT_OK


HANDLERS = {"parse": _do_parse, "check": _do_check, "search": _do_search,
            "bound": _do_bound, "export": _do_export}


def _guarded(args):
    handler, item, cfg = args
    try:
        return handler(item, cfg), None
    except CliError as exc:
        return None, exc


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    items = read_items(cfg.paths)
    for it in items:
        load(it, cfg)  # reject bad input before any output is written
    if cfg.out is not None:
        Path(cfg.out).mkdir(parents=True, exist_ok=True)
    handler = HANDLERS[cfg.command]
    work = [(handler, it, cfg) for it in items]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_guarded, work))
    else:
        results = map(_guarded, work)
    status = EXIT_OK
    for ok, err in results:
        if err is not None:
            stdout.flush()
            raise err
        lines, st = ok
        for line in lines:
            stdout.write(line + "\n")
        status = max(status, st)
    stdout.flush()
    return status


def main(argv: Optional[list[str]] = None) -> int:
    try:
        return run(config_from_args(argv))
    except CliError as exc:
        sys.stderr.write(dumps(exc.record()) + "\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
