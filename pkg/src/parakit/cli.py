"""Command line entry point: ``parakit corpus | verify | budget``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from .budget import BUDGETS
from .graphlab.canon import enumerate_graphs, graphs_of_order
from .graphlab.graph import Graph, Graph6Error, decode_graph6, encode_graph6
from .graphlab.wl import MAX_LEVEL
from .report import FAIL, INCONCLUSIVE, PASS, VerificationReport
from .suites import SUITES, RunConfig, run_suite

log = logging.getLogger("parakit")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_CAPS = {"n": 7, "param": 6, "index": 4}
CAPS_ENV = "PARAKIT_CAPS"


class UsageError(Exception):
    pass


def parse_caps(text: str, base: dict[str, int] | None = None) -> dict[str, int]:
    """``"n=7,param=6,index=4"``; omitted keys keep their ``base`` value."""
    caps = dict(base or DEFAULT_CAPS)
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULT_CAPS:
            raise UsageError(f"bad cap {item!r}; expected n=N, param=P or index=K")
        try:
            caps[key] = int(value)
        except ValueError:
            raise UsageError(f"cap {key} needs an integer, got {value!r}") from None
        if caps[key] < 1:
            raise UsageError(f"cap {key} must be at least 1")
    return caps


def resolve_caps(cli_value: str | None) -> dict[str, int]:
    caps = dict(DEFAULT_CAPS)
    env = os.environ.get(CAPS_ENV)
    if env:
        caps = parse_caps(env, caps)
    if cli_value:
        caps = parse_caps(cli_value, caps)
    return caps


def read_corpus(path: str) -> list[Graph]:
    try:
        text = Path(path).read_text(encoding="ascii")
    except FileNotFoundError:
        raise UsageError(f"corpus {path} not found") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read corpus {path}: {exc}") from None
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        word = line.strip()
        if not word:
            continue
        try:
            graphs.append(decode_graph6(word))
        except Graph6Error as exc:
            raise UsageError(f"{path}:{lineno}: {exc} (byte {exc.offset})") from None
    return graphs


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


# ---------------------------------------------------------------------------
# corpus


def cmd_corpus(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    if args.max_n == 0:
        log.warning("max n is 0: writing an empty corpus")
        graphs: list[Graph] = []
    elif args.exact:
        graphs = list(graphs_of_order(args.max_n))
    else:
        graphs = enumerate_graphs(args.max_n)
    _write("".join(encode_graph6(g) + "\n" for g in graphs), args.output)
    log.info("wrote %d graphs", len(graphs))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _config(args: argparse.Namespace, graphs: list[Graph]) -> RunConfig:
    caps = resolve_caps(args.caps)
    if args.slack is not None and args.slack < 1:
        raise UsageError("--slack must be at least 1")
    top = max((g.n for g in graphs), default=0)
    if not graphs:
        log.warning("corpus is empty")
    elif top < caps["n"]:
        log.warning("corpus stops at n=%d, below the n cap %d; using n<=%d", top, caps["n"], top)
    return RunConfig(
        graphs=tuple(graphs),
        max_n=min(caps["n"], top) if graphs else caps["n"],
        max_param=caps["param"],
        max_index=caps["index"],
        slack=args.slack,
        seed=args.seed,
        trials=getattr(args, "trials", 100),
        inject_fault=getattr(args, "inject_fault", False),
        jobs=getattr(args, "jobs", 1),
    )


def render_reports(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "status", "inconclusive", "witnesses", "first_witness", "millis"])
    for r in reports:
        first = json.dumps(r.witnesses[0], separators=(",", ":")) if r.witnesses else ""
        writer.writerow([r.id, r.status, "true" if r.status == INCONCLUSIVE else "false", len(r.witnesses), first, r.to_dict()["millis"]])
    return buf.getvalue()


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    cfg = _config(args, read_corpus(args.corpus))
    reports = run_suite(args.suite, cfg)
    if not args.timing:
        for r in reports:
            r.millis = 0.0
    _write(render_reports(reports, args.format), args.output)
    counts = {s: sum(r.status == s for r in reports) for s in (PASS, INCONCLUSIVE, FAIL)}
    log.info("%d pass, %d inconclusive, %d fail", counts[PASS], counts[INCONCLUSIVE], counts[FAIL])
    for r in reports:
        if r.status == INCONCLUSIVE:
            log.warning("inconclusive: %s", r.id)
        elif r.status == FAIL:
            log.error("fail: %s %s", r.id, json.dumps(r.witnesses[0]))
    return EXIT_FAIL if counts[FAIL] else EXIT_OK


# ---------------------------------------------------------------------------
# budget


def _sample(graphs: list[Graph], per_n: int) -> list[Graph]:
    """At most ``per_n`` graphs of each order, evenly spaced in corpus order."""
    if per_n <= 0:
        return graphs
    by_order: dict[int, list[Graph]] = {}
    for g in graphs:
        by_order.setdefault(g.n, []).append(g)
    out = []
    for n in sorted(by_order):
        group = by_order[n]
        if len(group) <= per_n:
            out.extend(group)
        else:
            out.extend(group[(i * len(group)) // per_n] for i in range(per_n))
    return out


def cmd_budget(args: argparse.Namespace) -> int:
    if args.family not in BUDGETS:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(BUDGETS)}")
    cfg = _config(args, read_corpus(args.corpus))
    graphs = [g for g in cfg.graphs if g.n <= cfg.max_n]
    per_n = args.per_n if args.per_n is not None else (64 if args.family == "wl" else 0)
    graphs = _sample(graphs, per_n)
    max_k = cfg.max_index
    if args.family == "wl":
        max_k = min(max_k, MAX_LEVEL)
    elif args.family == "ds":
        max_k = min(max_k, 3)
    result = BUDGETS[args.family](graphs, max_k, slack=cfg.slack)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "k", "n", "measured_max", "allowed", "pass"])
    for row in result.rows:
        writer.writerow(row.as_csv())
    _write(buf.getvalue(), args.output)
    log.info("%s budget %s, slack %.6g, calibration prefix %d runs", result.family, result.label, result.slack, result.prefix)
    if not result.passed:
        log.error("%d runs over budget", len(result.violations))
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parakit", description="Verify parameterized-complexity constructions on small graphs.")
    parser.add_argument("-q", "--quiet", action="store_true", help="only print errors")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("corpus", help="write all unlabelled graphs up to a given order as graph6 lines")
    p.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS, help="only print errors")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--exact", action="store_true", help="only graphs with exactly max-n vertices")
    p.set_defaults(func=cmd_corpus)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS, help="only print errors")
        p.add_argument("--corpus", required=True)
        p.add_argument("--caps", help="n=N,param=P,index=K (also read from $PARAKIT_CAPS)")
        p.add_argument("--slack", type=float, help="budget slack; calibrated when omitted")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(list(SUITES) + ['all'])}")
    common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--trials", type=int, default=100, help="randomized composition trials")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="report wall-clock milliseconds (breaks byte-identical output)")
    p.add_argument("--inject-fault", action="store_true", help="add a reduction fixture that breaks coherence")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("budget", help="tabulate measured cost against a calibrated budget")
    p.add_argument("family", help=f"one of {', '.join(BUDGETS)}")
    common(p)
    p.add_argument("--per-n", type=int, help="sample at most this many graphs per order (wl defaults to 64)")
    p.set_defaults(func=cmd_budget)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.INFO, format="parakit: %(levelname)s: %(message)s", stream=sys.stderr, force=True)
    try:
        return args.func(args)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
