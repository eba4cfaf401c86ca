"""Command line entry point: gen-suite, run, compare, serve."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .accounting import Limits
from .library import DEFAULT_NESTING_LIMIT
from .metrics import RunMetrics, aggregate, compare, emit_report
from .policies import MODES
from .runner import RunConfig, load_edge_cases, load_run, run_suite
from .tasks import generate_suite, load_manifest, write_manifest
from .tools.families import FAMILY_SLUGS


def _families(values) -> list[str]:
    out = []
    for v in values or []:
        out += [x for x in v.split(",") if x]
    unknown = [f for f in out if f not in FAMILY_SLUGS]
    if unknown:
        raise SystemExit(f"unknown families: {', '.join(unknown)}")
    return out or list(FAMILY_SLUGS)


def cmd_gen_suite(args) -> int:
    tasks = generate_suite(_families(args.families), seed=args.seed)
    write_manifest(tasks, args.out)
    print(f"wrote {len(tasks)} tasks to {args.out}")
    return 0


def cmd_run(args) -> int:
    tasks = load_manifest(args.tasks)
    cfg = RunConfig(mode=args.mode, seed=args.seed,
                    edge_cases=load_edge_cases(args.edge_cases) if args.edge_cases else {},
                    nesting_limit=args.nesting_limit, workers=args.workers,
                    limits=Limits(max_turns=args.max_turns), static_source=args.static_source)
    run = run_suite(tasks, args.out, cfg)
    s = aggregate(run)
    print(f"{args.mode}: {s['successes']}/{s['tasks']} tasks succeeded, "
          f"{s['in_tokens'] + s['out_tokens']} tokens, {s['tool_calls']} tool calls -> {args.out}")
    return 0


def _common(base: RunMetrics, variant: RunMetrics):
    b, v = base.by_task(), variant.by_task()
    if set(b) != set(v):
        keep = [t for t in b if t in v]
        print(f"note: comparing the {len(keep)} tasks present in both runs", file=sys.stderr)
        return RunMetrics([b[t] for t in keep]), RunMetrics([v[t] for t in keep])
    return base, variant


def cmd_compare(args) -> int:
    base, variant = _common(load_run(args.base), load_run(args.variant))
    label = args.label or (variant.episodes[0].mode if variant.episodes else "variant")
    fmt = "markdown" if args.format == "md" else "csv"
    text = emit_report(compare(base, variant, label), fmt)
    out = Path(args.out or args.variant)
    out.mkdir(parents=True, exist_ok=True)
    (out / f"report.{args.format}").write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0


def cmd_serve(args) -> int:
    from . import server

    task = None
    if args.task_id:
        if not args.tasks:
            raise SystemExit("--task-id needs --tasks")
        matches = [t for t in load_manifest(args.tasks) if t.id == args.task_id]
        if not matches:
            raise SystemExit(f"task {args.task_id!r} not in {args.tasks}")
        task = matches[0]
    edges = ()
    if args.edge_cases:
        e = load_edge_cases(args.edge_cases)
        edges = tuple(e.get(task.family if task else args.family, ())) + tuple(e.get("*", ()))
    kw = {"family": args.family, "seed": args.seed, "task": task, "edge_cases": edges,
          "hierarchical": args.hierarchical, "locked": args.locked}
    if args.stdio:
        server.serve_stdio(server.make_session(args.workspace, cache=args.cache, **kw))
    else:
        server.serve_socket(args.socket, args.workspace, **kw)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skillbench", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-suite", help="write the task manifest")
    g.add_argument("--families", nargs="*", help="family slugs (default: all)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="tasks.json")
    g.set_defaults(fn=cmd_gen_suite)

    r = sub.add_parser("run", help="run one mode over a manifest")
    r.add_argument("--mode", choices=MODES, required=True)
    r.add_argument("--tasks", required=True)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out", required=True)
    r.add_argument("--edge-cases", help="JSON file: family -> entity list")
    r.add_argument("--nesting-limit", type=int, default=DEFAULT_NESTING_LIMIT)
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--max-turns", type=int, default=Limits().max_turns)
    r.add_argument("--static-source", choices=("easy", "medium", "hard"), default="easy",
                   help="difficulty whose tasks seed the static-mode cache")
    r.set_defaults(fn=cmd_run)

    c = sub.add_parser("compare", help="diff a variant run against a base run")
    c.add_argument("--base", required=True)
    c.add_argument("--variant", required=True)
    c.add_argument("--format", choices=("md", "csv"), default="md")
    c.add_argument("--label")
    c.add_argument("--out", help="directory for report.md/report.csv (default: the variant run)")
    c.set_defaults(fn=cmd_compare)

    s = sub.add_parser("serve", help="serve the skill primitives over NDJSON")
    where = s.add_mutually_exclusive_group(required=True)
    where.add_argument("--stdio", action="store_true")
    where.add_argument("--socket")
    s.add_argument("--workspace", required=True)
    s.add_argument("--family", default=FAMILY_SLUGS[0], choices=FAMILY_SLUGS)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tasks")
    s.add_argument("--task-id")
    s.add_argument("--cache", help="skill cache path (stdio only)")
    s.add_argument("--edge-cases")
    s.add_argument("--hierarchical", action="store_true")
    s.add_argument("--locked", action="store_true")
    s.set_defaults(fn=cmd_serve)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
