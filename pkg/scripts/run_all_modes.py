"""Run every mode over one suite and write a comparison report against the baseline.

    python3 scripts/run_all_modes.py --out runs/seed0 --seed 0 --workers 4
"""
import argparse
from pathlib import Path

from skillbench.metrics import RunMetrics, compare, emit_report
from skillbench.runner import RunConfig, run_suite
from skillbench.tasks import generate_suite, write_manifest


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawTextHelpFormatter)
    ap.add_argument("--out", default="runs/all_modes")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--families", nargs="*")
    args = ap.parse_args()

    out = Path(args.out)
    tasks = generate_suite(args.families or None, seed=args.seed)
    write_manifest(tasks, out / "tasks.json")

    runs = {}
    for mode in ("base", "skill", "hier", "direct", "static"):
        cfg = RunConfig(mode=mode, seed=args.seed, workers=args.workers)
        runs[mode] = run_suite(tasks, out / mode, cfg)
        print(f"{mode:>6}: {sum(e.success for e in runs[mode].episodes)}/{len(runs[mode].episodes)}")

    base = runs["base"].by_task()
    tables = []
    for mode in ("skill", "hier", "direct", "static"):
        variant = runs[mode]
        # static mode only covers its target tasks
        subset = RunMetrics([base[e.task_id] for e in variant.episodes])
        tables.append(compare(subset, variant, mode))
    for fmt, ext in (("markdown", "md"), ("csv", "csv")):
        (out / f"report.{ext}").write_text(emit_report(tables, fmt), encoding="utf-8")
    print(emit_report(tables, "markdown"))


if __name__ == "__main__":
    main()
