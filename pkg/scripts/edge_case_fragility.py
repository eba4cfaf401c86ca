"""Hierarchical vs flat skills when one entity per hard task returns degraded data.

For each family's hard task, the second entity is configured as an edge case.
Flat skill mode should recover through atomic fallback; the three-level
hierarchy has no per-entity fallback and loses the whole task.
"""
import argparse
import json
from pathlib import Path

from skillbench.runner import RunConfig, run_suite
from skillbench.tasks import generate_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="runs/edge_cases")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--nesting-limit", type=int, default=10)
    args = ap.parse_args()

    out = Path(args.out)
    tasks = [t for t in generate_suite(seed=args.seed) if t.difficulty == "hard"]
    edges = {t.family: [t.entities[1]] for t in tasks}
    out.mkdir(parents=True, exist_ok=True)
    (out / "edge_cases.json").write_text(json.dumps(edges, indent=2) + "\n")

    results = {}
    for mode in ("skill", "hier"):
        cfg = RunConfig(mode=mode, seed=args.seed, edge_cases=edges,
                        nesting_limit=args.nesting_limit)
        results[mode] = run_suite(tasks, out / mode, cfg).by_task()

    print(f"{'task':<40} {'skill':>7} {'hier':>7}  failed skill execs")
    for t in tasks:
        s, h = results["skill"][t.id], results["hier"][t.id]
        print(f"{t.id:<40} {s.score:>7.1f} {h.score:>7.1f}  {s.exec_attempts - s.exec_successes}")
    flat_ok = sum(e.success for e in results["skill"].values())
    hier_ok = sum(e.success for e in results["hier"].values())
    print(f"\nsucceeded: skill {flat_ok}/{len(tasks)}, hier {hier_ok}/{len(tasks)}")


if __name__ == "__main__":
    main()
