"""Two-phase static transfer in both directions, against a no-transfer skill run.

easy->hard seeds each family's cache from its easy tasks and reuses it read-only;
hard->easy does the reverse. Token totals are compared on the target tasks only.
"""
import argparse
from pathlib import Path

from skillbench.metrics import RunMetrics, aggregate
from skillbench.runner import RunConfig, run_suite
from skillbench.tasks import generate_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="runs/static")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    out = Path(args.out)
    tasks = generate_suite(seed=args.seed)
    fresh = run_suite(tasks, out / "skill", RunConfig(mode="skill", seed=args.seed,
                                                      workers=args.workers)).by_task()
    for source, target in (("easy", "hard"), ("hard", "easy")):
        run = run_suite(tasks, out / f"{source}_to_{target}",
                        RunConfig(mode="static", seed=args.seed, static_source=source))
        reused = RunMetrics([e for e in run.episodes if e.difficulty == target])
        baseline = RunMetrics([fresh[e.task_id] for e in reused.episodes])
        r, b = aggregate(reused), aggregate(baseline)
        tok_r, tok_b = r["in_tokens"] + r["out_tokens"], b["in_tokens"] + b["out_tokens"]
        print(f"{source}->{target}: exec {r['exec_rate']:.0%}, saves {r['skills_saved']}, "
              f"success {r['successes']}/{r['tasks']}, tokens {tok_r} vs {tok_b} without "
              f"transfer ({(tok_r - tok_b) / tok_b:+.0%})")


if __name__ == "__main__":
    main()
