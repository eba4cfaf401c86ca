import csv
import io

import pytest

from skillbench.metrics import (
    HEADERS,
    EpisodeMetrics,
    RunMetrics,
    _signed,
    aggregate,
    compare,
    diff,
    emit_report,
)


def ep(task_id, *, success=True, difficulty="easy", tokens=1000, turns=10, calls=10,
       attempts=0, successes=0, saved=0, invocations=0, mode="base"):
    return EpisodeMetrics(task_id=task_id, mode=mode, difficulty=difficulty, success=success,
                          score=100 if success else 50, in_tokens=tokens, out_tokens=0,
                          cost=tokens * 1.25 / 1e6, turns=turns, tool_calls=calls,
                          exec_attempts=attempts, exec_successes=successes, skills_saved=saved,
                          skill_invocations=invocations)


def test_reuse_five():
    run = RunMetrics([ep("a", saved=1, invocations=5, attempts=5, successes=5)])
    assert aggregate(run)["reuse_rate"] == 5.0


def test_exec_seventy_percent():
    run = RunMetrics([ep("a", attempts=10, successes=7, saved=1, invocations=10)])
    assert aggregate(run)["exec_rate"] == pytest.approx(0.7)


def test_rates_not_applicable():
    s = aggregate(RunMetrics([ep("a")]))
    assert s["reuse_rate"] is None and s["exec_rate"] is None
    assert aggregate(RunMetrics())["success_rate"] is None


def test_successes_bounded_by_attempts():
    with pytest.raises(ValueError):
        ep("a", attempts=1, successes=2)


def test_success_rates():
    s = aggregate(RunMetrics([ep("a"), ep("b", success=False, difficulty="hard"),
                              ep("c", difficulty="hard")]))
    assert (s["successes"], s["tasks"], s["hard_successes"], s["hard_tasks"]) == (2, 3, 1, 2)


@pytest.mark.parametrize("base,variant,printed", [(1.23e6, 0.26e6, "-79%"),
                                                  (1.04e6, 0.53e6, "-49%")])
def test_headline_diffs(base, variant, printed):
    assert _signed(diff(base, variant)) == printed
    t = compare(RunMetrics([ep("a", tokens=int(base))]),
                RunMetrics([ep("a", tokens=int(variant))]))
    assert _signed(t.diffs["tokens"]) == printed


def test_identical_runs_diff_zero():
    run = RunMetrics([ep("a"), ep("b", tokens=3)])
    t = compare(run, run)
    assert all(t.diffs[m] == 0 for m in t.diffs)


def test_zero_base_is_not_applicable():
    assert diff(0, 5) is None
    t = compare(RunMetrics([ep("a", turns=0)]), RunMetrics([ep("a", turns=3)]))
    assert t.diffs["turns"] is None


@pytest.mark.parametrize("a,b", [(100.0, 37.0), (2.0, 9.0), (1.23e6, 0.26e6), (7.0, 7.0)])
def test_diff_antisymmetry(a, b):
    fwd, rev = diff(a, b), diff(b, a)
    assert abs(fwd - (-rev / (1 + rev))) < 1e-12


def test_intersection_rule():
    base = RunMetrics([ep("a", tokens=100), ep("b", tokens=10_000, success=False)])
    variant = RunMetrics([ep("a", tokens=50), ep("b", tokens=1)])
    t = compare(base, variant)
    assert t.intersection == ("a",)
    assert t.base["tokens"] == 100 and t.variant["tokens"] == 50
    assert t.success == (1, 2, 2)


def test_empty_intersection():
    t = compare(RunMetrics([ep("a", success=False)]), RunMetrics([ep("a")]))
    assert t.intersection == ()
    assert all(v is None for v in t.diffs.values())
    assert "n/a" in emit_report(t)


def test_different_task_sets_rejected():
    with pytest.raises(ValueError):
        compare(RunMetrics([ep("a")]), RunMetrics([ep("b")]))


def _table():
    base = RunMetrics([ep("x/e1", tokens=400_000, turns=11, calls=11),
                       ep("x/h1", difficulty="hard", tokens=800_000, turns=27, calls=27)])
    variant = RunMetrics([
        ep("x/e1", tokens=150_000, turns=6, calls=6, attempts=3, successes=3, saved=1,
           invocations=3, mode="skill"),
        ep("x/h1", difficulty="hard", tokens=250_000, turns=9, calls=9, attempts=5,
           successes=5, saved=1, invocations=5, mode="skill")])
    return compare(base, variant, "skill")


GOLDEN_MD = (
    "| " + " | ".join(HEADERS) + " |\n"
    + "|" + "---|" * len(HEADERS) + "\n"
    + "| skill | 100% | 4.0x | 0.60M | 0.20M | -67% | 0.7500 | 0.2500 | -67% "
      "| 19.0 | 7.5 | -61% | 19.0 | 7.5 | -61% | 2/2 (100%) | 2/2 (100%) "
      "| 1/1 (100%) | 1/1 (100%) |\n")


def test_markdown_golden():
    assert emit_report(_table(), "markdown") == GOLDEN_MD


def test_csv_matches_markdown():
    rows = list(csv.reader(io.StringIO(emit_report(_table(), "csv"))))
    assert tuple(rows[0]) == HEADERS
    md_cells = [c.strip() for c in GOLDEN_MD.splitlines()[2].strip("|").split("|")]
    assert rows[1] == md_cells


def test_empty_run_report_is_headers_only():
    empty = compare(RunMetrics(), RunMetrics())
    assert emit_report(empty, "csv") == ",".join(HEADERS) + "\n"
    assert emit_report(empty, "md").count("\n") == 2


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(_table(), "html")


def test_round_trip():
    run = RunMetrics([ep("a", attempts=2, successes=1, saved=1, invocations=2)])
    assert RunMetrics.from_dict(run.to_dict()) == run
