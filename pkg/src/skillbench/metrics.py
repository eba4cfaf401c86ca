"""Per-episode metrics, mode comparison and report rendering."""
from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field

from .accounting import TokenModel, count_tokens

NA = None  # rates and diffs over an empty denominator
EFFICIENCY = ("tokens", "cost", "turns", "tool_calls")

HEADERS = ("Mode", "Exec", "Reuse",
           "Tokens Base", "Tokens Variant", "Tokens Diff",
           "Cost Base", "Cost Variant", "Cost Diff",
           "Turns Base", "Turns Variant", "Turns Diff",
           "Tool Calls Base", "Tool Calls Variant", "Tool Calls Diff",
           "Success Base", "Success Variant", "Hard Base", "Hard Variant")


@dataclass
class EpisodeMetrics:
    task_id: str
    mode: str
    difficulty: str
    success: bool
    score: float
    in_tokens: int
    out_tokens: int
    cost: float
    turns: int
    tool_calls: int
    exec_attempts: int
    exec_successes: int
    skills_saved: int
    skill_invocations: int
    final_status: str | None = None

    def __post_init__(self):
        if self.exec_successes > self.exec_attempts:
            raise ValueError("exec_successes cannot exceed exec_attempts")

    @property
    def tokens(self) -> int:
        return self.in_tokens + self.out_tokens

    @property
    def exec_rate(self):
        return self.exec_successes / self.exec_attempts if self.exec_attempts else NA

    @property
    def reuse_rate(self):
        return self.skill_invocations / self.skills_saved if self.skills_saved else NA

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "EpisodeMetrics":
        return cls(**{k: d[k] for k in cls.__dataclass_fields__})


def episode_metrics(trace, task, report, token_model: TokenModel = TokenModel()) -> EpisodeMetrics:
    """Token totals are recounted from the per-turn byte sizes in the trace."""
    in_tok = sum(count_tokens(t["bytes_in"], token_model) for t in trace.turns)
    out_tok = sum(count_tokens(t["bytes_out"], token_model) for t in trace.turns)
    top = [e for e in trace.skill_events if e["op"] == "execute" and not e.get("nested")]
    saved = len({e["name"] for e in trace.skill_events if e["op"] == "save" and e["outcome"] == "saved"})
    return EpisodeMetrics(
        task_id=task.id, mode=trace.mode, difficulty=task.difficulty,
        success=report.success, score=report.total,
        in_tokens=in_tok, out_tokens=out_tok, cost=token_model.cost(in_tok, out_tok),
        turns=trace.counters.turn_count, tool_calls=trace.counters.tool_call_count,
        exec_attempts=len(top), exec_successes=sum(e["outcome"] == "success" for e in top),
        skills_saved=saved, skill_invocations=len(top), final_status=trace.final_status)


@dataclass
class RunMetrics:
    episodes: list[EpisodeMetrics] = field(default_factory=list)

    def by_task(self) -> dict[str, EpisodeMetrics]:
        return {e.task_id: e for e in self.episodes}

    def to_dict(self) -> dict:
        return {"summary": aggregate(self), "episodes": [e.to_dict() for e in self.episodes]}

    @classmethod
    def from_dict(cls, d: dict) -> "RunMetrics":
        return cls([EpisodeMetrics.from_dict(e) for e in d["episodes"]])


def _ratio(num, den):
    return num / den if den else NA


def aggregate(run: RunMetrics) -> dict:
    eps = run.episodes
    hard = [e for e in eps if e.difficulty == "hard"]
    total = {k: sum(getattr(e, k) for e in eps)
             for k in ("in_tokens", "out_tokens", "cost", "turns", "tool_calls", "exec_attempts",
                       "exec_successes", "skills_saved", "skill_invocations")}
    return {
        "tasks": len(eps),
        "successes": sum(e.success for e in eps),
        "success_rate": _ratio(sum(e.success for e in eps), len(eps)),
        "hard_tasks": len(hard),
        "hard_successes": sum(e.success for e in hard),
        "hard_success_rate": _ratio(sum(e.success for e in hard), len(hard)),
        **total,
        "exec_rate": _ratio(total["exec_successes"], total["exec_attempts"]),
        "reuse_rate": _ratio(total["skill_invocations"], total["skills_saved"]),
    }


def diff(base, variant):
    """(variant - base) / base; NA when base is zero or either side is missing."""
    if base is None or variant is None or base == 0:
        return NA
    return (variant - base) / base


@dataclass
class ComparisonTable:
    label: str
    intersection: tuple[str, ...]
    base: dict  # efficiency metric -> mean over intersection
    variant: dict
    diffs: dict
    exec_rate: float | None
    reuse_rate: float | None
    success: tuple  # (base successes, variant successes, tasks)
    hard: tuple

    def to_dict(self) -> dict:
        return asdict(self)

    def row(self) -> dict:
        r = {"label": self.label, "exec": self.exec_rate, "reuse": self.reuse_rate}
        for m in EFFICIENCY:
            r[f"{m}_base"], r[f"{m}_variant"], r[f"{m}_diff"] = self.base[m], self.variant[m], self.diffs[m]
        r["success_base"] = (self.success[0], self.success[2])
        r["success_variant"] = (self.success[1], self.success[2])
        r["hard_base"] = (self.hard[0], self.hard[2])
        r["hard_variant"] = (self.hard[1], self.hard[2])
        return r


def _mean(values):
    values = list(values)
    return sum(values) / len(values) if values else NA


def compare(base: RunMetrics, variant: RunMetrics, label: str = "variant") -> ComparisonTable:
    """Efficiency means over tasks both runs solved; success counted over all tasks."""
    b, v = base.by_task(), variant.by_task()
    if set(b) != set(v):
        raise ValueError("base and variant runs cover different tasks")
    both = tuple(t for t in b if b[t].success and v[t].success)
    bm = {m: _mean(getattr(b[t], m) for t in both) for m in EFFICIENCY}
    vm = {m: _mean(getattr(v[t], m) for t in both) for m in EFFICIENCY}
    va = aggregate(variant)
    hard = [t for t in b if b[t].difficulty == "hard"]
    return ComparisonTable(
        label=label, intersection=both, base=bm, variant=vm,
        diffs={m: diff(bm[m], vm[m]) for m in EFFICIENCY},
        exec_rate=va["exec_rate"], reuse_rate=va["reuse_rate"],
        success=(sum(b[t].success for t in b), sum(v[t].success for t in v), len(b)),
        hard=(sum(b[t].success for t in hard), sum(v[t].success for t in hard), len(hard)),
    )


# -- rendering ----------------------------------------------------------------------

def _pct(x) -> str:
    return "n/a" if x is None else f"{x * 100:.0f}%"


def _signed(x) -> str:
    return "n/a" if x is None else f"{x * 100:+.0f}%"


def _tokens(x) -> str:
    return "n/a" if x is None else f"{x / 1e6:.2f}M" if x >= 1e5 else f"{x / 1e3:.1f}K"


def _plain(x, digits) -> str:
    return "n/a" if x is None else f"{x:.{digits}f}"


def _frac(pair) -> str:
    k, n = pair
    return f"{k}/{n} ({_pct(k / n if n else None)})"


def format_row(row: dict) -> list[str]:
    out = [row["label"], _pct(row["exec"]),
           "n/a" if row["reuse"] is None else f"{row['reuse']:.1f}x"]
    for m, fmt in (("tokens", _tokens), ("cost", lambda x: _plain(x, 4)),
                   ("turns", lambda x: _plain(x, 1)), ("tool_calls", lambda x: _plain(x, 1))):
        out += [fmt(row[f"{m}_base"]), fmt(row[f"{m}_variant"]), _signed(row[f"{m}_diff"])]
    out += [_frac(row[k]) for k in ("success_base", "success_variant", "hard_base", "hard_variant")]
    return out


def emit_report(tables, fmt: str = "markdown") -> str:
    """One row per comparison, columns in the fixed order of HEADERS.

    Comparisons over an empty run contribute no row.
    """
    if isinstance(tables, ComparisonTable):
        tables = [tables]
    rows = [format_row(t.row()) for t in tables if t.success[2]]
    if fmt in ("markdown", "md"):
        lines = ["| " + " | ".join(HEADERS) + " |", "|" + "---|" * len(HEADERS)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(HEADERS)
        w.writerows(rows)
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
