"""The 126-task suite: generation, prompts, cross-task summaries and rubric scoring."""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from pathlib import Path

from .tools.fabric import WORKSPACE_SPECS, WORKSPACE_TOOLS, get_family, prf
from .tools.families import FAMILY_SLUGS
from .values import is_number, values_equal

LEVELS = ("e1", "e2", "e3", "m1", "m2", "h1")
# level -> (entity count N, calls per entity M)
SHAPES = {"e1": (3, 3), "e2": (3, 3), "e3": (3, 3), "m1": (4, 4), "m2": (4, 4), "h1": (5, 5)}
DIFFICULTY = {"e": "easy", "m": "medium", "h": "hard"}
# levels that use the family's headline entities; the others are sampled
HEADLINE_LEVELS = ("e1", "m1", "h1")

RUBRIC = (("file_exists", 10), ("json_valid", 10), ("completeness", 30), ("field_accuracy", 50))
SUCCESS_THRESHOLD = 90
NUMBER_TOLERANCE = 1e-9


def difficulty(level: str) -> str:
    return DIFFICULTY[level[0]]


@dataclass(frozen=True)
class Rubric:
    criteria: tuple = RUBRIC
    success_threshold: float = 0.9

    def __post_init__(self):
        if sum(w for _, w in self.criteria) != 100:
            raise ValueError("rubric weights must sum to 100")


@dataclass(frozen=True)
class Task:
    id: str
    family: str
    level: str
    entities: tuple[str, ...]
    required_tools: tuple[str, ...]
    output_file: str

    @property
    def n(self) -> int:
        return len(self.entities)

    @property
    def m(self) -> int:
        return len(self.required_tools)

    @property
    def difficulty(self) -> str:
        return difficulty(self.level)

    @property
    def rubric(self) -> Rubric:
        return Rubric()

    @property
    def prompt(self) -> str:
        return render_prompt(self)

    def to_dict(self) -> dict:
        return {"id": self.id, "family": self.family, "level": self.level,
                "entities": list(self.entities), "required_tools": list(self.required_tools),
                "output_file": self.output_file}

    @classmethod
    def from_dict(cls, d: dict) -> "Task":
        return cls(d["id"], d["family"], d["level"], tuple(d["entities"]),
                   tuple(d["required_tools"]), d["output_file"])

    def with_entities(self, entities) -> "Task":
        return Task(self.id, self.family, self.level, tuple(entities), self.required_tools,
                    self.output_file)


def make_task(family: str, level: str, entities, required_tools=None) -> Task:
    fam = get_family(family)
    n, m = SHAPES[level]
    tools = tuple(required_tools) if required_tools is not None else tuple(fam.tool_names[:m])
    return Task(f"{family}/{level}", family, level, tuple(entities), tools, fam.output_file)


def generate_suite(families=None, seed: int = 0) -> list[Task]:
    """Six tasks per family. Headline levels take the family's first N entities;
    e2, e3 and m2 draw distinct entity sets from the pool using ``seed``."""
    families = list(FAMILY_SLUGS if families is None else families)
    tasks = []
    for slug in families:
        fam = get_family(slug)
        rng = random.Random(prf(seed, slug, "suite", {}))
        used: dict[int, list[frozenset]] = {}
        chosen = {}
        for level in LEVELS:
            n, _ = SHAPES[level]
            if level in HEADLINE_LEVELS:
                picked = list(fam.entities[:n])
            else:
                while True:
                    picked = rng.sample(fam.entities, n)
                    if frozenset(picked) not in used.get(n, []):
                        break
            used.setdefault(n, []).append(frozenset(picked))
            chosen[level] = picked
        tasks.extend(make_task(slug, level, chosen[level]) for level in LEVELS)
    return tasks


def write_manifest(tasks, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"tasks": [t.to_dict() for t in tasks]}, ensure_ascii=False, indent=1)
                    + "\n", encoding="utf-8")
    return path


def load_manifest(path) -> list[Task]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [Task.from_dict(d) for d in data["tasks"]]


# -- prompts ------------------------------------------------------------------------

def _field_list(names) -> str:
    return "{" + ", ".join(names) + "}"


def render_prompt(task: Task) -> str:
    fam = get_family(task.family)
    n, m = task.n, task.m
    names = ", ".join(task.entities)
    lines = [f"Task: {task.id} [{task.difficulty.capitalize()}]", ""]
    steps = "; ".join(f"({i}) {fam.tool(t).title} - {fam.tool(t).description}"
                      for i, t in enumerate(task.required_tools, 1))
    para = [fam.objective.format(n=n, m=m, names=names),
            f"For each {fam.noun}, collect: {steps}."]
    metrics = fam.active_metrics(task.required_tools)
    bands = fam.active_bands(task.required_tools)
    for metric in metrics:
        para.append(f"Calculate {metric.label}, rounded half-up to {metric.digits} decimal place(s).")
    for band in bands:
        para.append(f"Determine {band.label}.")
    para.append(f"Save results to {task.output_file}.")
    lines.append(" ".join(para))
    lines += ["", "Output schema:",
              f"A JSON object keyed by {fam.noun} name. Each value is an object with these keys:"]
    for t in task.required_tools:
        lines.append(f"- {t}: {_field_list(fam.tool(t).field_names)}")
    for metric in metrics:
        lines.append(f"- {metric.name}: number, or null when an input is missing")
    for band in bands:
        lines.append(f"- {band.name}: string, or null when an input is missing")
    lines += ["", "Available tools:"]
    for t in task.required_tools:
        lines.append(f"- {fam.tool(t).signature()}: {fam.tool(t).description}")
    for name in WORKSPACE_TOOLS:
        desc, params = WORKSPACE_SPECS[name]
        lines.append(f"- {name}(" + ", ".join(p for p, _ in params) + f"): {desc}")
    lines += ["", f"Scale: {n} subtasks x {m} API calls = {n * m} total calls"]
    return "\n".join(lines) + "\n"


def inject_cross_summary(prompt: str, lib) -> str:
    """Append the cross-task skill summary for an inherited library."""
    lines = ["", "Cross-task skills summary:"]
    if not lib.entries:
        lines.append("No skills available.")
    for e in lib.entries.values():
        lines.append(f"- {e.signature()}: {e.description} "
                     f"[{e.success_count} successes, {e.failure_count} failures]")
    return prompt + "\n".join(lines) + "\n"


# -- scoring ------------------------------------------------------------------------

@dataclass(frozen=True)
class ScoreReport:
    per_criterion: tuple[tuple[str, float, float], ...]
    total: float

    @property
    def success(self) -> bool:
        return self.total >= SUCCESS_THRESHOLD

    def earned(self, kind: str) -> float:
        return next(e for k, e, _ in self.per_criterion if k == kind)

    def to_dict(self) -> dict:
        return {"per_criterion": [{"kind": k, "earned": e, "max": m} for k, e, m in self.per_criterion],
                "total": self.total, "success": self.success}


def leaf_matches(expected, actual) -> bool:
    if is_number(expected) and is_number(actual):
        return math.isclose(expected, actual, rel_tol=0.0, abs_tol=NUMBER_TOLERANCE)
    return values_equal(expected, actual)


def _count(expected, actual) -> tuple[int, int]:
    """(matching leaves, total oracle leaves); empty containers count as one leaf."""
    if isinstance(expected, dict) and expected:
        matched = total = 0
        for k, v in expected.items():
            sub = actual.get(k, _MISSING) if isinstance(actual, dict) else _MISSING
            mk, tk = _count(v, sub)
            matched, total = matched + mk, total + tk
        return matched, total
    if isinstance(expected, list) and expected:
        matched = total = 0
        for i, v in enumerate(expected):
            sub = actual[i] if isinstance(actual, list) and i < len(actual) else _MISSING
            mk, tk = _count(v, sub)
            matched, total = matched + mk, total + tk
        return matched, total
    if actual is _MISSING:
        return 0, 1
    return int(leaf_matches(expected, actual)), 1


_MISSING = object()


def score(task: Task, workspace, oracle_record) -> ScoreReport:
    """Partial-credit rubric. ``workspace`` is a Workspace or its root directory."""
    root = Path(getattr(workspace, "root", workspace))
    path = root / task.output_file
    exists = path.is_file()
    data, valid = None, False
    if exists:
        try:
            data = json.loads(path.read_bytes().decode("utf-8"))
            valid = True
        except (UnicodeDecodeError, json.JSONDecodeError):
            valid = False
    completeness = accuracy = 0.0
    if valid:
        if task.n:
            present = sum(1 for e in task.entities if isinstance(data, dict) and isinstance(data.get(e), dict))
            completeness = 30 * present / task.n
        else:
            completeness = 30.0
        matched, total = _count(oracle_record, data)
        accuracy = 50 * matched / total
    per = (("file_exists", 10.0 if exists else 0.0, 10.0),
           ("json_valid", 10.0 if valid else 0.0, 10.0),
           ("completeness", completeness, 30.0),
           ("field_accuracy", accuracy, 50.0))
    return ScoreReport(per, sum(e for _, e, _ in per))
