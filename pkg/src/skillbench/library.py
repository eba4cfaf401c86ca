"""The skill library: four primitives over a persisted cache, guarded by the coding verifier."""
from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from pathlib import Path

from .script import (
    DEFAULT_BUDGET,
    Evaluator,
    RuntimeIssue,
    ScriptRuntimeError,
    ScriptSyntaxError,
    SyntaxIssue,
    ToolCallError,
    TraceEntry,
    free_variables,
    parse,
)
from .values import deep_copy, is_number, normalize

SKILL_PRIMITIVES = ("save_skill", "execute_skill", "list_skills", "get_skill")
ALIASES = {
    "save_macro": "save_skill",
    "execute_macro": "execute_skill",
    "list_macros": "list_skills",
    "get_macro": "get_skill",
}
DEFAULT_NESTING_LIMIT = 10
QUALITY_THRESHOLD = 0.5
EMPTY_STRINGS = ("unknown", "none")


def canonical_primitive(name: str) -> str | None:
    """Map a primitive or its macro alias to the skill_* name; None for anything else."""
    if name in SKILL_PRIMITIVES:
        return name
    return ALIASES.get(name)


# -- errors -------------------------------------------------------------------------

class LibraryError(Exception):
    kind = "library_error"

    def detail(self):
        return str(self)


class UnknownSkill(LibraryError):
    kind = "unknown_skill"


class LockedLibrary(LibraryError):
    kind = "locked"


class ParameterMismatch(LibraryError):
    kind = "parameter_mismatch"

    def __init__(self, missing: list[str]):
        super().__init__("parameters do not cover free variables; missing: " + ", ".join(missing))
        self.missing = missing

    def detail(self):
        return {"message": str(self), "missing": self.missing}


class VerifierRejected(LibraryError):
    kind = "verifier"

    def __init__(self, report: "VerifierReport"):
        super().__init__(f"Skill save failed at {report.stage} stage")
        self.report = report

    def detail(self):
        return self.report.to_dict()


class CacheError(LibraryError):
    kind = "malformed_cache"


# -- verifier -----------------------------------------------------------------------

@dataclass(frozen=True)
class QualityFinding:
    total_leaves: int
    empty_leaves: int
    flagged_paths: tuple[str, ...] = ()

    @property
    def ratio(self) -> float:
        return self.empty_leaves / self.total_leaves if self.total_leaves else 0.0

    @property
    def passed(self) -> bool:
        return self.ratio <= QUALITY_THRESHOLD

    def to_dict(self) -> dict:
        return {"stage": "quality", "total_leaves": self.total_leaves,
                "empty_leaves": self.empty_leaves, "ratio": self.ratio,
                "flagged_paths": list(self.flagged_paths)}


@dataclass(frozen=True)
class VerifierReport:
    stage: str  # syntax | runtime | quality
    passed: bool
    detail: object  # SyntaxIssue | RuntimeIssue | QualityFinding

    def __post_init__(self):
        if self.stage == "quality" and not isinstance(self.detail, QualityFinding):
            raise TypeError("a quality report must carry a QualityFinding")

    def to_dict(self) -> dict:
        return {"stage": self.stage, "passed": self.passed, "detail": self.detail.to_dict()}


def is_empty_leaf(x) -> bool:
    if x is None:
        return True
    if is_number(x):
        return x == 0
    if isinstance(x, str):
        return x.lower() in EMPTY_STRINGS
    if isinstance(x, (list, dict)):
        return len(x) == 0
    return False


def _leaves(x, path: str, out: list):
    if isinstance(x, dict) and x:
        for k, v in x.items():
            _leaves(v, f"{path}.{k}", out)
    elif isinstance(x, list) and x:
        for i, v in enumerate(x):
            _leaves(v, f"{path}[{i}]", out)
    else:
        out.append((path, x))


def leaves(value) -> list[tuple[str, object]]:
    """(path, leaf) pairs; empty containers count as one leaf."""
    out: list = []
    _leaves(value, "$", out)
    return out


def quality_check(value) -> QualityFinding:
    flat = leaves(value)
    flagged = tuple(p for p, v in flat if is_empty_leaf(v))
    return QualityFinding(len(flat), len(flagged), flagged)


# -- entries and outcomes -----------------------------------------------------------

@dataclass
class SkillEntry:
    name: str
    script: str
    parameters: list[str]
    description: str = ""
    version: int = 1
    success_count: int = 0
    failure_count: int = 0

    def to_dict(self) -> dict:
        return {"script_code": self.script, "parameters": list(self.parameters),
                "description": self.description, "version": self.version,
                "execution_stats": {"success_count": self.success_count,
                                    "failure_count": self.failure_count}}

    def signature(self) -> str:
        return f"{self.name}(" + ", ".join(self.parameters) + ")"


@dataclass
class ExecutionOutcome:
    status: str  # success | failed
    result: object
    depth_used: int
    report: VerifierReport | None = None
    # every nested execution as (skill, status), innermost first
    nested: list = field(default_factory=list)
    result_line: int | None = None
    result_summary: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "success"

    def to_dict(self) -> dict:
        return {"status": self.status, "result": self.result, "depth_used": self.depth_used}


def _failed(result, depth_used, report=None, nested=None) -> ExecutionOutcome:
    return ExecutionOutcome("failed", result, depth_used, report, nested or [])


# -- the library --------------------------------------------------------------------

class SkillLibrary:
    """Name -> SkillEntry map persisted to ``cache_path`` after every mutation.

    ``hierarchical`` lets scripts call ``execute_skill`` through call_tool, each
    level one deeper, up to ``nesting_limit`` levels. A ``locked`` library rejects
    saves and leaves execution statistics untouched.
    """

    def __init__(self, cache_path=None, *, locked: bool = False, hierarchical: bool = False,
                 nesting_limit: int = DEFAULT_NESTING_LIMIT, budget: int = DEFAULT_BUDGET):
        if nesting_limit < 0:
            raise ValueError("nesting_limit must be non-negative")
        self.cache_path = Path(cache_path) if cache_path is not None else None
        self.locked = locked
        self.hierarchical = hierarchical
        self.nesting_limit = nesting_limit
        self.budget = budget
        self.entries: dict[str, SkillEntry] = {}
        self._lock = threading.RLock()

    # -- primitives -------------------------------------------------------------------
    def save_skill(self, name: str, script: str, parameters, description: str = "") -> str:
        with self._lock:
            if self.locked:
                raise LockedLibrary("skill library is locked: cannot create new skills")
            if not isinstance(name, str) or not name.strip():
                raise LibraryError("skill name must be a non-empty string")
            if not isinstance(script, str):
                raise LibraryError("script_code must be a string")
            if not isinstance(parameters, list) or not all(isinstance(p, str) for p in parameters):
                raise LibraryError("parameters must be a list of strings")
            if len(set(parameters)) != len(parameters):
                raise LibraryError("parameters must be distinct")
            try:
                ast = parse(script)
            except ScriptSyntaxError as exc:
                raise VerifierRejected(VerifierReport("syntax", False, exc.issue)) from None
            missing = sorted(free_variables(ast) - set(parameters))
            if missing:
                raise ParameterMismatch(missing)
            prev = self.entries.get(name)
            entry = SkillEntry(name, script, list(parameters), description or "",
                               prev.version + 1 if prev else 1)
            if prev:
                entry.success_count, entry.failure_count = prev.success_count, prev.failure_count
            self.entries[name] = entry
            self.persist()
            return f"Skill '{name}' saved successfully."

    def execute_skill(self, name: str, args, dispatcher, depth: int = 0) -> ExecutionOutcome:
        if depth < 0:
            raise ValueError("depth must be non-negative")
        with self._lock:
            if name not in self.entries:
                raise UnknownSkill(f"unknown skill '{name}'")
            events: list = []
            outcome = self._execute(name, args, dispatcher, depth, events)
            outcome.nested = events
            if not self.locked:
                self.persist()
            return outcome

    def list_skills(self) -> str:
        with self._lock:
            return "\n".join(f"Skill {i}: {e.name} -- {e.description}"
                             for i, e in enumerate(self.entries.values(), 1))

    def get_skill(self, name: str) -> dict:
        with self._lock:
            e = self.entries.get(name)
            if e is None:
                raise UnknownSkill(f"unknown skill '{name}'")
            return {"script_code": e.script, "parameters": list(e.parameters), "version": e.version}

    # -- execution ----------------------------------------------------------------------
    def _count(self, entry: SkillEntry, ok: bool):
        if self.locked:
            return
        if ok:
            entry.success_count += 1
        else:
            entry.failure_count += 1

    def _execute(self, name, args, dispatcher, depth, events) -> ExecutionOutcome:
        """Run ``name`` at level depth+1. Appends nested executions to ``events``."""
        entry = self.entries[name]
        level = depth + 1
        inputs = deep_copy(args) if isinstance(args, dict) else {}
        if level > self.nesting_limit:
            self._count(entry, False)
            issue = RuntimeIssue("depth_exceeded",
                                 f"skill '{name}' would run at nesting level {level}, "
                                 f"limit is {self.nesting_limit}", 1, (), inputs)
            return _failed(issue.to_dict(), depth, VerifierReport("runtime", False, issue))
        if not isinstance(args, dict) or set(args) != set(entry.parameters):
            got = sorted(args) if isinstance(args, dict) else []
            issue = RuntimeIssue("arity_error",
                                 f"{entry.signature()} called with arguments {got}", 1, (), inputs)
            self._count(entry, False)
            return _failed(issue.to_dict(), level, VerifierReport("runtime", False, issue))
        try:
            ast = parse(entry.script)
        except ScriptSyntaxError as exc:
            self._count(entry, False)
            return _failed(exc.issue.to_dict(), level, VerifierReport("syntax", False, exc.issue))

        state = {"max_level": level, "last_return": None}
        routed = self._router(dispatcher, level, events, state)
        ev = Evaluator(ast, normalize(args), routed, self.budget, frame=name)
        try:
            value = ev.run()
        except ScriptRuntimeError as exc:
            issue = exc.issue
            last = state["last_return"]
            if last is not None and issue.trace and issue.trace[-1].skill == name:
                # the failure happened in this frame while consuming a nested result:
                # name the lower skill that produced it
                low, line, summary = last
                issue = RuntimeIssue(issue.kind, issue.message, issue.line,
                                     issue.trace + (TraceEntry(low, line, f"returned by {summary}"),),
                                     issue.inputs)
            self._count(entry, False)
            return _failed(issue.to_dict(), state["max_level"], VerifierReport("runtime", False, issue))

        if depth == 0:
            finding = quality_check(value)
            if not finding.passed:
                self._count(entry, False)
                return _failed(finding.to_dict(), state["max_level"],
                               VerifierReport("quality", False, finding))
        self._count(entry, True)
        return ExecutionOutcome("success", value, state["max_level"],
                                result_line=ev.result_line, result_summary=ev.result_summary)

    def _router(self, dispatcher, level, events, state):
        def route(tool: str, kwargs: dict):
            prim = canonical_primitive(tool)
            if prim is None:
                return dispatcher(tool, kwargs)
            if not self.hierarchical or prim != "execute_skill":
                raise ToolCallError(f"skill tools cannot be called inside skills ('{tool}')",
                                    kind="unknown_tool")
            nested = kwargs.get("skill_name", kwargs.get("macro_name"))
            nargs = kwargs.get("args", {})
            if not isinstance(nested, str) or nested not in self.entries:
                raise ToolCallError(f"unknown skill {nested!r}", kind="unknown_tool")
            out = self._execute(nested, nargs, dispatcher, level, events)
            events.append((nested, out.status))
            state["max_level"] = max(state["max_level"], out.depth_used)
            if out.ok:
                state["last_return"] = (nested, out.result_line or 1, out.result_summary)
                return out.result
            issue = out.report.detail if out.report else None
            if isinstance(issue, RuntimeIssue):
                raise ScriptRuntimeError(issue)
            if isinstance(issue, SyntaxIssue):
                raise ToolCallError(f"nested skill '{nested}' has a syntax error at line "
                                    f"{issue.line}: {issue.message}", kind="tool_failure")
            raise ToolCallError(f"nested skill '{nested}' failed", kind="tool_failure")
        return route

    # -- persistence ----------------------------------------------------------------------
    def to_dict(self) -> dict:
        return {"skills": {n: e.to_dict() for n, e in self.entries.items()}}

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def persist(self):
        if self.cache_path is None:
            return
        self.cache_path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.cache_path.parent, prefix=".skill_cache.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(self.serialize())
            os.replace(tmp, self.cache_path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, cache_path, **kwargs) -> "SkillLibrary":
        """Load a cache file (missing file = empty library). Schema is checked, scripts are not."""
        lib = cls(cache_path, **kwargs)
        path = Path(cache_path)
        if not path.exists():
            return lib
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise CacheError(f"{path}: not valid JSON ({exc})") from None
        lib.entries = _entries_from(data, path)
        return lib

    @classmethod
    def from_dict(cls, data: dict, **kwargs) -> "SkillLibrary":
        lib = cls(**kwargs)
        lib.entries = _entries_from(data, "<memory>")
        return lib


def _entries_from(data, path) -> dict[str, SkillEntry]:
    def bad(where, what):
        raise CacheError(f"{path}: {where}: {what}")

    if not isinstance(data, dict) or not isinstance(data.get("skills"), dict):
        bad("skills", "expected an object")
    out = {}
    for name, raw in data["skills"].items():
        where = f"skills.{name}"
        if not isinstance(raw, dict):
            bad(where, "expected an object")
        if not isinstance(raw.get("script_code"), str):
            bad(f"{where}.script_code", "expected a string")
        params = raw.get("parameters")
        if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
            bad(f"{where}.parameters", "expected a list of strings")
        if not isinstance(raw.get("description"), str):
            bad(f"{where}.description", "expected a string")
        version = raw.get("version")
        if not isinstance(version, int) or isinstance(version, bool) or version < 1:
            bad(f"{where}.version", "expected an integer >= 1")
        stats = raw.get("execution_stats")
        if not isinstance(stats, dict):
            bad(f"{where}.execution_stats", "expected an object")
        for key in ("success_count", "failure_count"):
            v = stats.get(key)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                bad(f"{where}.execution_stats.{key}", "expected an integer >= 0")
        out[name] = SkillEntry(name, raw["script_code"], list(params), raw["description"], version,
                               stats["success_count"], stats["failure_count"])
    return out
