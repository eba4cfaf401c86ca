from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

RUNTIME_KINDS = frozenset({
    "type_error", "unknown_name", "unknown_tool", "arity_error",
    "budget_exceeded", "depth_exceeded", "tool_failure",
})


@dataclass(frozen=True)
class SyntaxIssue:
    line: int
    message: str
    context_snippet: str

    def to_dict(self) -> dict:
        return {"stage": "syntax", "line": self.line, "message": self.message,
                "context": self.context_snippet}


@dataclass(frozen=True)
class TraceEntry:
    skill: str
    line: int
    statement: str

    def to_dict(self) -> dict:
        return {"skill": self.skill, "line": self.line, "statement": self.statement}


@dataclass(frozen=True)
class RuntimeIssue:
    kind: str
    message: str
    line: int
    trace: tuple[TraceEntry, ...] = ()
    inputs: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in RUNTIME_KINDS:
            raise ValueError(f"unknown runtime issue kind {self.kind!r}")

    @property
    def frames(self) -> list[str]:
        """Distinct skill frames in the order the error passed through them."""
        seen: list[str] = []
        for entry in self.trace:
            if entry.skill not in seen:
                seen.append(entry.skill)
        return seen

    def to_dict(self) -> dict:
        return {"stage": "runtime", "kind": self.kind, "message": self.message,
                "line": self.line, "trace": [t.to_dict() for t in self.trace],
                "inputs": self.inputs}


class ScriptSyntaxError(Exception):
    def __init__(self, issue: SyntaxIssue):
        super().__init__(f"line {issue.line}: {issue.message}")
        self.issue = issue


class ScriptRuntimeError(Exception):
    def __init__(self, issue: RuntimeIssue):
        super().__init__(f"{issue.kind} at line {issue.line}: {issue.message}")
        self.issue = issue


class ToolCallError(Exception):
    """Raised by a dispatcher when a tool call cannot be served.

    ``kind`` is one of unknown_tool, arity_error or tool_failure and is carried
    into the RuntimeIssue when the call happened inside a script.
    """

    kind = "tool_failure"

    def __init__(self, message: str, kind: str | None = None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind
