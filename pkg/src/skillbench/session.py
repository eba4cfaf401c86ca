"""One agent-facing session: the skill primitives plus atomic tools over a workspace.

Both the in-process policies and the wire server dispatch through ``Session.handle``,
so a request behaves the same whichever way it arrives.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .library import LibraryError, SkillLibrary, canonical_primitive
from .script import ScriptRuntimeError, ScriptSyntaxError, ToolCallError, evaluate, parse
from .tasks import Task, render_prompt, score
from .tools.fabric import Registry, Workspace, data_response, invoke, oracle

METHODS = ("save_skill", "execute_skill", "list_skills", "get_skill", "call_tool",
           "render_prompt", "score_task")

_TOOL_KINDS = {"unknown_tool": "unknown_tool", "arity_error": "bad_args"}


class RequestError(Exception):
    def __init__(self, kind: str, detail):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail

    def to_dict(self) -> dict:
        return {"kind": self.kind, "detail": self.detail}


def _need(params: dict, key: str, typ, *alts):
    for k in (key, *alts):
        if k in params:
            v = params[k]
            if not isinstance(v, typ):
                raise RequestError("bad_args", f"'{key}' must be a {typ.__name__}")
            return v
    raise RequestError("bad_args", f"missing parameter '{key}'")


@dataclass
class Session:
    registry: Registry
    workspace: Workspace | None = None
    library: SkillLibrary | None = None
    task: Task | None = None
    # skill events produced since the last drain: dicts with op, name, outcome
    events: list = field(default_factory=list)

    def drain_events(self) -> list:
        out, self.events = self.events, []
        return out

    # -- dispatch -----------------------------------------------------------------------
    def handle(self, method: str, params=None):
        """Serve one request. Returns the value or raises RequestError."""
        if params is None:
            params = {}
        if not isinstance(params, dict):
            raise RequestError("bad_args", "params must be an object")
        prim = canonical_primitive(method)
        if prim is not None:
            if self.library is None:
                raise RequestError("unknown_method", f"skill primitives are disabled ({method})")
            return getattr(self, "_" + prim)(params)
        if method == "call_tool":
            return self.call_tool(_need(params, "tool", str), params.get("args", {}))
        if method == "render_prompt":
            return render_prompt(self._task(params))
        if method == "score_task":
            task = self._task(params)
            if self.workspace is None:
                raise RequestError("no_task", "no workspace is attached to this session")
            return score(task, self.workspace.root, oracle(self.registry, task)).to_dict()
        raise RequestError("unknown_method", f"unknown method '{method}'")

    def _task(self, params) -> Task:
        if "task" in params:
            try:
                return Task.from_dict(params["task"])
            except (KeyError, TypeError) as exc:
                raise RequestError("bad_args", f"bad task: {exc}") from None
        if self.task is None:
            raise RequestError("no_task", "no task is attached to this session")
        return self.task

    def call_tool(self, tool: str, args):
        """An atomic tool call from the agent (data or workspace tool)."""
        if canonical_primitive(tool) is not None:
            return self.handle(tool, args)
        try:
            return invoke(self.registry, self.workspace, tool, args)
        except ToolCallError as exc:
            raise RequestError(_TOOL_KINDS.get(exc.kind, "tool_error"), str(exc)) from None

    def data_tool(self, tool: str, kwargs: dict):
        """Dispatcher handed to scripts: data tools only, no workspace access."""
        if tool not in self.registry.data_tools:
            raise ToolCallError(f"unknown tool '{tool}'", kind="unknown_tool")
        return data_response(self.registry, tool, kwargs)

    # -- primitives ---------------------------------------------------------------------
    def _save_skill(self, p):
        name = _need(p, "skill_name", str, "macro_name")
        try:
            msg = self.library.save_skill(name, _need(p, "script_code", str), p.get("parameters", []),
                                          p.get("description", ""))
        except LibraryError as exc:
            self.events.append({"op": "save", "name": name, "outcome": exc.kind})
            raise _lib_error(exc) from None
        self.events.append({"op": "save", "name": name, "outcome": "saved"})
        return msg

    def _execute_skill(self, p):
        name = _need(p, "skill_name", str, "macro_name")
        args = p.get("args", {})
        try:
            out = self.library.execute_skill(name, args, self.data_tool)
        except LibraryError as exc:
            self.events.append({"op": "execute", "name": name, "outcome": exc.kind})
            raise _lib_error(exc) from None
        for nested, status in out.nested:
            self.events.append({"op": "execute", "name": nested, "outcome": status, "nested": True})
        self.events.append({"op": "execute", "name": name, "outcome": out.status})
        return out.to_dict()

    def _list_skills(self, p):
        self.events.append({"op": "list", "name": None, "outcome": "ok"})
        return self.library.list_skills()

    def _get_skill(self, p):
        name = _need(p, "skill_name", str, "macro_name")
        try:
            value = self.library.get_skill(name)
        except LibraryError as exc:
            self.events.append({"op": "get", "name": name, "outcome": exc.kind})
            raise _lib_error(exc) from None
        self.events.append({"op": "get", "name": name, "outcome": "ok"})
        return value

    # -- transient scripts --------------------------------------------------------------
    def exec_script(self, script_code: str) -> dict:
        """Run a one-off script without touching the library."""
        try:
            value = evaluate(parse(script_code), {}, self.data_tool, frame="<exec>")
        except ScriptSyntaxError as exc:
            return {"status": "failed", "result": exc.issue.to_dict()}
        except ScriptRuntimeError as exc:
            return {"status": "failed", "result": exc.issue.to_dict()}
        return {"status": "success", "result": value}


def _lib_error(exc: LibraryError) -> RequestError:
    return RequestError(exc.kind if exc.kind != "library_error" else "bad_args", exc.detail())

