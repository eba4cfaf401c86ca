"""Budgeted tree-walking evaluator for skill scripts."""
from __future__ import annotations

import math
from typing import Callable

from ..values import deep_copy, is_number, normalize, type_name, values_equal
from . import ast as A
from .builtins import BuiltinError, call_builtin
from .errors import RuntimeIssue, ScriptRuntimeError, ToolCallError, TraceEntry
from .render import summarize

DEFAULT_BUDGET = 100_000
RESULT = "result"

Dispatcher = Callable[[str, dict], object]


def no_tools(tool: str, args: dict):
    raise ToolCallError(f"unknown tool '{tool}'", kind="unknown_tool")


def truthy(x) -> bool:
    if x is None:
        return False
    if isinstance(x, bool):
        return x
    if is_number(x):
        return x != 0
    return len(x) > 0


class _Unbound:
    pass


class Evaluator:
    """Runs one script once. Use :func:`evaluate` unless you need ``result_line``/``steps``."""

    def __init__(self, script: A.Script, bindings: dict, dispatcher: Dispatcher = no_tools,
                 budget: int = DEFAULT_BUDGET, frame: str = "<script>"):
        if budget <= 0:
            raise ValueError("budget must be positive")
        self.script = script
        self.inputs = deep_copy(dict(bindings))
        self.env = deep_copy(dict(bindings))
        self.dispatcher = dispatcher
        self.budget = budget
        self.frame = frame
        self.steps = 0
        self.stack: list = []
        self.result_line: int | None = None
        self.result_summary = ""

    # -- failure plumbing ----------------------------------------------------------
    def _trace(self) -> tuple[TraceEntry, ...]:
        return tuple(TraceEntry(self.frame, s.line, summarize(s)) for s in self.stack)

    def fail(self, kind: str, message: str):
        line = self.stack[-1].line if self.stack else 1
        raise ScriptRuntimeError(RuntimeIssue(kind, message, line, self._trace(), self.inputs))

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            self.fail("budget_exceeded", f"step budget of {self.budget} exhausted")

    # -- statements ------------------------------------------------------------------
    def run(self):
        stmts = self.script.statements
        self.exec_block(stmts)
        if RESULT not in self.env:
            self.stack = [stmts[-1]] if stmts else []
            self.fail("unknown_name", "script finished without assigning 'result'")
        return self.env[RESULT]

    def exec_block(self, stmts):
        for s in stmts:
            self.exec_stmt(s)

    def exec_stmt(self, s):
        self.stack.append(s)
        try:
            self.tick()
            if isinstance(s, A.Assign):
                self.assign(s.target, self.eval(s.value))
                if isinstance(s.target, A.Name) and s.target.id == RESULT:
                    self.result_line = s.line
                    self.result_summary = summarize(s)
            elif isinstance(s, A.ExprStmt):
                self.eval(s.expr)
            elif isinstance(s, A.If):
                if truthy(self.eval(s.cond)):
                    self.exec_block(s.then)
                elif s.orelse is not None:
                    self.exec_block(s.orelse)
            elif isinstance(s, A.For):
                coll = self.eval(s.iterable)
                if isinstance(coll, list):
                    items = list(coll)
                elif isinstance(coll, dict):
                    items = list(coll.keys())
                else:
                    self.fail("type_error", f"cannot iterate over {type_name(coll)}")
                for item in items:
                    self.env[s.var] = item
                    self.exec_block(s.body)
        finally:
            self.stack.pop()

    def assign(self, target, value):
        if isinstance(target, A.Name):
            self.env[target.id] = value
            return
        container = self.eval(target.obj)
        if isinstance(target, A.Field):
            if not isinstance(container, dict):
                self.fail("type_error", f"cannot set field '{target.name}' on {type_name(container)}")
            container[target.name] = value
            return
        key = self.eval(target.index)
        if isinstance(container, dict):
            if not isinstance(key, str):
                self.fail("type_error", f"record keys must be strings, got {type_name(key)}")
            container[key] = value
        elif isinstance(container, list):
            container[self._list_index(container, key)] = value
        else:
            self.fail("type_error", f"cannot index-assign into {type_name(container)}")

    # -- expressions -----------------------------------------------------------------
    def eval(self, e):
        self.tick()
        if isinstance(e, A.Literal):
            return e.value
        if isinstance(e, A.Name):
            value = self.env.get(e.id, _Unbound)
            if value is _Unbound:
                self.fail("unknown_name", f"name '{e.id}' is not defined")
            return value
        if isinstance(e, A.ListLit):
            return [self.eval(i) for i in e.items]
        if isinstance(e, A.RecordLit):
            return {k: self.eval(v) for k, v in e.items}
        if isinstance(e, A.Field):
            obj = self.eval(e.obj)
            if not isinstance(obj, dict):
                self.fail("type_error", f"cannot read field '{e.name}' of {type_name(obj)}")
            if e.name not in obj:
                self.fail("type_error", f"record has no field '{e.name}'")
            return obj[e.name]
        if isinstance(e, A.Index):
            return self.index(self.eval(e.obj), self.eval(e.index))
        if isinstance(e, A.Unary):
            v = self.eval(e.operand)
            if e.op == "not":
                return not truthy(v)
            if not is_number(v):
                self.fail("type_error", f"bad operand type for unary -: {type_name(v)}")
            return -v
        if isinstance(e, A.Binary):
            return self.binary(e)
        if isinstance(e, A.Call):
            return self.call(e)
        raise TypeError(f"unknown node {e!r}")

    def _list_index(self, items: list, key) -> int:
        if not is_number(key) or int(key) != key:
            self.fail("type_error", f"list index must be an integer, got {type_name(key)}")
        i = int(key)
        if not -len(items) <= i < len(items):
            self.fail("type_error", f"list index {i} out of range (length {len(items)})")
        return i

    def index(self, obj, key):
        if isinstance(obj, list):
            return obj[self._list_index(obj, key)]
        if isinstance(obj, dict):
            if not isinstance(key, str):
                self.fail("type_error", f"record keys must be strings, got {type_name(key)}")
            if key not in obj:
                self.fail("type_error", f"record has no field '{key}'")
            return obj[key]
        if isinstance(obj, str):
            return obj[self._list_index(list(obj), key)]
        self.fail("type_error", f"cannot index {type_name(obj)}")

    def binary(self, e):
        op = e.op
        if op == "and":
            left = self.eval(e.left)
            return self.eval(e.right) if truthy(left) else left
        if op == "or":
            left = self.eval(e.left)
            return left if truthy(left) else self.eval(e.right)
        a, b = self.eval(e.left), self.eval(e.right)
        if op == "==":
            return values_equal(a, b)
        if op == "!=":
            return not values_equal(a, b)
        if op in ("<", "<=", ">", ">="):
            if not ((is_number(a) and is_number(b)) or (isinstance(a, str) and isinstance(b, str))):
                self.fail("type_error", f"cannot compare {type_name(a)} and {type_name(b)} with {op}")
            return {"<": a < b, "<=": a <= b, ">": a > b, ">=": a >= b}[op]
        if op == "+":
            if isinstance(a, str) and isinstance(b, str):
                return a + b
            if isinstance(a, list) and isinstance(b, list):
                return a + b
        if not (is_number(a) and is_number(b)):
            self.fail("type_error",
                      f"unsupported operand types for {op}: {type_name(a)} and {type_name(b)}")
        if op in ("/", "%") and b == 0:
            self.fail("type_error", "division by zero")
        out = {"+": lambda: a + b, "-": lambda: a - b, "*": lambda: a * b,
               "/": lambda: a / b, "%": lambda: a % b}[op]()
        if isinstance(out, float) and not math.isfinite(out):
            self.fail("type_error", f"numeric overflow in {op}")
        return normalize(out)

    def call(self, e):
        if e.func != "call_tool":
            args = [self.eval(a) for a in e.args]
            try:
                return call_builtin(e.func, args)
            except BuiltinError as exc:
                self.fail(exc.kind, str(exc))
        tool = self.eval(e.args[0])
        if not isinstance(tool, str):
            self.fail("type_error", f"tool name must be a string, got {type_name(tool)}")
        kwargs = {k: self.eval(v) for k, v in e.kwargs}
        try:
            out = self.dispatcher(tool, deep_copy(kwargs))
        except ScriptRuntimeError as nested:
            inner = nested.issue
            line = self.stack[-1].line if self.stack else 1
            raise ScriptRuntimeError(RuntimeIssue(
                inner.kind, inner.message, line, self._trace() + inner.trace, self.inputs)) from None
        except ToolCallError as exc:
            self.fail(exc.kind, f"call_tool('{tool}') failed: {exc}")
        except Exception as exc:  # dispatcher bugs surface as tool failures, never crash a run
            self.fail("tool_failure", f"call_tool('{tool}') failed: {type(exc).__name__}: {exc}")
        try:
            return normalize(deep_copy(out))
        except ValueError as exc:
            self.fail("tool_failure", f"call_tool('{tool}') returned a non-value: {exc}")


def evaluate(script: A.Script, bindings: dict | None = None, dispatcher: Dispatcher = no_tools,
             budget: int = DEFAULT_BUDGET, frame: str = "<script>"):
    """Run ``script`` and return the final value of ``result``.

    Raises :class:`ScriptRuntimeError` carrying a RuntimeIssue on failure.
    """
    return Evaluator(script, bindings or {}, dispatcher, budget, frame).run()


# -- static analysis -----------------------------------------------------------------

def _reads(e, out: list):
    if isinstance(e, A.Name):
        out.append(e.id)
    elif isinstance(e, (A.ListLit,)):
        for i in e.items:
            _reads(i, out)
    elif isinstance(e, A.RecordLit):
        for _, v in e.items:
            _reads(v, out)
    elif isinstance(e, A.Field):
        _reads(e.obj, out)
    elif isinstance(e, A.Index):
        _reads(e.obj, out)
        _reads(e.index, out)
    elif isinstance(e, A.Unary):
        _reads(e.operand, out)
    elif isinstance(e, A.Binary):
        _reads(e.left, out)
        _reads(e.right, out)
    elif isinstance(e, A.Call):
        for a in e.args:
            _reads(a, out)
        for _, v in e.kwargs:
            _reads(v, out)


def _scan(stmts, assigned: set, free: set) -> set:
    """Walk statements in order; returns names definitely assigned afterwards."""
    assigned = set(assigned)

    def read(e):
        names: list = []
        _reads(e, names)
        free.update(n for n in names if n not in assigned)

    for s in stmts:
        if isinstance(s, A.Assign):
            read(s.value)
            if isinstance(s.target, A.Name):
                assigned.add(s.target.id)
            else:
                read(s.target)
        elif isinstance(s, A.ExprStmt):
            read(s.expr)
        elif isinstance(s, A.If):
            read(s.cond)
            then = _scan(s.then, assigned, free)
            orelse = _scan(s.orelse, assigned, free) if s.orelse is not None else assigned
            assigned = then & orelse
        elif isinstance(s, A.For):
            read(s.iterable)
            # the body may run zero times, so nothing it assigns is guaranteed afterwards
            _scan(s.body, assigned | {s.var}, free)
    return assigned


def free_variables(script: A.Script) -> set[str]:
    """Names read before any assignment that is guaranteed to precede them."""
    free: set[str] = set()
    _scan(script.statements, set(), free)
    return free
