"""Canonical pretty-printer: the stable storage form of a script."""
from __future__ import annotations

import json
import re

from . import ast as A
from .parser import KEYWORDS, parse

INDENT = "    "
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_BINARY_PREC = {"or": 1, "and": 2, "==": 4, "!=": 4, "<": 4, "<=": 4, ">": 4, ">=": 4,
                "+": 5, "-": 5, "*": 6, "/": 6, "%": 6}
_POSTFIX = 8
_ATOM = 9


def _prec(e) -> int:
    if isinstance(e, A.Binary):
        return _BINARY_PREC[e.op]
    if isinstance(e, A.Unary):
        return 3 if e.op == "not" else 7
    if isinstance(e, (A.Field, A.Index)):
        return _POSTFIX
    return _ATOM


def _literal(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    return repr(value)


def _key(k: str) -> str:
    return k if _IDENT.match(k) and k not in KEYWORDS else json.dumps(k, ensure_ascii=False)


def _wrap(e, need: int) -> str:
    text = render_expr(e)
    return f"({text})" if _prec(e) < need else text


def render_expr(e) -> str:
    if isinstance(e, A.Literal):
        return _literal(e.value)
    if isinstance(e, A.Name):
        return e.id
    if isinstance(e, A.ListLit):
        return "[" + ", ".join(render_expr(i) for i in e.items) + "]"
    if isinstance(e, A.RecordLit):
        return "{" + ", ".join(f"{_key(k)}: {render_expr(v)}" for k, v in e.items) + "}"
    if isinstance(e, (A.Field, A.Index)):
        obj = e.obj
        if isinstance(obj, A.Literal) and not isinstance(obj.value, str):
            base = f"({render_expr(obj)})"
        else:
            base = _wrap(obj, _POSTFIX)
        if isinstance(e, A.Field):
            return f"{base}.{e.name}"
        return f"{base}[{render_expr(e.index)}]"
    if isinstance(e, A.Unary):
        if e.op == "not":
            return "not " + _wrap(e.operand, 3)
        return "-" + _wrap(e.operand, 7)
    if isinstance(e, A.Binary):
        p = _BINARY_PREC[e.op]
        return f"{_wrap(e.left, p)} {e.op} {_wrap(e.right, p + 1)}"
    if isinstance(e, A.Call):
        parts = [render_expr(a) for a in e.args]
        parts += [f"{k}={render_expr(v)}" for k, v in e.kwargs]
        return f"{e.func}(" + ", ".join(parts) + ")"
    raise TypeError(f"not an expression node: {e!r}")


def _block(stmts, depth: int) -> list[str]:
    lines = []
    for s in stmts:
        lines.extend(render_stmt(s, depth))
    return lines


def render_stmt(s, depth: int = 0) -> list[str]:
    pad = INDENT * depth
    if isinstance(s, A.Assign):
        return [f"{pad}{render_expr(s.target)} = {render_expr(s.value)}"]
    if isinstance(s, A.ExprStmt):
        return [f"{pad}{render_expr(s.expr)}"]
    if isinstance(s, A.For):
        return ([f"{pad}for {s.var} in {render_expr(s.iterable)} {{"]
                + _block(s.body, depth + 1) + [f"{pad}}}"])
    if isinstance(s, A.If):
        lines = [f"{pad}if {render_expr(s.cond)} {{"] + _block(s.then, depth + 1)
        if s.orelse is None:
            return lines + [f"{pad}}}"]
        return lines + [f"{pad}}} else {{"] + _block(s.orelse, depth + 1) + [f"{pad}}}"]
    raise TypeError(f"not a statement node: {s!r}")


def render_canonical(script: A.Script) -> str:
    return "".join(line + "\n" for line in _block(script.statements, 0))


def canonicalize(source: str) -> str:
    return render_canonical(parse(source))


def summarize(stmt, width: int = 80) -> str:
    """First rendered line of a statement, clipped for traces."""
    line = render_stmt(stmt)[0]
    return line if len(line) <= width else line[:width - 3] + "..."
