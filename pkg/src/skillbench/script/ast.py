"""Syntax tree for skill scripts.

Line numbers are excluded from equality so that a tree and its re-parsed
canonical rendering compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from ..values import type_name, values_equal


@dataclass(frozen=True)
class Literal:
    value: Any
    line: int = field(default=0, compare=False)

    def __eq__(self, other):
        # plain == would make true equal 1
        if not isinstance(other, Literal):
            return NotImplemented
        return values_equal(self.value, other.value)

    def __hash__(self):
        return hash(("lit", type_name(self.value), self.value))


@dataclass(frozen=True)
class Name:
    id: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ListLit:
    items: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RecordLit:
    items: tuple  # of (key, expr)
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Field:
    obj: Any
    name: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Index:
    obj: Any
    index: Any
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Unary:
    op: str
    operand: Any
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: Any
    right: Any
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    kwargs: tuple = ()  # of (name, expr); only call_tool takes keywords
    line: int = field(default=0, compare=False)


Expr = Union[Literal, Name, ListLit, RecordLit, Field, Index, Unary, Binary, Call]


@dataclass(frozen=True)
class Assign:
    target: Any  # Name, Field or Index rooted at a Name
    value: Any
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class For:
    var: str
    iterable: Any
    body: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class If:
    cond: Any
    then: tuple
    orelse: tuple | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ExprStmt:
    expr: Any
    line: int = field(default=0, compare=False)


Stmt = Union[Assign, For, If, ExprStmt]


@dataclass(frozen=True)
class Script:
    statements: tuple
    source: str = field(default="", compare=False, repr=False)

    @property
    def line_count(self) -> int:
        return len(self.source.split("\n"))
