"""The bounded skill-script language: parse, analyse, render, evaluate."""
from .ast import Script
from .builtins import BUILTIN_NAMES
from .errors import (
    RuntimeIssue,
    ScriptRuntimeError,
    ScriptSyntaxError,
    SyntaxIssue,
    ToolCallError,
    TraceEntry,
)
from .evaluator import DEFAULT_BUDGET, Evaluator, evaluate, free_variables, no_tools
from .parser import parse
from .render import canonicalize, render_canonical

__all__ = [
    "BUILTIN_NAMES", "DEFAULT_BUDGET", "Evaluator", "RuntimeIssue", "Script",
    "ScriptRuntimeError", "ScriptSyntaxError", "SyntaxIssue", "ToolCallError", "TraceEntry",
    "canonicalize", "evaluate", "free_variables", "no_tools", "parse", "render_canonical",
]
