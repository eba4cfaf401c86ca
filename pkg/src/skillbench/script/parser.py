"""Tokenizer and recursive-descent parser for the skill-script language.

Grammar (newline-separated statements, brace-delimited blocks)::

    stmt   := target "=" expr | "for" NAME "in" expr block
            | "if" expr block ["else" (block | if-stmt)] | expr
    target := NAME ("." NAME | "[" expr "]")*
    expr   := or-expr with precedence  or < and < not < compare < +,- < *,/,% < unary -
    call   := builtin "(" args ")" | "call_tool" "(" expr {"," NAME "=" expr} ")"

Inside ``(...)``, ``[...]`` and record literals newlines are insignificant.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import ast as A
from .builtins import BUILTIN_NAMES
from .errors import ScriptSyntaxError, SyntaxIssue

KEYWORDS = frozenset({"if", "else", "for", "in", "and", "or", "not", "true", "false", "null"})

# words from host languages an LLM tends to emit; rejected with a pointed message
FOREIGN_KEYWORDS = {
    "return": "'return' is invalid outside function; assign to `result` instead",
    "def": "function definitions are not supported",
    "function": "function definitions are not supported",
    "lambda": "function definitions are not supported",
    "class": "class definitions are not supported",
    "while": "'while' loops are not supported; iterate over a list with 'for'",
    "import": "'import' is not supported; use the builtin functions",
    "from": "'import' is not supported; use the builtin functions",
    "elif": "use 'else if'",
    "try": "exception handling is not supported",
    "except": "exception handling is not supported",
    "raise": "exception handling is not supported",
    "break": "'break' is not supported",
    "continue": "'continue' is not supported",
    "var": "declarations are not needed; assign directly",
    "let": "declarations are not needed; assign directly",
    "const": "declarations are not needed; assign directly",
    "None": "use null",
    "True": "use true",
    "False": "use false",
}

CALL_TOOL = "call_tool"

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<str>"(?:[^"\\\n]|\\.)*")
  | (?P<badstr>"(?:[^"\\\n]|\\.)*)
  | (?P<sq>'[^'\n]*'?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>==|!=|<=|>=|[-+*/%<>=()\[\]{},.:])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # num, str, name, op, nl, eof
    text: str
    line: int
    value: object = None


def _snippet(lines: list[str], line: int) -> str:
    lo = max(1, line - 1)
    hi = min(len(lines), line + 1)
    return "\n".join(lines[lo - 1:hi])


class _Fail(Exception):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line = 0, 1
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise _Fail(line, f"unexpected character {source[pos]!r}")
        kind = m.lastgroup
        text = m.group()
        if kind == "nl":
            tokens.append(Token("nl", text, line))
            line += 1
        elif kind == "num":
            value = float(text) if any(c in text for c in ".eE") else int(text)
            tokens.append(Token("num", text, line, value))
        elif kind == "str":
            try:
                value = json.loads(text)
            except json.JSONDecodeError:
                raise _Fail(line, f"invalid escape in string {text}") from None
            tokens.append(Token("str", text, line, value))
        elif kind == "badstr":
            raise _Fail(line, "unterminated string")
        elif kind == "sq":
            raise _Fail(line, "strings use double quotes")
        elif kind in ("name", "op"):
            tokens.append(Token(kind, text, line))
        pos = m.end()
    # errors at end of input point at the last line that has content
    last = next((t.line for t in reversed(tokens) if t.kind != "nl"), 1)
    tokens.append(Token("eof", "", last))
    return tokens


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.nl_depth = 0  # >0 while inside brackets where newlines are insignificant

    # -- token helpers -------------------------------------------------------
    def _skip_insignificant(self):
        if self.nl_depth > 0:
            while self.tokens[self.pos].kind == "nl":
                self.pos += 1

    def peek(self) -> Token:
        self._skip_insignificant()
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("op", "name") and tok.text == text

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if not self.at(text):
            raise self.unexpected(tok, f"expected '{text}'")
        return self.next()

    def skip_newlines(self):
        while self.tokens[self.pos].kind == "nl":
            self.pos += 1

    @staticmethod
    def unexpected(tok: Token, hint: str = "") -> _Fail:
        if tok.kind == "eof":
            msg = "unexpected end of input"
        elif tok.kind == "nl":
            msg = "unexpected end of line"
        else:
            msg = f"unexpected token '{tok.text}'"
        return _Fail(tok.line, f"{msg}, {hint}" if hint else msg)

    @staticmethod
    def check_word(tok: Token):
        if tok.kind == "name" and tok.text in FOREIGN_KEYWORDS:
            raise _Fail(tok.line, f"invalid keyword '{tok.text}': {FOREIGN_KEYWORDS[tok.text]}")

    # -- statements ------------------------------------------------------------
    def parse_script(self) -> tuple:
        stmts = []
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "eof":
                return tuple(stmts)
            stmts.append(self.statement())
            self.end_of_statement(block=False)

    def end_of_statement(self, block: bool):
        tok = self.tokens[self.pos]
        if tok.kind in ("nl", "eof") or (block and tok.kind == "op" and tok.text == "}"):
            return
        raise self.unexpected(tok)

    def block(self) -> tuple:
        self.expect("{")
        saved, self.nl_depth = self.nl_depth, 0
        stmts = []
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "op" and tok.text == "}":
                self.next()
                self.nl_depth = saved
                return tuple(stmts)
            if tok.kind == "eof":
                raise self.unexpected(tok, "expected '}'")
            stmts.append(self.statement())
            self.end_of_statement(block=True)

    def statement(self):
        tok = self.peek()
        self.check_word(tok)
        if tok.kind == "name" and tok.text == "for":
            self.next()
            var = self.next()
            if var.kind != "name" or var.text in KEYWORDS:
                raise self.unexpected(var, "expected loop variable")
            self.check_word(var)
            self.expect("in")
            iterable = self.expr()
            body = self.block()
            return A.For(var.text, iterable, body, line=tok.line)
        if tok.kind == "name" and tok.text == "if":
            return self.if_statement()
        if tok.kind == "name" and tok.text == "else":
            raise _Fail(tok.line, "'else' without matching 'if'")
        expr = self.expr()
        if self.at("="):
            eq = self.next()
            self.check_target(expr, eq)
            value = self.expr()
            return A.Assign(expr, value, line=tok.line)
        return A.ExprStmt(expr, line=tok.line)

    def if_statement(self):
        tok = self.expect("if")
        cond = self.expr()
        then = self.block()
        mark = self.pos
        self.skip_newlines()
        if self.at("else"):
            self.next()
            if self.at("if"):
                orelse = (self.if_statement(),)
            else:
                orelse = self.block()
            return A.If(cond, then, orelse, line=tok.line)
        self.pos = mark
        return A.If(cond, then, None, line=tok.line)

    def check_target(self, expr, eq: Token):
        root = expr
        while isinstance(root, (A.Field, A.Index)):
            root = root.obj
        if not isinstance(root, A.Name):
            raise _Fail(eq.line, "invalid assignment target")
        if root.id in BUILTIN_NAMES or root.id == CALL_TOOL:
            raise _Fail(eq.line, f"cannot assign to builtin '{root.id}'")

    # -- expressions -------------------------------------------------------------
    def expr(self):
        return self.or_expr()

    def or_expr(self):
        left = self.and_expr()
        while self.at("or"):
            tok = self.next()
            left = A.Binary("or", left, self.and_expr(), line=tok.line)
        return left

    def and_expr(self):
        left = self.not_expr()
        while self.at("and"):
            tok = self.next()
            left = A.Binary("and", left, self.not_expr(), line=tok.line)
        return left

    def not_expr(self):
        if self.at("not"):
            tok = self.next()
            return A.Unary("not", self.not_expr(), line=tok.line)
        return self.comparison()

    def comparison(self):
        left = self.additive()
        while self.peek().kind == "op" and self.peek().text in ("==", "!=", "<", "<=", ">", ">="):
            tok = self.next()
            left = A.Binary(tok.text, left, self.additive(), line=tok.line)
        return left

    def additive(self):
        left = self.multiplicative()
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            tok = self.next()
            left = A.Binary(tok.text, left, self.multiplicative(), line=tok.line)
        return left

    def multiplicative(self):
        left = self.unary()
        while self.peek().kind == "op" and self.peek().text in ("*", "/", "%"):
            tok = self.next()
            left = A.Binary(tok.text, left, self.unary(), line=tok.line)
        return left

    def unary(self):
        if self.peek().kind == "op" and self.peek().text == "-":
            tok = self.next()
            return A.Unary("-", self.unary(), line=tok.line)
        return self.postfix()

    def postfix(self):
        node = self.primary()
        while True:
            tok = self.peek()
            if tok.kind != "op":
                return node
            if tok.text == ".":
                self.next()
                name = self.next()
                if name.kind != "name":
                    raise self.unexpected(name, "expected field name")
                node = A.Field(node, name.text, line=tok.line)
            elif tok.text == "[":
                self.next()
                self.nl_depth += 1
                index = self.expr()
                self.expect("]")
                self.nl_depth -= 1
                node = A.Index(node, index, line=tok.line)
            elif tok.text == "(":
                raise _Fail(tok.line, "only builtin functions and call_tool can be called")
            else:
                return node

    def primary(self):
        tok = self.next()
        if tok.kind == "num":
            return A.Literal(tok.value, line=tok.line)
        if tok.kind == "str":
            return A.Literal(tok.value, line=tok.line)
        if tok.kind == "name":
            self.check_word(tok)
            if tok.text == "true":
                return A.Literal(True, line=tok.line)
            if tok.text == "false":
                return A.Literal(False, line=tok.line)
            if tok.text == "null":
                return A.Literal(None, line=tok.line)
            if tok.text in KEYWORDS:
                raise self.unexpected(tok)
            if self.tokens[self.pos].kind == "op" and self.tokens[self.pos].text == "(":
                return self.call(tok)
            if tok.text in BUILTIN_NAMES or tok.text == CALL_TOOL:
                raise _Fail(tok.line, f"builtin '{tok.text}' must be called")
            return A.Name(tok.text, line=tok.line)
        if tok.kind == "op":
            if tok.text == "(":
                self.nl_depth += 1
                inner = self.expr()
                self.expect(")")
                self.nl_depth -= 1
                return inner
            if tok.text == "[":
                return self.list_literal(tok)
            if tok.text == "{":
                return self.record_literal(tok)
        raise self.unexpected(tok)

    def list_literal(self, open_tok: Token):
        self.nl_depth += 1
        items = []
        while not self.at("]"):
            items.append(self.expr())
            if not self.at(","):
                break
            self.next()
        self.expect("]")
        self.nl_depth -= 1
        return A.ListLit(tuple(items), line=open_tok.line)

    def record_literal(self, open_tok: Token):
        self.nl_depth += 1
        items = []
        keys = set()
        while not self.at("}"):
            key_tok = self.next()
            if key_tok.kind == "name":
                key = key_tok.text
            elif key_tok.kind == "str":
                key = key_tok.value
            else:
                raise self.unexpected(key_tok, "expected record key")
            if key in keys:
                raise _Fail(key_tok.line, f"duplicate record key '{key}'")
            keys.add(key)
            self.expect(":")
            items.append((key, self.expr()))
            if not self.at(","):
                break
            self.next()
        self.expect("}")
        self.nl_depth -= 1
        return A.RecordLit(tuple(items), line=open_tok.line)

    def call(self, name_tok: Token):
        func = name_tok.text
        if func not in BUILTIN_NAMES and func != CALL_TOOL:
            raise _Fail(name_tok.line, f"unknown function '{func}'")
        self.expect("(")
        self.nl_depth += 1
        args, kwargs = [], []
        seen = set()
        while not self.at(")"):
            tok = self.peek()
            nxt = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if tok.kind == "name" and nxt is not None and nxt.kind == "op" and nxt.text == "=":
                if func != CALL_TOOL:
                    raise _Fail(tok.line, f"builtin '{func}' takes no keyword arguments")
                self.next()
                self.next()
                if tok.text in seen:
                    raise _Fail(tok.line, f"duplicate keyword argument '{tok.text}'")
                seen.add(tok.text)
                kwargs.append((tok.text, self.expr()))
            else:
                if kwargs:
                    raise _Fail(tok.line, "positional argument follows keyword argument")
                args.append(self.expr())
            if not self.at(","):
                break
            self.next()
        self.expect(")")
        self.nl_depth -= 1
        if func == CALL_TOOL and len(args) != 1:
            raise _Fail(name_tok.line, "call_tool takes the tool name as its only positional argument")
        return A.Call(func, tuple(args), tuple(kwargs), line=name_tok.line)


def parse(source: str) -> A.Script:
    """Parse script text; raises :class:`ScriptSyntaxError` at the first error."""
    lines = source.split("\n")
    try:
        if not source.strip():
            raise _Fail(1, "empty script")
        tokens = tokenize(source)
        statements = Parser(tokens).parse_script()
    except _Fail as fail:
        line = min(max(fail.line, 1), len(lines))
        raise ScriptSyntaxError(SyntaxIssue(line, fail.message, _snippet(lines, line))) from None
    return A.Script(statements, source=source)
