"""The fixed builtin function set available to skill scripts.

Builtins are pure. Each raises :class:`BuiltinError` with an issue kind
(type_error or arity_error) that the evaluator turns into a RuntimeIssue.
"""
from __future__ import annotations

import json
import re
from decimal import ROUND_HALF_UP, Decimal

from ..values import canonical_json, deep_copy, is_number, normalize, type_name, values_equal


class BuiltinError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _type(msg: str) -> BuiltinError:
    return BuiltinError("type_error", msg)


def to_str(x) -> str:
    if isinstance(x, str):
        return x
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    return canonical_json(x)


def round_half_up(x, digits: int = 0):
    """Decimal rounding with ties away from zero, applied to the shortest repr of ``x``."""
    if not is_number(x):
        raise _type(f"round() expects a number, got {type_name(x)}")
    if not isinstance(digits, int) or isinstance(digits, bool) or not 0 <= digits <= 12:
        raise _type("round() digits must be an integer between 0 and 12")
    quantum = Decimal(1).scaleb(-digits)
    out = Decimal(repr(x)).quantize(quantum, rounding=ROUND_HALF_UP)
    return normalize(float(out)) if digits else int(out)


def _len(x):
    if isinstance(x, (str, list, dict)):
        return len(x)
    raise _type(f"len() expects a string, list or record, got {type_name(x)}")


def _num(x):
    if is_number(x):
        return x
    if isinstance(x, str):
        try:
            return normalize(float(x.strip()))
        except ValueError:
            raise _type(f"num() cannot parse {x!r}") from None
    raise _type(f"num() expects a string or number, got {type_name(x)}")


def _string_arg(fn: str, x) -> str:
    if not isinstance(x, str):
        raise _type(f"{fn}() expects a string, got {type_name(x)}")
    return x


def _contains(container, item):
    if isinstance(container, str):
        return _string_arg("contains", item) in container
    if isinstance(container, list):
        return any(values_equal(v, item) for v in container)
    if isinstance(container, dict):
        return isinstance(item, str) and item in container
    raise _type(f"contains() expects a string, list or record, got {type_name(container)}")


def _split(s, sep):
    s, sep = _string_arg("split", s), _string_arg("split", sep)
    if sep == "":
        raise _type("split() separator must not be empty")
    return s.split(sep)


def _join(items, sep):
    if not isinstance(items, list):
        raise _type(f"join() expects a list, got {type_name(items)}")
    return _string_arg("join", sep).join(to_str(v) for v in items)


def _record(fn: str, x) -> dict:
    if not isinstance(x, dict):
        raise _type(f"{fn}() expects a record, got {type_name(x)}")
    return x


def _get(rec, key, default=None):
    # null records and null fields both fall back to the default
    if rec is None:
        return default
    if isinstance(rec, list):
        if not is_number(key) or int(key) != key:
            raise _type("get() on a list needs an integer index")
        i = int(key)
        return rec[i] if -len(rec) <= i < len(rec) and rec[i] is not None else default
    value = _record("get", rec).get(_string_arg("get", key))
    return default if value is None else value


def _append(items, item):
    if not isinstance(items, list):
        raise _type(f"append() expects a list, got {type_name(items)}")
    return items + [item]


def _slice(x, start, end=None):
    if not isinstance(x, (list, str)):
        raise _type(f"slice() expects a list or string, got {type_name(x)}")
    for b in (start, end):
        if b is not None and (not is_number(b) or int(b) != b):
            raise _type("slice() bounds must be integers")
    return x[int(start):None if end is None else int(end)]


def _json_encode(x):
    return canonical_json(x)


def _json_decode(s):
    try:
        return normalize(json.loads(_string_arg("json_decode", s)))
    except (json.JSONDecodeError, ValueError) as exc:
        raise _type(f"json_decode() invalid JSON: {exc}") from None


def _regex_match(pattern, s):
    try:
        rx = re.compile(_string_arg("regex_match", pattern))
    except re.error as exc:
        raise _type(f"regex_match() bad pattern: {exc}") from None
    m = rx.search(_string_arg("regex_match", s))
    if m is None:
        return None
    return [m.group(0)] + [g for g in m.groups()]


BUILTINS = {
    # name: (function, min_args, max_args)
    "len": (_len, 1, 1),
    "str": (to_str, 1, 1),
    "num": (_num, 1, 1),
    "lower": (lambda s: _string_arg("lower", s).lower(), 1, 1),
    "upper": (lambda s: _string_arg("upper", s).upper(), 1, 1),
    "contains": (_contains, 2, 2),
    "split": (_split, 2, 2),
    "join": (_join, 2, 2),
    "keys": (lambda r: list(_record("keys", r).keys()), 1, 1),
    "values": (lambda r: deep_copy(list(_record("values", r).values())), 1, 1),
    "get": (_get, 2, 3),
    "append": (_append, 2, 2),
    "slice": (_slice, 2, 3),
    "round": (round_half_up, 1, 2),
    "json_encode": (_json_encode, 1, 1),
    "json_decode": (_json_decode, 1, 1),
    "regex_match": (_regex_match, 2, 2),
}

BUILTIN_NAMES = frozenset(BUILTINS)


def call_builtin(name: str, args: list):
    fn, lo, hi = BUILTINS[name]
    if not lo <= len(args) <= hi:
        want = str(lo) if lo == hi else f"{lo} to {hi}"
        raise BuiltinError("arity_error", f"{name}() takes {want} arguments, got {len(args)}")
    return fn(*args)
