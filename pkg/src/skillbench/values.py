"""Value model shared by the script interpreter, the simulated tools and the harness.

A value is one of: None, bool, number (int or float), str, list, dict with str keys.
Dicts keep insertion order, which is what makes :func:`canonical_json` byte-stable.
"""
from __future__ import annotations

import json
import math
from typing import Any

Value = Any

MAX_EXACT_INT = 2**53


def is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def type_name(x: Any) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "boolean"
    if is_number(x):
        return "number"
    if isinstance(x, str):
        return "string"
    if isinstance(x, list):
        return "list"
    if isinstance(x, dict):
        return "record"
    return type(x).__name__


def normalize(x: Any) -> Value:
    """Coerce a JSON-ish Python object into the value model.

    Integral floats inside the exact range collapse to ints, tuples become lists.
    """
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite number {x!r}")
        if x.is_integer() and abs(x) <= MAX_EXACT_INT:
            return int(x)
        return x
    if isinstance(x, (list, tuple)):
        return [normalize(v) for v in x]
    if isinstance(x, dict):
        out = {}
        for k, v in x.items():
            if not isinstance(k, str):
                raise ValueError(f"record keys must be strings, got {type(k).__name__}")
            out[k] = normalize(v)
        return out
    raise ValueError(f"not a value: {type(x).__name__}")


def canonical_json(x: Any, *, sort_keys: bool = False) -> str:
    """Compact, deterministic JSON text for a value."""
    return json.dumps(normalize(x), ensure_ascii=False, separators=(",", ":"),
                      sort_keys=sort_keys, allow_nan=False)


def canonical_bytes(x: Any, *, sort_keys: bool = False) -> bytes:
    return canonical_json(x, sort_keys=sort_keys).encode("utf-8")


def values_equal(a: Any, b: Any) -> bool:
    """Structural equality where booleans never equal numbers."""
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if is_number(a) and is_number(b):
        return a == b
    if type_name(a) != type_name(b):
        return False
    if isinstance(a, list):
        return len(a) == len(b) and all(values_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(values_equal(a[k], b[k]) for k in a)
    return a == b


def deep_copy(x: Value) -> Value:
    if isinstance(x, list):
        return [deep_copy(v) for v in x]
    if isinstance(x, dict):
        return {k: deep_copy(v) for k, v in x.items()}
    return x
