"""Deterministic simulated backends, the oracle, and per-task workspaces."""
from __future__ import annotations

import hashlib
import os
import random
import tempfile
from dataclasses import dataclass
from pathlib import Path

from ..script.builtins import round_half_up
from ..script.errors import ToolCallError
from ..values import canonical_bytes, canonical_json, is_number, normalize, type_name
from .families import FAMILIES, POOLS, Band, Family, FieldSpec, Metric, ToolDef

FILLER_FACTOR = 4
FILLER_KEY = "verbose_description"
WORKSPACE_TOOLS = ("write_file", "read_file", "list_directory", "claim_done")

WORKSPACE_SPECS = {
    "write_file": ("Save JSON output", (("path", "string"), ("content", "string"))),
    "read_file": ("Read a workspace file", (("path", "string"),)),
    "list_directory": ("List workspace files", (("path", "string"),)),
    "claim_done": ("Signal task completion", (("status", "string"),)),
}


class UnknownFamily(KeyError):
    pass


@dataclass(frozen=True)
class ToolSpec:
    name: str
    description: str
    params: tuple[tuple[str, str], ...]
    family: str

    def signature(self) -> str:
        return f"{self.name}(" + ", ".join(p for p, _ in self.params) + ")"

    def to_dict(self) -> dict:
        return {"name": self.name, "description": self.description,
                "params": [list(p) for p in self.params], "family": self.family}


@dataclass(frozen=True)
class Registry:
    family: str
    seed: int
    specs: tuple[ToolSpec, ...]
    edge_cases: frozenset = frozenset()

    @property
    def tools(self) -> dict[str, ToolSpec]:
        return {s.name: s for s in self.specs}

    @property
    def schema(self) -> Family:
        return FAMILIES[self.family]

    @property
    def data_tools(self) -> list[str]:
        return self.schema.tool_names

    def to_dict(self) -> dict:
        return {"family": self.family, "seed": self.seed,
                "tools": [s.to_dict() for s in self.specs],
                "edge_cases": sorted(self.edge_cases)}

    def serialize(self) -> str:
        return canonical_json(self.to_dict())


def get_family(slug: str) -> Family:
    try:
        return FAMILIES[slug]
    except KeyError:
        raise UnknownFamily(f"unknown family {slug!r}") from None


def build_registry(family: str, seed: int, edge_cases=()) -> Registry:
    fam = get_family(family)
    if not 0 <= int(seed) < 2**64:
        raise ValueError("seed must fit in 64 unsigned bits")
    specs = [ToolSpec(t.name, t.description, tuple((p.name, p.type) for p in t.params), fam.slug)
             for t in fam.tools]
    for name in WORKSPACE_TOOLS:
        desc, params = WORKSPACE_SPECS[name]
        specs.append(ToolSpec(name, desc, params, "workspace"))
    return Registry(fam.slug, int(seed), tuple(specs), frozenset(edge_cases))


# -- pseudo-random payloads ---------------------------------------------------------

def prf(seed: int, family: str, tool: str, args: dict) -> int:
    """Keyed 64-bit hash of (seed, family, tool, canonical args with sorted keys)."""
    h = hashlib.blake2b(digest_size=8, key=int(seed).to_bytes(8, "little"))
    h.update(family.encode() + b"\x00" + tool.encode() + b"\x00")
    h.update(canonical_bytes(args, sort_keys=True))
    return int.from_bytes(h.digest(), "little")


def generate_field(rng: random.Random, spec: FieldSpec):
    kind, a = spec.kind, spec.args
    if kind == "int":
        return rng.randint(int(a[0]), int(a[1]))
    if kind == "float":
        lo, hi, digits = float(a[0]), float(a[1]), int(a[2])
        return normalize(round(rng.uniform(lo, hi), digits))
    if kind == "pick":
        return rng.choice(POOLS[a[0]])
    if kind == "sample":
        return rng.sample(POOLS[a[0]], int(a[1]))
    if kind == "range":
        lo, hi = int(a[0]), int(a[1])
        start = rng.randint(lo, hi - 2)
        return f"{start}-{rng.randint(start + 1, hi)}"
    if kind == "phrase":
        words = [rng.choice(POOLS[a[0]]) for _ in range(int(a[1]))]
        text = " ".join(words)
        return text[0].upper() + text[1:] + "."
    if kind == "date":
        return f"{rng.randint(2023, 2025)}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
    if kind == "email":
        return f"{rng.choice(POOLS['email_first'])}@{rng.choice(POOLS['domains'])}"
    if kind == "bool":
        return rng.random() < 0.5
    raise ValueError(f"unknown field kind {kind!r}")


def _filler(rng: random.Random, size: int) -> str:
    words = POOLS["lorem"]
    parts, length = [], 0
    while length < size:
        w = rng.choice(words)
        parts.append(w)
        length += len(w) + 1
    return " ".join(parts)[:size]


def _check_args(registry: Registry, tool: str, args) -> ToolSpec:
    spec = registry.tools.get(tool)
    if spec is None:
        raise ToolCallError(f"unknown tool '{tool}'", kind="unknown_tool")
    if not isinstance(args, dict):
        raise ToolCallError(f"{tool}: arguments must be a record", kind="arity_error")
    names = [p for p, _ in spec.params]
    missing = [p for p in names if p not in args]
    extra = [k for k in args if k not in names]
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join(missing))
        if extra:
            parts.append("unexpected " + ", ".join(extra))
        raise ToolCallError(f"{spec.signature()}: " + "; ".join(parts), kind="arity_error")
    for p, ptype in spec.params:
        v = args[p]
        if v is not None and type_name(v) != ptype:
            raise ToolCallError(f"{spec.signature()}: {p} must be a {ptype}, got {type_name(v)}",
                                kind="arity_error")
    return spec


def is_degraded(registry: Registry, tool: ToolDef, args: dict) -> bool:
    """Null arguments and configured edge-case entities yield all-null oracle fields."""
    if any(args.get(p.name) is None for p in tool.params):
        return True
    return any(p.is_entity and args.get(p.name) in registry.edge_cases for p in tool.params)


def data_response(registry: Registry, tool: str, args: dict) -> dict:
    """The full payload of a data tool: oracle fields first, then filler."""
    _check_args(registry, tool, args)
    tdef = registry.schema.tool(tool)
    rng = random.Random(prf(registry.seed, registry.family, tool, normalize(args)))
    values = {f.name: generate_field(rng, f) for f in tdef.fields}
    if is_degraded(registry, tdef, args):
        values = {name: None for name in values}
    size = FILLER_FACTOR * len(canonical_bytes(values))
    return {**values, FILLER_KEY: _filler(rng, size)}


def oracle_fields(tdef: ToolDef, response) -> dict:
    resp = response if isinstance(response, dict) else {}
    return {name: resp.get(name) for name in tdef.field_names}


def resolve_args(tdef: ToolDef, entity: str, responses: dict) -> dict:
    """Arguments for ``tdef`` given the entity and the responses gathered so far."""
    args = {}
    for p in tdef.params:
        if p.is_entity:
            args[p.name] = entity
        elif p.chained is not None:
            src_tool, src_field = p.chained
            src = responses.get(src_tool)
            args[p.name] = src.get(src_field) if isinstance(src, dict) else None
        else:
            args[p.name] = p.constant
    return args


# -- derived metrics ----------------------------------------------------------------

def compute_metric(metric: Metric, groups: dict):
    total = 0
    for tool, fld, weight, cap in metric.terms:
        v = (groups.get(tool) or {}).get(fld)
        if not is_number(v):
            return None
        if v > cap:
            v = cap
        total = total + weight * (v / cap)
    return round_half_up(metric.offset + total * metric.scale, metric.digits)


def compute_band(band: Band, entry: dict, groups: dict):
    if "." in band.source:
        tool, fld = band.source.split(".", 1)
        v = (groups.get(tool) or {}).get(fld)
    else:
        v = entry.get(band.source)
    if not is_number(v):
        return None
    for at, label in band.cuts:
        if v >= at:
            return label
    return band.default


def assemble_entry(family: Family, tools, groups: dict) -> dict:
    """The per-entity output record: one group per tool, then derived metrics and bands."""
    entry = {t: dict(groups.get(t) or {}) for t in tools}
    for m in family.active_metrics(tools):
        entry[m.name] = compute_metric(m, groups)
    for b in family.active_bands(tools):
        entry[b.name] = compute_band(b, entry, groups)
    return entry


def collect_entity(registry: Registry, tools, entity: str) -> dict:
    """Raw responses for one entity, calling ``tools`` in order."""
    responses: dict = {}
    for name in tools:
        tdef = registry.schema.tool(name)
        responses[name] = data_response(registry, name, resolve_args(tdef, entity, responses))
    return responses


def oracle(registry: Registry, task) -> dict:
    fam = registry.schema
    if task.family != fam.slug:
        raise ValueError(f"task family {task.family!r} does not match registry {fam.slug!r}")
    out = {}
    for entity in task.entities:
        responses = collect_entity(registry, task.required_tools, entity)
        groups = {t: oracle_fields(fam.tool(t), responses[t]) for t in task.required_tools}
        out[entity] = assemble_entry(fam, task.required_tools, groups)
    return out


# -- workspaces ---------------------------------------------------------------------

class WorkspaceError(Exception):
    pass


@dataclass
class Workspace:
    root: Path
    done_flag: bool = False
    done_message: str = ""

    def _path(self, rel) -> Path:
        if not isinstance(rel, str) or rel == "":
            raise ToolCallError("path must be a non-empty string", kind="arity_error")
        if os.path.isabs(rel):
            raise ToolCallError(f"path {rel!r} escapes the workspace", kind="tool_failure")
        norm = os.path.normpath(rel)
        if norm == ".." or norm.startswith(".." + os.sep):
            raise ToolCallError(f"path {rel!r} escapes the workspace", kind="tool_failure")
        return self.root / norm

    def write(self, rel: str, content: str) -> str:
        if self.done_flag:
            raise ToolCallError("workspace is closed: claim_done was already called", kind="tool_failure")
        if not isinstance(content, str):
            raise ToolCallError("content must be a string", kind="arity_error")
        path = self._path(rel)
        if path == self.root:
            raise ToolCallError("cannot write to the workspace root", kind="tool_failure")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(content.encode("utf-8"))
        return "File written successfully."

    def read(self, rel: str) -> str:
        path = self._path(rel)
        if not path.is_file():
            raise ToolCallError(f"no such file: {rel}", kind="tool_failure")
        return path.read_bytes().decode("utf-8", errors="replace")

    def listdir(self, rel: str = ".") -> list[str]:
        path = self._path(rel)
        if not path.is_dir():
            raise ToolCallError(f"no such directory: {rel}", kind="tool_failure")
        return sorted(p.name + ("/" if p.is_dir() else "") for p in path.iterdir())

    def claim_done(self, status: str) -> str:
        if self.done_flag:
            raise ToolCallError("claim_done was already called", kind="tool_failure")
        self.done_flag = True
        self.done_message = status if isinstance(status, str) else canonical_json(status)
        return "Task marked as done."

    @property
    def files(self) -> dict[str, bytes]:
        out = {}
        for p in sorted(self.root.rglob("*")):
            if p.is_file():
                out[p.relative_to(self.root).as_posix()] = p.read_bytes()
        return out


def make_workspace(task_id: str, run_dir=None) -> Workspace:
    """A fresh workspace at ``<run_dir>/<task_id>/workspace``.

    With no run_dir a private temporary directory is used.
    """
    if run_dir is None:
        run_dir = tempfile.mkdtemp(prefix="skillbench-")
    root = Path(run_dir) / task_id / "workspace"
    try:
        root.mkdir(parents=True, exist_ok=False)
    except FileExistsError:
        raise WorkspaceError(f"workspace for task {task_id!r} already exists in {run_dir}") from None
    return Workspace(root)


def invoke(registry: Registry, workspace: Workspace | None, tool: str, args):
    """Serve one atomic tool call. Raises ToolCallError on any failure."""
    spec = _check_args(registry, tool, args)
    if spec.family != "workspace":
        return data_response(registry, tool, args)
    if workspace is None:
        raise ToolCallError("no workspace attached", kind="tool_failure")
    if tool == "write_file":
        return workspace.write(args["path"], args["content"])
    if tool == "read_file":
        return workspace.read(args["path"])
    if tool == "list_directory":
        return workspace.listdir(args["path"])
    return workspace.claim_done(args["status"])
