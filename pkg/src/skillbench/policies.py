"""Scripted agents for the five execution modes, and the skill composer they share.

An episode is a sequence of turns; each turn is one tool call. The request for a
turn carries the whole conversation so far (system text, task prompt, and every
earlier call and result), which is what drives input-token growth.
"""
from __future__ import annotations

import json
import re
import shutil
import time
from dataclasses import dataclass, field
from pathlib import Path

from .accounting import Counters, Limits, TokenModel, count_tokens, enforce_limits
from .library import SkillLibrary
from .script import render_canonical, parse
from .session import RequestError, Session
from .tasks import Task, inject_cross_summary, render_prompt
from .tools.fabric import (
    Registry,
    Workspace,
    assemble_entry,
    get_family,
    oracle_fields,
    resolve_args,
)
from .tools.families import Family, Metric
from .values import canonical_bytes, canonical_json

MODES = ("base", "skill", "hier", "direct", "static")
FALLBACK_AFTER = 3
HIER_ATTEMPTS = 3
EXEC_SCRIPT = "exec_script"
# calls whose value reports its own success
_REPORTING = ("execute_skill", "execute_macro", EXEC_SCRIPT)
SUFFIX = {3: "basic", 4: "extended", 5: "complete"}

SYSTEM_BASE = (
    "You are a data collection agent working in a sandboxed workspace. Reply with exactly one "
    "tool call per turn. Call the API tools listed in the task, save the requested JSON file "
    "with write_file, then call claim_done.\n"
)
SYSTEM_SKILL = SYSTEM_BASE + (
    "\nA persistent skill library is available:\n"
    "- list_skills(): show saved skills\n"
    "- save_skill(skill_name, script_code, parameters, description): store a reusable script\n"
    "- execute_skill(skill_name, args): run a saved skill with the given arguments\n"
    "- get_skill(skill_name): show a skill's source\n"
    "Scripts call tools as call_tool(\"tool\", key=value), which returns the parsed response, "
    "and must assign their final value to `result`. Check the library before writing new "
    "skills. After three failed runs on one input, switch to plain tool calls for that input.\n"
)
SYSTEM_HIER = SYSTEM_SKILL + (
    "Skills may run other skills with call_tool(\"execute_skill\", skill_name=..., args={...}).\n"
)
SYSTEM_STATIC = SYSTEM_BASE + (
    "\nThe skill library is read-only. Run inherited skills with execute_skill(skill_name, args); "
    "new skills cannot be saved.\n"
)
SYSTEM_DIRECT = SYSTEM_BASE + (
    "\nexec_script(script_code) runs a one-off script that may call API tools through "
    "call_tool(\"tool\", key=value); its `result` is returned and nothing is stored.\n"
)
SYSTEM_PROMPTS = {"base": SYSTEM_BASE, "skill": SYSTEM_SKILL, "hier": SYSTEM_HIER,
                  "direct": SYSTEM_DIRECT, "static": SYSTEM_STATIC}


# -- skill composition ----------------------------------------------------------------

def entity_param(fam: Family) -> str:
    for p in fam.tools[0].params:
        if p.is_entity:
            return p.name
    raise ValueError(f"family {fam.slug} has no entity parameter on its first tool")


def _lit(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def _num(x) -> str:
    return repr(x) if isinstance(x, float) else str(x)


def _fetch_lines(fam: Family, tools, ent: str) -> list[str]:
    """Call each tool in order and gather its oracle fields into ``entry``."""
    var = {t: f"r{i}" for i, t in enumerate(tools, 1)}
    lines = []
    for t in tools:
        tdef = fam.tool(t)
        args = []
        for p in tdef.params:
            if p.is_entity:
                src = ent
            elif p.chained is not None:
                src = f"{var[p.chained[0]]}.{p.chained[1]}"
            else:
                src = _lit(p.constant)
            args.append(f"{p.name}={src}")
        lines.append(f"{var[t]} = call_tool({_lit(t)}, {', '.join(args)})")
    groups = []
    for t in tools:
        fields = ", ".join(f"{f}: {var[t]}.{f}" for f in fam.tool(t).field_names)
        groups.append(f"{t}: {{{fields}}}")
    lines.append("entry = {" + ", ".join(groups) + "}")
    return lines


def _metric_lines(metric: Metric, guarded: bool) -> list[str]:
    refs = [f"entry.{t}.{f}" for t, f, _, _ in metric.terms]
    body = ["acc = 0"]
    for (_, _, w, cap), ref in zip(metric.terms, refs):
        body += [f"val = {ref}", f"if val > {_num(cap)} {{", f"val = {_num(cap)}", "}",
                 f"acc = acc + {_num(w)} * (val / {_num(cap)})"]
    body.append(f"entry.{metric.name} = round({_num(metric.offset)} + acc * {_num(metric.scale)}, "
                f"{metric.digits})")
    if not guarded:
        return body
    cond = " and ".join(f"{r} != null" for r in refs)
    return [f"entry.{metric.name} = null", f"if {cond} {{", *body, "}"]


def _band_lines(fam: Family, band, guarded: bool) -> list[str]:
    ref = f"entry.{band.source}"
    chain = ""
    for at, label in band.cuts:
        chain += f"if {ref} >= {_num(at)} {{\nentry.{band.name} = {_lit(label)}\n}} else "
    chain += f"{{\nentry.{band.name} = {_lit(band.default)}\n}}"
    if not guarded:
        return [chain]
    return [f"entry.{band.name} = null", f"if {ref} != null {{", chain, "}"]


def _derived_lines(fam: Family, tools, guarded: bool) -> list[str]:
    lines = []
    for m in fam.active_metrics(tools):
        lines += _metric_lines(m, guarded)
    for b in fam.active_bands(tools):
        lines += _band_lines(fam, b, guarded)
    return lines


def _canonical(lines) -> str:
    return render_canonical(parse("\n".join(lines) + "\n"))


def compose_skill(task: Task, param_name: str | None = None, tools=None, *,
                  guarded: bool = True) -> str:
    """A one-entity skill: call the tools, keep the oracle fields, add derived values.

    ``guarded`` skips a derived value when one of its inputs is null; the unguarded
    form lets the null reach the arithmetic and fail there.
    """
    fam = get_family(task.family)
    tools = list(task.required_tools if tools is None else tools)
    param = param_name or entity_param(fam)
    lines = _fetch_lines(fam, tools, param) + _derived_lines(fam, tools, guarded) + ["result = entry"]
    return _canonical(lines)


def compose_direct(task: Task) -> str:
    """A parameterless script with the task's entities written in."""
    fam = get_family(task.family)
    tools = list(task.required_tools)
    body = _fetch_lines(fam, tools, "item") + _derived_lines(fam, tools, True) + ["out[item] = entry"]
    lines = [f"entities = {_lit(list(task.entities))}", "out = {}", "for item in entities {",
             *body, "}", "result = out"]
    return _canonical(lines)


def compose_hierarchy(task: Task, names: dict) -> dict:
    """Low (fetch), medium (derive) and high (loop) scripts keyed by tier."""
    fam = get_family(task.family)
    tools = list(task.required_tools)
    param = entity_param(fam)
    low = _fetch_lines(fam, tools, param) + ["result = entry"]
    medium = ([f"entry = call_tool(\"execute_skill\", skill_name={_lit(names['low'])}, "
               f"args={{{param}: {param}}})"]
              + _derived_lines(fam, tools, guarded=False) + ["result = entry"])
    high = ["out = {}", "for item in entities {",
            f"out[item] = call_tool(\"execute_skill\", skill_name={_lit(names['medium'])}, "
            f"args={{{param}: item}})", "}", "result = out"]
    return {"low": _canonical(low), "medium": _canonical(medium), "high": _canonical(high)}


def signature_token(family: str, tools, tier: str | None = None) -> str:
    tag = f"[sig {family}:{'+'.join(tools)}"
    return tag + (f" tier={tier}]" if tier else "]")


_SIG = re.compile(r"^Skill \d+: (\S+) -- .*\[sig ([^:\]]+):([^\]\s]+)(?: tier=(\w+))?\]")


def find_skill(listing: str, family: str, tools, *, superset: bool = False, tier=None):
    """Name of the first listed skill whose signature matches, else None."""
    want = sorted(tools)
    for line in listing.splitlines():
        m = _SIG.match(line)
        if not m or m.group(2) != family or m.group(4) != tier:
            continue
        have = sorted(m.group(3).split("+"))
        if have == want or (superset and set(want) <= set(have)):
            return m.group(1)
    return None


def skill_name(fam: Family, n_tools: int) -> str:
    noun = re.sub(r"\W+", "_", fam.noun.lower())
    return f"process_{noun}_{SUFFIX.get(n_tools, f'{n_tools}_tools')}"


def project(entry, fam: Family, tools):
    """Keep only the keys a task with ``tools`` expects."""
    if not isinstance(entry, dict):
        return entry
    keys = list(tools) + [m.name for m in fam.active_metrics(tools)] + \
        [b.name for b in fam.active_bands(tools)]
    return {k: entry[k] for k in keys if k in entry}


# -- episodes -------------------------------------------------------------------------

@dataclass
class Env:
    registry: Registry
    workspace: Workspace
    library: SkillLibrary | None = None


class Terminated(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class EpisodeTrace:
    task_id: str
    mode: str
    turns: list = field(default_factory=list)
    skill_events: list = field(default_factory=list)
    counters: Counters = field(default_factory=Counters)
    final_status: str | None = None  # claimed_done | limit_exceeded | aborted
    reason: str | None = None

    def to_jsonl(self) -> str:
        return "".join(canonical_json(t) + "\n" for t in self.turns)

    def write(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.to_jsonl().encode("utf-8"))
        return path

    def summary(self) -> dict:
        return {"task_id": self.task_id, "mode": self.mode, "final_status": self.final_status,
                "reason": self.reason, "counters": self.counters.to_dict()}


class Episode:
    """Turn bookkeeping around a Session, with limits checked before every turn."""

    def __init__(self, task: Task, mode: str, env: Env, *, token_model: TokenModel = TokenModel(),
                 limits: Limits = Limits(), prompt: str | None = None, clock=time.monotonic):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == "static" and (env.library is None or not env.library.locked):
            raise ValueError("static mode needs a locked library")
        self.task, self.mode, self.env = task, mode, env
        self.token_model, self.limits, self.clock = token_model, limits, clock
        self.session = Session(env.registry, env.workspace, env.library, task)
        self.prompt = prompt if prompt is not None else render_prompt(task)
        self.trace = EpisodeTrace(task.id, mode)
        self.context_bytes = len(SYSTEM_PROMPTS[mode].encode()) + len(self.prompt.encode())
        self.started = clock()

    def call(self, tool: str, args: dict):
        """One turn. Returns (ok, value); raises Terminated when a limit refuses the turn."""
        c = self.trace.counters
        message = canonical_bytes({"tool": tool, "args": args})
        t_in = count_tokens(self.context_bytes, self.token_model)
        t_out = count_tokens(len(message), self.token_model)
        verdict = enforce_limits(c, self.limits, request_in=t_in, request_out=t_out,
                                 elapsed_s=self.clock() - self.started)
        if verdict.terminate:
            self.trace.final_status, self.trace.reason = "limit_exceeded", verdict.reason
            raise Terminated(verdict.reason)
        ok = True
        try:
            if tool == EXEC_SCRIPT and self.mode == "direct":
                value = self.session.exec_script(args.get("script_code", ""))
            else:
                value = self.session.call_tool(tool, args)
            if tool in _REPORTING and isinstance(value, dict) and value.get("status") == "failed":
                ok = False
        except RequestError as exc:
            ok, value = False, {"error": exc.to_dict()}
        result = canonical_bytes(value)
        events = self.session.drain_events()
        c.turn_count += 1
        c.tool_call_count += 1
        c.in_tokens += t_in
        c.out_tokens += t_out
        self.trace.turns.append({
            "turn": c.turn_count, "role": "assistant",
            "bytes_in": self.context_bytes, "bytes_out": len(message),
            "tool_calls": [{"tool": tool, "args": args, "ok": ok, "result_bytes": len(result)}],
            "skill_events": events, "counters": c.to_dict(),
        })
        self.trace.skill_events.extend(events)
        self.context_bytes += len(message) + len(result)
        return ok, value

    # -- shared steps -----------------------------------------------------------------
    def atomic_entry(self, entity: str, tools=None) -> dict:
        fam = self.env.registry.schema
        tools = list(self.task.required_tools if tools is None else tools)
        responses, groups = {}, {}
        for t in tools:
            tdef = fam.tool(t)
            ok, value = self.call(t, resolve_args(tdef, entity, responses))
            responses[t] = value if ok else None
            groups[t] = oracle_fields(tdef, responses[t])
        return assemble_entry(fam, tools, groups)

    def finish(self, output) -> EpisodeTrace:
        content = json.dumps(output, ensure_ascii=False, indent=2)
        self.call("write_file", {"path": self.task.output_file, "content": content})
        ok, _ = self.call("claim_done", {"status": f"Results saved to {self.task.output_file}."})
        self.trace.final_status = "claimed_done" if ok else "aborted"
        return self.trace

    def abort(self, reason: str) -> EpisodeTrace:
        self.trace.final_status, self.trace.reason = "aborted", reason
        return self.trace


def _guarded(fn):
    """Run a policy body, turning a limit refusal into a finished trace."""
    def run(ep: Episode, *args, **kwargs) -> EpisodeTrace:
        try:
            return fn(ep, *args, **kwargs)
        except Terminated:
            return ep.trace
    run.__name__, run.__doc__ = fn.__name__, fn.__doc__
    return run


def _episode(task, mode, env, kw) -> Episode:
    return Episode(task, mode, env, **kw)


# -- policies ---------------------------------------------------------------------------

@_guarded
def _baseline(ep: Episode) -> EpisodeTrace:
    return ep.finish({e: ep.atomic_entry(e) for e in ep.task.entities})


def run_baseline(task: Task, env: Env, **kw) -> EpisodeTrace:
    """Every required tool for every entity, then write and claim."""
    return _baseline(_episode(task, "base", env, kw))


def _execute_with_fallback(ep: Episode, name: str, param: str, entity: str):
    for _ in range(FALLBACK_AFTER):
        ok, value = ep.call("execute_skill", {"skill_name": name, "args": {param: entity}})
        if ok:
            # a skill built over more tools than the task needs carries extra groups
            return project(value["result"], ep.env.registry.schema, ep.task.required_tools)
    return ep.atomic_entry(entity)


@_guarded
def _skill(ep: Episode, compose_tools=None) -> EpisodeTrace:
    task, fam = ep.task, ep.env.registry.schema
    tools = list(task.required_tools if compose_tools is None else compose_tools)
    param = entity_param(fam)
    _, listing = ep.call("list_skills", {})
    name = find_skill(listing if isinstance(listing, str) else "", fam.slug, tools)
    if name is None:
        name = skill_name(fam, len(tools))
        desc = (f"Collect {', '.join(tools)} for one {fam.noun} with derived fields "
                + signature_token(fam.slug, tools))
        ok, _ = ep.call("save_skill", {"skill_name": name,
                                       "script_code": compose_skill(task, param, tools),
                                       "parameters": [param], "description": desc})
        if not ok:
            return ep.finish({e: ep.atomic_entry(e) for e in task.entities})
    return ep.finish({e: _execute_with_fallback(ep, name, param, e)
                      for e in task.entities})


def run_skill(task: Task, env: Env, *, compose_tools=None, **kw) -> EpisodeTrace:
    """List, reuse or compose-and-save, execute per entity, fall back after 3 failures."""
    return _skill(_episode(task, "skill", env, kw), compose_tools)


@_guarded
def _hierarchical(ep: Episode) -> EpisodeTrace:
    task, fam = ep.task, ep.env.registry.schema
    tools = list(task.required_tools)
    base = skill_name(fam, len(tools)).removeprefix("process_")
    names = {"low": f"fetch_{base}", "medium": f"analyze_{base}", "high": f"compile_{base}_report"}
    _, listing = ep.call("list_skills", {})
    listing = listing if isinstance(listing, str) else ""
    scripts = None
    for tier in ("low", "medium", "high"):
        found = find_skill(listing, fam.slug, tools, tier=tier)
        if found is not None:
            names[tier] = found
            continue
        if scripts is None:
            scripts = compose_hierarchy(task, names)
        params = ["entities"] if tier == "high" else [entity_param(fam)]
        desc = f"{tier.capitalize()}-level {fam.noun} skill " + signature_token(fam.slug, tools, tier)
        ok, _ = ep.call("save_skill", {"skill_name": names[tier], "script_code": scripts[tier],
                                       "parameters": params, "description": desc})
        if not ok:
            return ep.abort(f"could not save {tier}-level skill")
    for _ in range(HIER_ATTEMPTS):
        ok, value = ep.call("execute_skill", {"skill_name": names["high"],
                                              "args": {"entities": list(task.entities)}})
        if ok:
            return ep.finish(value["result"])
    return ep.abort("top-level skill failed")


def run_hierarchical(task: Task, env: Env, **kw) -> EpisodeTrace:
    """Three nested skills and a single top-level execute; no per-entity fallback."""
    if env.library is None or not env.library.hierarchical:
        raise ValueError("hierarchical mode needs a library with nested dispatch enabled")
    return _hierarchical(_episode(task, "hier", env, kw))


@_guarded
def _direct(ep: Episode) -> EpisodeTrace:
    ok, value = ep.call(EXEC_SCRIPT, {"script_code": compose_direct(ep.task)})
    if ok:
        return ep.finish(value["result"])
    return ep.finish({e: ep.atomic_entry(e) for e in ep.task.entities})


def run_direct_exec(task: Task, env: Env, **kw) -> EpisodeTrace:
    """One hardcoded transient script; atomic calls for everything if it fails."""
    return _direct(_episode(task, "direct", env, kw))


@_guarded
def _reuse_only(ep: Episode) -> EpisodeTrace:
    task, fam = ep.task, ep.env.registry.schema
    name = find_skill(_summary_listing(ep.env.library), fam.slug, task.required_tools,
                      superset=True)
    if name is None:
        return ep.finish({e: ep.atomic_entry(e) for e in task.entities})
    param = entity_param(fam)
    return ep.finish({e: _execute_with_fallback(ep, name, param, e)
                      for e in task.entities})


def _summary_listing(lib: SkillLibrary) -> str:
    # the agent reads the injected summary; the same descriptions drive matching
    return lib.list_skills() if lib is not None else ""


def run_reuse_only(task: Task, env: Env, **kw) -> EpisodeTrace:
    """Execute inherited skills from a locked library; never save."""
    prompt = inject_cross_summary(render_prompt(task), env.library)
    return _reuse_only(Episode(task, "static", env, prompt=prompt, **kw))


def run_static_phases(source_tasks, target_tasks, env_factory, **kw):
    """Accumulate a cache per family over the source tasks, then reuse it read-only.

    ``env_factory(task, phase, cache)`` must return an Env whose library is loaded
    from ``cache`` (a path, or None for an empty library) and, in phase 2, locked.
    Phase-1 skills are composed over the family's first five tools so they cover
    any target level. Returns (phase1 traces, phase2 traces).
    """
    caches: dict[str, Path] = {}
    phase1 = []
    for task in source_tasks:
        fam = get_family(task.family)
        env = env_factory(task, 1, caches.get(task.family))
        phase1.append(run_skill(task, env, compose_tools=fam.tool_names[:5], **kw))
        if env.library is not None and env.library.cache_path is not None:
            caches[task.family] = env.library.cache_path
    phase2 = []
    for task in target_tasks:
        env = env_factory(task, 2, caches.get(task.family))
        phase2.append(run_reuse_only(task, env, **kw))
    return phase1, phase2


@_guarded
def _looping(ep: Episode) -> EpisodeTrace:
    first = ep.task.entities[0]
    ep.call("write_file", {"path": ep.task.output_file,
                           "content": json.dumps({first: ep.atomic_entry(first)}, indent=2)})
    while True:
        ep.call("list_directory", {"path": "."})


def run_looping(task: Task, env: Env, **kw) -> EpisodeTrace:
    """Adversarial agent: saves one entity, then lists the directory forever."""
    return _looping(_episode(task, "base", env, kw))


def copy_cache(src, dst) -> Path:
    dst = Path(dst)
    dst.parent.mkdir(parents=True, exist_ok=True)
    shutil.copyfile(src, dst)
    return dst


POLICIES = {"base": run_baseline, "skill": run_skill, "hier": run_hierarchical,
            "direct": run_direct_exec, "static": run_reuse_only}
