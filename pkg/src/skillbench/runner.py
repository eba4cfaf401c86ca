"""Run a mode over a task manifest and lay results out on disk.

Layout: ``<run>/<task_id>/{workspace/, <mode>.trace.jsonl, skill_cache.json, result.json}``
plus ``<run>/metrics.json``. Static runs keep their source phase under ``<run>/phase1/``.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .accounting import Limits, TokenModel
from .library import DEFAULT_NESTING_LIMIT, SkillLibrary
from .metrics import EpisodeMetrics, RunMetrics, episode_metrics
from .policies import MODES, POLICIES, Env, copy_cache, run_static_phases
from .tasks import Task, score
from .tools.fabric import build_registry, make_workspace, oracle

log = logging.getLogger(__name__)

CACHE_FILE = "skill_cache.json"


@dataclass
class RunConfig:
    mode: str
    seed: int = 0
    # family slug -> entity names whose responses come back degraded
    edge_cases: dict = field(default_factory=dict)
    nesting_limit: int = DEFAULT_NESTING_LIMIT
    workers: int = 1
    token_model: TokenModel = field(default_factory=TokenModel)
    limits: Limits = field(default_factory=Limits)
    static_source: str = "easy"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {', '.join(MODES)}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def to_dict(self) -> dict:
        return {"mode": self.mode, "seed": self.seed, "edge_cases": self.edge_cases,
                "nesting_limit": self.nesting_limit, "workers": self.workers,
                "token_model": vars(self.token_model), "limits": vars(self.limits),
                "static_source": self.static_source}


def load_edge_cases(path) -> dict:
    """``{"family": ["entity", ...]}``; a bare list applies to every family."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, list):
        return {"*": [str(x) for x in data]}
    if not isinstance(data, dict) or not all(isinstance(v, list) for v in data.values()):
        raise ValueError(f"{path}: expected an object of family -> entity list")
    return {k: [str(x) for x in v] for k, v in data.items()}


def _edges(cfg: RunConfig, family: str):
    return tuple(cfg.edge_cases.get(family, ())) + tuple(cfg.edge_cases.get("*", ()))


def make_env(task: Task, run_dir, cfg: RunConfig, *, library: bool, locked: bool = False,
             cache_from=None) -> Env:
    reg = build_registry(task.family, cfg.seed, _edges(cfg, task.family))
    ws = make_workspace(task.id, run_dir)
    lib = None
    if library:
        cache = Path(run_dir) / task.id / CACHE_FILE
        if cache_from is not None:
            copy_cache(cache_from, cache)
        lib = SkillLibrary.load(cache, locked=locked, hierarchical=cfg.mode == "hier",
                                nesting_limit=cfg.nesting_limit)
    return Env(reg, ws, lib)


def _finish(task: Task, env: Env, trace, run_dir, cfg: RunConfig) -> EpisodeMetrics:
    tdir = Path(run_dir) / task.id
    trace.write(tdir / f"{trace.mode}.trace.jsonl")
    report = score(task, env.workspace, oracle(env.registry, task))
    m = episode_metrics(trace, task, report, cfg.token_model)
    result = {"task": task.to_dict(), "trace": trace.summary(), "score": report.to_dict(),
              "metrics": m.to_dict()}
    (tdir / "result.json").write_text(json.dumps(result, indent=2) + "\n", encoding="utf-8")
    return m


def run_episode(task: Task, run_dir, cfg: RunConfig) -> EpisodeMetrics:
    if cfg.mode == "static":
        raise ValueError("static mode runs in two phases; use run_suite")
    env = make_env(task, run_dir, cfg, library=cfg.mode in ("skill", "hier"))
    trace = POLICIES[cfg.mode](task, env, token_model=cfg.token_model, limits=cfg.limits)
    log.debug("%s %s: %s", cfg.mode, task.id, trace.final_status)
    return _finish(task, env, trace, run_dir, cfg)


def _run_static(tasks, out: Path, cfg: RunConfig):
    source = [t for t in tasks if t.difficulty == cfg.static_source]
    target = [t for t in tasks if t.difficulty != cfg.static_source]
    envs: dict[tuple, Env] = {}

    def factory(task, phase, cache):
        run_dir = out / "phase1" if phase == 1 else out
        env = make_env(task, run_dir, cfg, library=True, locked=phase == 2, cache_from=cache)
        envs[(phase, task.id)] = env
        return env

    kw = {"token_model": cfg.token_model, "limits": cfg.limits}
    p1, p2 = run_static_phases(source, target, factory, **kw)
    phase1 = RunMetrics([_finish(t, envs[(1, t.id)], tr, out / "phase1", cfg)
                         for t, tr in zip(source, p1)])
    _write_metrics(phase1, out / "phase1")
    return RunMetrics([_finish(t, envs[(2, t.id)], tr, out, cfg) for t, tr in zip(target, p2)])


def _write_metrics(run: RunMetrics, out: Path):
    out.mkdir(parents=True, exist_ok=True)
    (out / "metrics.json").write_text(json.dumps(run.to_dict(), indent=2) + "\n", encoding="utf-8")


def run_suite(tasks, out, cfg: RunConfig) -> RunMetrics:
    """Run every task under ``cfg.mode``; episodes are independent and may run in parallel."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    tasks = list(tasks)
    if cfg.mode == "static":
        run = _run_static(tasks, out, cfg)
    elif cfg.workers == 1:
        run = RunMetrics([run_episode(t, out, cfg) for t in tasks])
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            run = RunMetrics(list(pool.map(lambda t: run_episode(t, out, cfg), tasks)))
    (out / "run.json").write_text(json.dumps(cfg.to_dict(), indent=2) + "\n", encoding="utf-8")
    _write_metrics(run, out)
    return run


def load_run(out) -> RunMetrics:
    path = Path(out) / "metrics.json"
    if not path.is_file():
        raise FileNotFoundError(f"{path} not found; is {out} a run directory?")
    return RunMetrics.from_dict(json.loads(path.read_text(encoding="utf-8")))
