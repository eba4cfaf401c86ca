"""Skill composition and reuse benchmark for tool-using agents, run by scripted policies."""
from .accounting import Limits, TokenModel, count_tokens, enforce_limits
from .library import SkillLibrary
from .metrics import RunMetrics, aggregate, compare, emit_report
from .policies import (
    Env,
    compose_skill,
    run_baseline,
    run_direct_exec,
    run_hierarchical,
    run_skill,
    run_static_phases,
)
from .runner import RunConfig, run_suite
from .session import Session
from .tasks import Task, generate_suite, render_prompt, score
from .tools import build_registry, make_workspace, oracle

__version__ = "0.1.0"
