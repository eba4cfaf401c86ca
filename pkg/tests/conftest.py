import itertools

import pytest

from skillbench.library import SkillLibrary
from skillbench.policies import Env
from skillbench.tasks import generate_suite
from skillbench.tools import build_registry, make_workspace

_ids = itertools.count()


@pytest.fixture(scope="session")
def suite():
    return generate_suite()


@pytest.fixture
def task_of(suite):
    def pick(family_prefix, level):
        return next(t for t in suite if t.family.startswith(family_prefix) and t.level == level)
    return pick


@pytest.fixture
def make_env(tmp_path):
    """Env factory: a fresh workspace per call, optional library under the task dir."""
    def build(task, *, edge=(), library=True, seed=0, **lib_kw):
        run = tmp_path / f"run{next(_ids)}"
        reg = build_registry(task.family, seed, edge)
        ws = make_workspace(task.id, run)
        lib = SkillLibrary(run / task.id / "skill_cache.json", **lib_kw) if library else None
        return Env(reg, ws, lib)
    return build


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n][1])
