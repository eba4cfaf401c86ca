import json
import shutil

import pytest

from skillbench.library import (
    CacheError,
    LockedLibrary,
    ParameterMismatch,
    SkillLibrary,
    UnknownSkill,
    VerifierRejected,
    quality_check,
)
from skillbench.policies import compose_skill
from skillbench.tasks import make_task
from skillbench.tools import build_registry, data_response

COCKTAILS = ["Margarita", "Mojito", "Old Fashioned", "Martini", "Negroni"]


@pytest.fixture
def cocktail():
    task = make_task("cocktail-menu-generator", "h1", COCKTAILS)
    reg = build_registry(task.family, 0)
    return task, (lambda tool, kw: data_response(reg, tool, kw))


def echo(tool, kw):
    return dict(kw)


def test_save_acknowledgement(tmp_path, cocktail):
    task, _ = cocktail
    lib = SkillLibrary(tmp_path / "skill_cache.json")
    msg = lib.save_skill("process_cocktail_complete", compose_skill(task, "name"), ["name"], "menu")
    assert msg == "Skill 'process_cocktail_complete' saved successfully."
    assert lib.get_skill("process_cocktail_complete")["version"] == 1


def test_resave_bumps_version_and_keeps_source_verbatim():
    lib = SkillLibrary()
    lib.save_skill("s", "result = 1", [])
    src = "result   =   2  # odd spacing\n"
    lib.save_skill("s", src, [])
    got = lib.get_skill("s")
    assert got == {"script_code": src, "parameters": [], "version": 2}


def test_syntax_rejection_reports_line():
    src = "a = 1\nb = 2\nc = 3\nd = 4\ne = 5\nf = 6\ng = 7\n}\nresult = a\n"
    lib = SkillLibrary()
    with pytest.raises(VerifierRejected) as exc:
        lib.save_skill("bad", src, [])
    report = exc.value.report
    assert report.stage == "syntax" and not report.passed
    assert report.detail.line == 8
    assert "bad" not in lib.entries


def test_parameter_mismatch_lists_missing_names():
    lib = SkillLibrary()
    with pytest.raises(ParameterMismatch) as exc:
        lib.save_skill("p", "result = a + b", ["a"])
    assert exc.value.missing == ["b"]


def test_locked_library_rejects_saves():
    lib = SkillLibrary(locked=True)
    with pytest.raises(LockedLibrary):
        lib.save_skill("x", "result = 1", [])


def test_listing_format():
    lib = SkillLibrary()
    assert lib.list_skills() == ""
    for name in ("one", "two", "three"):
        lib.save_skill(name, "result = 1", [], f"the {name}")
    assert lib.list_skills().splitlines() == [
        "Skill 1: one -- the one", "Skill 2: two -- the two", "Skill 3: three -- the three"]


def test_get_unknown():
    with pytest.raises(UnknownSkill):
        SkillLibrary().get_skill("nope")


def test_execute_unknown():
    with pytest.raises(UnknownSkill):
        SkillLibrary().execute_skill("nope", {}, echo)


def test_execute_composed_cocktail_skill(cocktail):
    task, tools = cocktail
    lib = SkillLibrary()
    lib.save_skill("process_cocktail_complete", compose_skill(task, "name"), ["name"])
    out = lib.execute_skill("process_cocktail_complete", {"name": "Margarita"}, tools)
    assert out.ok and out.depth_used == 1
    groups = [k for k in out.result if k in task.required_tools]
    assert groups == list(task.required_tools)
    assert all(v is not None for g in groups for v in out.result[g].values())
    assert lib.entries["process_cocktail_complete"].success_count == 1


@pytest.mark.parametrize("record,ratio,passed", [
    ({"f1": None, "f2": "Unknown", "f3": 0, "f4": "x", "f5": 2}, 0.6, False),
    ({"a": 1, "b": "ok"}, 0.0, True),
    ({"a": None, "b": 1}, 0.5, True),
    ({"a": None, "b": "NONE", "c": "x", "d": 3}, 0.5, True),
    ({"a": "0", "b": None}, 0.5, True),
    ({}, 1.0, False),
    ({"a": {"b": [None, None, 1]}}, 2 / 3, False),
    (7, 0.0, True),
])
def test_quality_check(record, ratio, passed):
    f = quality_check(record)
    assert f.ratio == pytest.approx(ratio)
    assert f.passed is passed


def test_quality_rejection_on_execute():
    lib = SkillLibrary()
    lib.save_skill("q", 'result = {f1: null, f2: "Unknown", f3: 0, f4: "x", f5: 2}', [])
    out = lib.execute_skill("q", {}, echo)
    assert out.status == "failed"
    assert out.report.stage == "quality"
    assert out.result["ratio"] == pytest.approx(0.6)
    assert out.result["flagged_paths"] == ["$.f1", "$.f2", "$.f3"]
    assert lib.entries["q"].failure_count == 1


def test_quality_boundary_passes():
    lib = SkillLibrary()
    lib.save_skill("q", 'result = {a: null, b: 0, c: "x", d: 2}', [])
    assert lib.execute_skill("q", {}, echo).ok


def test_runtime_failure_carries_inputs_and_trace():
    lib = SkillLibrary()
    src = 'r = call_tool("lookup", key=key)\nw = r.weight + 1\nresult = w'
    lib.save_skill("w", src, ["key"])
    out = lib.execute_skill("w", {"key": "Persian"}, lambda t, kw: {"weight": None})
    assert out.status == "failed"
    assert out.result["kind"] == "type_error"
    assert out.result["inputs"] == {"key": "Persian"}
    assert out.result["line"] == 2
    assert out.result["trace"][-1]["skill"] == "w"


def test_stray_return_in_cached_script_fails_with_line():
    lib = SkillLibrary.from_dict({"skills": {"bad": {
        "script_code": "x = 1\nreturn x\n", "parameters": [], "description": "",
        "version": 1, "execution_stats": {"success_count": 0, "failure_count": 0}}}})
    out = lib.execute_skill("bad", {}, echo)
    assert out.status == "failed"
    assert out.result["stage"] == "syntax" and out.result["line"] == 2


def test_arguments_must_match_parameters():
    lib = SkillLibrary()
    lib.save_skill("s", "result = a", ["a"])
    out = lib.execute_skill("s", {"b": 1}, echo)
    assert out.status == "failed" and out.result["kind"] == "arity_error"


def test_flat_mode_forbids_skill_calls_in_scripts():
    lib = SkillLibrary()
    lib.save_skill("inner", "result = 1", [])
    lib.save_skill("outer", 'result = call_tool("execute_skill", skill_name="inner", args={})', [])
    out = lib.execute_skill("outer", {}, echo)
    assert out.status == "failed" and out.result["kind"] == "unknown_tool"


def _tower(lib, height):
    lib.save_skill("s1", "result = {v: x + 1}", ["x"])
    for i in range(2, height + 1):
        lib.save_skill(f"s{i}", f'r = call_tool("execute_skill", skill_name="s{i - 1}", args={{x: x}})\n'
                                f"result = {{v: r.v + 1}}", ["x"])


def test_nesting_depth_reported():
    lib = SkillLibrary(hierarchical=True)
    _tower(lib, 4)
    out = lib.execute_skill("s4", {"x": 0}, echo)
    assert out.ok and out.depth_used == 4 and out.result == {"v": 4}


@pytest.mark.parametrize("limit", [1, 2, 3])
def test_nesting_limit(limit):
    lib = SkillLibrary(hierarchical=True, nesting_limit=limit)
    _tower(lib, 4)
    out = lib.execute_skill("s4", {"x": 0}, echo)
    assert out.status == "failed"
    assert out.result["kind"] == "depth_exceeded"
    assert out.depth_used <= limit


def test_default_nesting_limit_is_ten():
    lib = SkillLibrary(hierarchical=True)
    _tower(lib, 11)
    assert lib.execute_skill("s10", {"x": 0}, echo).ok
    out = lib.execute_skill("s11", {"x": 0}, echo)
    assert out.result["kind"] == "depth_exceeded" and out.depth_used == 10


def test_stats_count_every_execution():
    lib = SkillLibrary()
    lib.save_skill("s", "result = {v: 10 / x}", ["x"])
    for x in (1, 0, 2, 0, 5):
        lib.execute_skill("s", {"x": x}, echo)
    e = lib.entries["s"]
    assert (e.success_count, e.failure_count) == (3, 2)


def test_locked_library_state_is_unchanged(tmp_path):
    path = tmp_path / "skill_cache.json"
    lib = SkillLibrary(path)
    lib.save_skill("s", "result = {v: x}", ["x"])
    before = path.read_bytes()
    locked = SkillLibrary.load(path, locked=True)
    locked.execute_skill("s", {"x": 1}, echo)
    with pytest.raises(LockedLibrary):
        locked.save_skill("t", "result = 1", [])
    assert path.read_bytes() == before
    assert locked.to_dict() == lib.to_dict()


def test_empty_library_file(tmp_path):
    lib = SkillLibrary(tmp_path / "c.json")
    lib.persist()
    assert (tmp_path / "c.json").read_text() == '{"skills": {}}'


def test_persist_load_round_trip(tmp_path):
    path = tmp_path / "skill_cache.json"
    lib = SkillLibrary(path)
    lib.save_skill("b", "result = {v: x}", ["x"], "second é")
    lib.save_skill("a", "result = 1", [], "first")
    lib.execute_skill("b", {"x": 3}, echo)
    loaded = SkillLibrary.load(path)
    assert loaded.entries == lib.entries
    assert list(loaded.entries) == ["b", "a"]
    copy = tmp_path / "other" / "skill_cache.json"
    copy.parent.mkdir()
    shutil.copyfile(path, copy)
    assert SkillLibrary.load(copy).serialize() == lib.serialize()


def test_cache_schema_layout(tmp_path):
    path = tmp_path / "skill_cache.json"
    SkillLibrary(path).save_skill("s", "result = p", ["p"], "d")
    data = json.loads(path.read_text())
    assert data == {"skills": {"s": {"script_code": "result = p", "parameters": ["p"],
                                     "description": "d", "version": 1,
                                     "execution_stats": {"success_count": 0, "failure_count": 0}}}}


@pytest.mark.parametrize("doc,field", [
    ({"skill": {}}, "skills"),
    ({"skills": {"s": {"parameters": [], "description": "", "version": 1,
                       "execution_stats": {"success_count": 0, "failure_count": 0}}}},
     "skills.s.script_code"),
    ({"skills": {"s": {"script_code": "", "parameters": [], "description": "", "version": 0,
                       "execution_stats": {"success_count": 0, "failure_count": 0}}}},
     "skills.s.version"),
    ({"skills": {"s": {"script_code": "", "parameters": [], "description": "", "version": 1,
                       "execution_stats": {"success_count": -1, "failure_count": 0}}}},
     "skills.s.execution_stats.success_count"),
])
def test_malformed_cache_names_path_and_field(tmp_path, doc, field):
    path = tmp_path / "skill_cache.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(CacheError) as exc:
        SkillLibrary.load(path)
    assert str(path) in str(exc.value) and field in str(exc.value)


def test_cache_not_json(tmp_path):
    path = tmp_path / "skill_cache.json"
    path.write_text("{")
    with pytest.raises(CacheError):
        SkillLibrary.load(path)


def test_macro_aliases():
    from skillbench.library import canonical_primitive
    assert canonical_primitive("save_macro") == "save_skill"
    assert canonical_primitive("list_macros") == "list_skills"
    assert canonical_primitive("call_tool") is None
