import json
import subprocess
import sys

import pytest

from skillbench.cli import main
from skillbench.metrics import HEADERS
from skillbench.runner import RunConfig, load_edge_cases, load_run

FAMS = "cat-facts-collector,cocktail-menu-generator"


@pytest.fixture
def manifest(tmp_path):
    path = tmp_path / "tasks.json"
    assert main(["gen-suite", "--families", FAMS, "--seed", "0", "--out", str(path)]) == 0
    return path


def run(tmp_path, manifest, mode, name=None, *extra):
    out = tmp_path / (name or mode)
    assert main(["run", "--mode", mode, "--tasks", str(manifest), "--out", str(out), *extra]) == 0
    return out


def test_gen_suite(manifest):
    tasks = json.loads(manifest.read_text())["tasks"]
    assert len(tasks) == 12


def test_gen_suite_rejects_unknown_family(tmp_path):
    with pytest.raises(SystemExit):
        main(["gen-suite", "--families", "nope", "--out", str(tmp_path / "t.json")])


def test_run_layout(tmp_path, manifest):
    out = run(tmp_path, manifest, "skill")
    tdir = out / "cocktail-menu-generator" / "h1"
    assert (tdir / "skill.trace.jsonl").is_file()
    assert (tdir / "skill_cache.json").is_file()
    assert (tdir / "workspace" / "cocktail_menu.json").is_file()
    first = json.loads((tdir / "skill.trace.jsonl").read_text().splitlines()[0])
    assert {"turn", "role", "bytes_in", "bytes_out", "tool_calls", "skill_events"} <= set(first)
    result = json.loads((tdir / "result.json").read_text())
    assert result["score"]["total"] == 100
    m = load_run(out)
    assert len(m.episodes) == 12 and all(e.success for e in m.episodes)
    assert json.loads((out / "run.json").read_text())["mode"] == "skill"


def test_compare_writes_reports(tmp_path, manifest, capsys):
    base = run(tmp_path, manifest, "base")
    skill = run(tmp_path, manifest, "skill")
    capsys.readouterr()
    assert main(["compare", "--base", str(base), "--variant", str(skill), "--format", "md"]) == 0
    md = (skill / "report.md").read_text()
    assert md == capsys.readouterr().out
    assert md.startswith("| " + " | ".join(HEADERS))
    cells = [c.strip() for c in md.splitlines()[2].strip("|").split("|")]
    # per family: 3 easy (N=3), 2 medium (N=4), 1 hard (N=5); one save per task
    n_sum = 3 * 3 + 2 * 4 + 5
    base_turns = (3 * 9 + 2 * 16 + 25) / 6 + 2
    skill_turns = n_sum / 6 + 4  # list, save, N executes, write, claim
    assert cells[:3] == ["skill", "100%", f"{n_sum / 6:.1f}x"]
    assert cells[9:12] == [f"{base_turns:.1f}", f"{skill_turns:.1f}",
                           f"{(skill_turns - base_turns) / base_turns * 100:+.0f}%"]
    assert cells[12:15] == cells[9:12]
    assert cells[5].startswith("-")
    assert main(["compare", "--base", str(base), "--variant", str(skill), "--format", "csv",
                 "--out", str(tmp_path / "rep")]) == 0
    assert (tmp_path / "rep" / "report.csv").read_text().splitlines()[0] == ",".join(HEADERS)


def test_reports_deterministic(tmp_path, manifest):
    reports = []
    for i in range(2):
        base = run(tmp_path, manifest, "base", f"b{i}")
        var = run(tmp_path, manifest, "direct", f"d{i}")
        main(["compare", "--base", str(base), "--variant", str(var), "--format", "csv"])
        reports.append((var / "report.csv").read_bytes())
        traces = sorted(p.read_bytes() for p in var.rglob("*.trace.jsonl"))
        reports.append(b"".join(traces))
    assert reports[0] == reports[2] and reports[1] == reports[3]


def test_static_run(tmp_path, manifest):
    out = run(tmp_path, manifest, "static")
    m = load_run(out)
    assert {e.difficulty for e in m.episodes} == {"medium", "hard"}
    assert all(e.skills_saved == 0 and e.exec_rate == 1.0 for e in m.episodes)
    assert load_run(out / "phase1").episodes[0].difficulty == "easy"


def test_edge_cases_and_nesting_limit(tmp_path, manifest):
    edges = tmp_path / "edges.json"
    edges.write_text(json.dumps({"cocktail-menu-generator": ["Mojito"]}))
    hier = run(tmp_path, manifest, "hier", "h", "--edge-cases", str(edges))
    skill = run(tmp_path, manifest, "skill", "s", "--edge-cases", str(edges))
    h = load_run(hier).by_task()["cocktail-menu-generator/h1"]
    s = load_run(skill).by_task()["cocktail-menu-generator/h1"]
    assert not h.success and s.success
    assert s.exec_attempts - s.exec_successes == 3
    shallow = run(tmp_path, manifest, "hier", "h2", "--nesting-limit", "2")
    assert not any(e.success for e in load_run(shallow).episodes)


def test_load_edge_cases_forms(tmp_path):
    p = tmp_path / "e.json"
    p.write_text('["Mojito"]')
    assert load_edge_cases(p) == {"*": ["Mojito"]}
    p.write_text('{"x": "notalist"}')
    with pytest.raises(ValueError):
        load_edge_cases(p)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(mode="turbo")
    with pytest.raises(ValueError):
        RunConfig(mode="base", workers=0)


def test_parallel_workers_match_serial(tmp_path, manifest):
    a = load_run(run(tmp_path, manifest, "skill", "w1"))
    b = load_run(run(tmp_path, manifest, "skill", "w4", "--workers", "4"))
    assert a == b


def test_serve_stdio_subprocess(tmp_path):
    frames = ('{"id": 1, "method": "list_skills", "params": {}}\n'
              '{"id": 2, "method": "execute_skill", "params": {"skill_name": "x", "args": {}}}\n')
    proc = subprocess.run([sys.executable, "-m", "skillbench.cli", "serve", "--stdio",
                           "--workspace", str(tmp_path / "ws")],
                          input=frames, capture_output=True, text=True, timeout=60)
    lines = [json.loads(x) for x in proc.stdout.splitlines()]
    assert lines[0] == {"id": 1, "ok": True, "value": ""}
    assert lines[1]["error"]["kind"] == "unknown_skill"
