"""Property tests for the invariants of each module."""
import json

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from skillbench.accounting import Limits, count_tokens
from skillbench.library import SkillLibrary, quality_check
from skillbench.metrics import RunMetrics, aggregate, diff, episode_metrics
from skillbench.policies import Env, run_baseline, run_skill
from skillbench.script import ScriptRuntimeError, evaluate, free_variables, parse, render_canonical
from skillbench.server import handle_line
from skillbench.session import RequestError, Session
from skillbench.tasks import generate_suite, render_prompt, score
from skillbench.tools import (
    FAMILY_SLUGS,
    FILLER_FACTOR,
    build_registry,
    data_response,
    get_family,
    make_workspace,
    oracle,
    oracle_fields,
    resolve_args,
)
from skillbench.values import canonical_bytes, canonical_json

FAST = settings(max_examples=60, deadline=None,
                suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
SLOW = settings(max_examples=12, deadline=None,
                suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])

# -- random skill scripts -------------------------------------------------------------------

NAMES = ("a", "b", "c", "p", "q")
KEYS = ("k", "m", "n")
idents = st.sampled_from(NAMES)

atoms = st.one_of(
    st.just("null"), st.just("true"), st.just("false"),
    st.integers(-50, 50).map(str),
    st.sampled_from(["0.5", "2.25", "-1.5"]),
    st.text(alphabet="abcxyz ", max_size=5).map(json.dumps),
    idents,
)


def _compound(inner):
    pair = st.tuples(inner, inner)
    return st.one_of(
        st.lists(inner, max_size=3).map(lambda xs: "[" + ", ".join(xs) + "]"),
        st.lists(st.tuples(st.sampled_from(KEYS), inner), max_size=3, unique_by=lambda kv: kv[0])
        .map(lambda kvs: "{" + ", ".join(f"{k}: {v}" for k, v in kvs) + "}"),
        st.tuples(idents, st.sampled_from(KEYS)).map(lambda t: f"{t[0]}.{t[1]}"),
        st.tuples(idents, inner).map(lambda t: f"{t[0]}[{t[1]}]"),
        st.tuples(inner, st.sampled_from(["+", "-", "*", "/", "%", "==", "!=", "<", ">=",
                                          "and", "or"]), inner)
        .map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
        inner.map(lambda x: f"(not {x})"),
        inner.map(lambda x: f"-({x})"),
        st.tuples(st.sampled_from(["len", "str", "keys", "lower", "json_encode", "num"]), inner)
        .map(lambda t: f"{t[0]}({t[1]})"),
        pair.map(lambda t: f"get({t[0]}, \"k\", {t[1]})"),
        pair.map(lambda t: f"append({t[0]}, {t[1]})"),
        inner.map(lambda x: f'call_tool("probe", v={x})'),
    )


exprs = st.recursive(atoms, _compound, max_leaves=5)


def _block(lines, indent):
    pad = "    " * indent
    return "".join(pad + ln + "\n" for ln in lines)


def _stmts(depth):
    simple = st.one_of(
        st.tuples(idents, exprs).map(lambda t: [f"{t[0]} = {t[1]}"]),
        st.tuples(idents, st.sampled_from(KEYS), exprs).map(lambda t: [f"{t[0]}.{t[1]} = {t[2]}"]),
        exprs.map(lambda e: [e]),
    )
    if depth == 0:
        return simple
    body = st.lists(_stmts(depth - 1), min_size=1, max_size=2).map(
        lambda xs: [ln for x in xs for ln in x])
    ind = lambda lines: ["    " + ln for ln in lines]  # noqa: E731
    return st.one_of(
        simple,
        st.tuples(idents, exprs, body).map(
            lambda t: [f"for {t[0]} in {t[1]} {{"] + ind(t[2]) + ["}"]),
        st.tuples(exprs, body, body).map(
            lambda t: [f"if {t[0]} {{"] + ind(t[1]) + ["} else {"] + ind(t[2]) + ["}"]),
        st.tuples(exprs, exprs, body, body).map(
            lambda t: [f"if {t[0]} {{"] + ind(t[2]) + [f"}} else if {t[1]} {{"] + ind(t[3])
                      + ["}"]),
    )


programs = st.lists(_stmts(2), min_size=1, max_size=5).map(
    lambda xs: "\n".join(ln for x in xs for ln in x) + "\nresult = " + NAMES[0] + "\n")

values = st.recursive(
    st.one_of(st.none(), st.booleans(), st.integers(-9, 9), st.text(max_size=4)),
    lambda inner: st.one_of(st.lists(inner, max_size=3),
                            st.dictionaries(st.sampled_from(KEYS), inner, max_size=3)),
    max_leaves=6)


def probe(tool, kwargs):
    return {"tool": tool, "echo": kwargs.get("v")}


def run_script(code, bindings, budget=2_000):
    try:
        return "ok", canonical_json(evaluate(parse(code), bindings, probe, budget=budget))
    except ScriptRuntimeError as exc:
        return "err", canonical_json(exc.issue.to_dict())


@FAST
@given(programs)
def test_parse_render_round_trip(code):
    ast = parse(code)
    assert parse(render_canonical(ast)) == ast


@FAST
@given(programs, st.fixed_dictionaries({n: values for n in NAMES}))
def test_evaluation_is_deterministic(code, env):
    free = free_variables(parse(code))
    bindings = {k: v for k, v in env.items() if k in free}
    assert run_script(code, bindings) == run_script(code, bindings)


@FAST
@given(programs, st.fixed_dictionaries({n: values for n in NAMES}), st.integers(1, 400))
def test_termination_and_error_locality(code, env, budget):
    free = free_variables(parse(code))
    status, payload = run_script(code, {k: env[k] for k in free}, budget)
    if status == "err":
        issue = json.loads(payload)
        assert 1 <= issue["line"] <= len(code.splitlines())
        assert all(1 <= t["line"] <= len(code.splitlines()) for t in issue["trace"])


@FAST
@given(programs, st.fixed_dictionaries({n: values for n in NAMES}))
def test_free_variable_soundness(code, env):
    free = free_variables(parse(code))
    status, payload = run_script(code, {k: env[k] for k in free})
    if status == "err":
        assert json.loads(payload)["kind"] != "unknown_name"


# -- tool fabric ----------------------------------------------------------------------------

families = st.sampled_from(FAMILY_SLUGS)
entity_names = st.text(alphabet="abcdefghij -", min_size=1, max_size=12)


def _args_for(tdef, entity):
    return {p.name: (entity if p.type == "string" else len(entity)) for p in tdef.params}


@FAST
@given(families, st.integers(0, 2**32), entity_names, st.data())
def test_invoke_is_pure_and_order_free(fam, seed, entity, data):
    reg = build_registry(fam, seed)
    tdef = get_family(fam).tool(data.draw(st.sampled_from(reg.data_tools)))
    args = _args_for(tdef, entity)
    reordered = dict(reversed(list(args.items())))
    a = canonical_bytes(data_response(reg, tdef.name, args))
    assert a == canonical_bytes(data_response(build_registry(fam, seed), tdef.name, reordered))


@FAST
@given(families, st.integers(0, 1000), entity_names, st.data())
def test_payload_inflation(fam, seed, entity, data):
    reg = build_registry(fam, seed)
    tdef = get_family(fam).tool(data.draw(st.sampled_from(reg.data_tools)))
    resp = data_response(reg, tdef.name, _args_for(tdef, entity))
    core = oracle_fields(tdef, resp)
    assert FILLER_FACTOR >= 3
    assert len(canonical_bytes(resp)) > 3 * len(canonical_bytes(core))


@SLOW
@given(st.integers(0, 10_000), st.data())
def test_oracle_consistency(seed, data):
    task = data.draw(st.sampled_from(generate_suite(seed=seed)))
    reg = build_registry(task.family, seed)
    expected = oracle(reg, task)
    fam = get_family(task.family)
    for entity in task.entities:
        responses = {}
        for t in task.required_tools:
            tdef = fam.tool(t)
            responses[t] = data_response(reg, t, resolve_args(tdef, entity, responses))
            assert oracle_fields(tdef, responses[t]) == expected[entity][t]


@FAST
@given(st.text(alphabet="abc", min_size=1, max_size=6), st.text(max_size=20))
def test_workspace_isolation(tmp_path_factory, name, content):
    root = tmp_path_factory.mktemp("iso")
    a, b = make_workspace("t/a", root), make_workspace("t/b", root)
    before = sorted(p.name for p in b.root.iterdir())
    a.write(name + ".txt", content)
    assert sorted(p.name for p in b.root.iterdir()) == before
    assert a.read(name + ".txt") == content


# -- skill library ------------------------------------------------------------------------

def echo(tool, kwargs):
    return dict(kwargs)


@FAST
@given(st.lists(st.one_of(st.integers(-3, 3), st.none(), st.text(max_size=2)), max_size=12))
def test_stats_accounting(xs):
    lib = SkillLibrary()
    lib.save_skill("s", "result = {v: 10 / x, w: x}", ["x"])
    for x in xs:
        lib.execute_skill("s", {"x": x}, echo)
    e = lib.entries["s"]
    assert e.success_count + e.failure_count == len(xs)


@FAST
@given(st.lists(st.tuples(st.sampled_from(["save", "execute", "get", "list"]),
                          st.sampled_from(["s", "t", "u"]), st.integers(-2, 2)), max_size=10))
def test_locked_safety(ops):
    lib = SkillLibrary()
    lib.save_skill("s", "result = {v: 10 / x}", ["x"])
    locked = SkillLibrary.from_dict(lib.to_dict(), locked=True)
    session = Session(build_registry(FAMILY_SLUGS[0], 0), None, locked)
    before = locked.serialize()
    for op, name, x in ops:
        params = {"skill_name": name, "script_code": f"result = {{v: {x}}}", "parameters": [],
                  "args": {"x": x}}
        try:
            session.handle(op + ("_skill" if op != "list" else "_skills"), params)
        except RequestError:
            pass
    assert locked.serialize() == before


@FAST
@given(st.integers(1, 12), st.integers(1, 12))
def test_depth_bound(height, limit):
    lib = SkillLibrary(hierarchical=True, nesting_limit=limit)
    lib.save_skill("s1", "result = {v: x + 1}", ["x"])
    for i in range(2, height + 1):
        lib.save_skill(f"s{i}", f'r = call_tool("execute_skill", skill_name="s{i - 1}", '
                                f"args={{x: x}})\nresult = {{v: r.v + 1}}", ["x"])
    out = lib.execute_skill(f"s{height}", {"x": 0}, echo)
    assert out.depth_used <= limit
    if height > limit:
        assert out.status == "failed" and out.result["kind"] == "depth_exceeded"
    else:
        assert out.ok and out.result == {"v": height}


@FAST
@given(st.dictionaries(st.sampled_from(KEYS + ("x", "y")), values, max_size=5),
       st.sampled_from(["z", "zz"]),
       st.one_of(st.integers(1, 9), st.text(alphabet="abc", min_size=1, max_size=3),
                 st.lists(st.integers(1, 3), min_size=1, max_size=2)))
def test_quality_monotonicity(record, key, leaf):
    before = quality_check(record)
    after = quality_check({**record, key: leaf})
    if before.passed:
        assert after.passed


# -- task suite -----------------------------------------------------------------------------

@SLOW
@given(st.integers(0, 2**31))
def test_suite_cardinality_and_prompts(seed):
    suite = generate_suite(seed=seed)
    assert len(suite) == 126
    counts = [sum(t.difficulty == d for t in suite) for d in ("easy", "medium", "hard")]
    assert counts == [63, 42, 21]
    for t in suite:
        p = render_prompt(t)
        assert "save_skill" not in p and "execute_skill" not in p


@SLOW
@given(st.integers(0, 500), st.data())
def test_scoring_monotonicity(tmp_path_factory, seed, data):
    task = data.draw(st.sampled_from(generate_suite(seed=seed)))
    reg = build_registry(task.family, seed)
    rec = oracle(reg, task)
    ws = make_workspace(task.id, tmp_path_factory.mktemp("score"))
    order = data.draw(st.permutations(task.entities))
    k = data.draw(st.integers(0, task.n - 1))
    partial = {e: rec[e] for e in order[:k]}
    ws.write(task.output_file, json.dumps(partial))
    lo = score(task, ws, rec)
    partial[order[k]] = rec[order[k]]
    ws.write(task.output_file, json.dumps(partial))
    hi = score(task, ws, rec)
    assert all(h >= lo_ for (_, h, _), (_, lo_, _) in zip(hi.per_criterion, lo.per_criterion))


@SLOW
@given(st.integers(0, 500), st.data())
def test_call_count_law(tmp_path_factory, seed, data):
    task = data.draw(st.sampled_from(generate_suite(seed=seed)))
    env = Env(build_registry(task.family, seed),
              make_workspace(task.id, tmp_path_factory.mktemp("calls")))
    tr = run_baseline(task, env)
    data_calls = sum(c["tool"] in env.registry.data_tools for t in tr.turns for c in t["tool_calls"])
    assert data_calls == task.n * task.m


# -- harness ---------------------------------------------------------------------------------

@SLOW
@given(st.integers(0, 500), st.integers(3, 40), st.integers(2_000, 60_000),
       st.integers(50, 2_000), st.data())
def test_limit_safety_and_conservation(tmp_path_factory, seed, max_turns, max_in, max_out, data):
    task = data.draw(st.sampled_from(generate_suite(seed=seed)))
    limits = Limits(max_turns=max_turns, max_in_tokens=max_in, max_out_tokens=max_out,
                    max_in_tokens_per_request=max_in)
    root = tmp_path_factory.mktemp("lim")
    env = Env(build_registry(task.family, seed), make_workspace(task.id, root),
              SkillLibrary(root / "cache.json"))
    policy = data.draw(st.sampled_from([run_baseline, run_skill]))
    tr = policy(task, env, limits=limits)
    c = tr.counters
    assert c.turn_count <= max_turns and c.in_tokens <= max_in and c.out_tokens <= max_out
    keys = ("in_tokens", "out_tokens", "turn_count", "tool_call_count")
    for a, b in zip(tr.turns, tr.turns[1:]):
        assert all(a["counters"][k] <= b["counters"][k] for k in keys)
    m = episode_metrics(tr, task, score(task, env.workspace, oracle(env.registry, task)))
    assert m.in_tokens == sum(count_tokens(t["bytes_in"]) for t in tr.turns) == c.in_tokens
    assert m.out_tokens == sum(count_tokens(t["bytes_out"]) for t in tr.turns) == c.out_tokens
    if tr.final_status == "limit_exceeded":
        assert tr.reason


@FAST
@given(st.floats(1e-3, 1e9), st.floats(0.01, 100))
def test_diff_antisymmetry(a, ratio):
    # ratios past ~100x lose digits to cancellation in 1 + rev; real diffs stay well inside
    b = a * ratio
    fwd, rev = diff(a, b), diff(b, a)
    assert abs(fwd - (-rev / (1 + rev))) <= 1e-12 * max(1.0, abs(fwd))


@SLOW
@given(st.integers(0, 100), st.data())
def test_exec_rate_identity(tmp_path_factory, seed, data):
    tasks = data.draw(st.lists(st.sampled_from(generate_suite(seed=seed)), min_size=1,
                               max_size=3, unique_by=lambda t: t.id))
    episodes, libs = [], []
    for t in tasks:
        root = tmp_path_factory.mktemp("exec")
        edges = data.draw(st.lists(st.sampled_from(t.entities), max_size=2, unique=True))
        env = Env(build_registry(t.family, seed, edges), make_workspace(t.id, root),
                  SkillLibrary(root / "cache.json"))
        tr = run_skill(t, env)
        episodes.append(episode_metrics(tr, t, score(t, env.workspace, oracle(env.registry, t))))
        libs.append(env.library)
    s = aggregate(RunMetrics(episodes))
    ok = sum(e.success_count for lib in libs for e in lib.entries.values())
    total = sum(e.success_count + e.failure_count for lib in libs for e in lib.entries.values())
    assert s["exec_rate"] == ok / total


_wire_ops = st.lists(st.tuples(
    st.sampled_from(["save_skill", "execute_skill", "get_skill", "list_skills", "save_macro"]),
    st.sampled_from(["s", "t"]), st.sampled_from(["result = {v: x}", "result = {v: 1 / x}",
                                                  "result = {", "result = {v: 0}"]),
    st.integers(-1, 1)), max_size=8)


@FAST
@given(_wire_ops)
def test_wire_fidelity(ops):
    direct = Session(build_registry(FAMILY_SLUGS[1], 0), None, SkillLibrary())
    remote = Session(build_registry(FAMILY_SLUGS[1], 0), None, SkillLibrary())
    for i, (method, name, code, x) in enumerate(ops):
        params = {"skill_name": name, "script_code": code, "parameters": ["x"], "args": {"x": x}}
        try:
            expected = {"ok": True, "value": direct.handle(method, params)}
        except RequestError as exc:
            expected = {"ok": False, "error": exc.to_dict()}
        got = handle_line(remote, json.dumps({"id": i, "method": method, "params": params}))
        assert got.pop("id") == i
        assert json.loads(json.dumps(got)) == json.loads(json.dumps(expected))
    assert remote.library.serialize() == direct.library.serialize()
