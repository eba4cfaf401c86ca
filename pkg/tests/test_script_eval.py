import pytest

from skillbench.script import (
    DEFAULT_BUDGET,
    Evaluator,
    ScriptRuntimeError,
    ToolCallError,
    evaluate,
    parse,
)
from skillbench.script.builtins import round_half_up


def run(src, bindings=None, dispatcher=None, **kw):
    args = (dispatcher,) if dispatcher else ()
    return evaluate(parse(src), bindings or {}, *args, **kw)


def failure(src, bindings=None, dispatcher=None, **kw):
    with pytest.raises(ScriptRuntimeError) as exc:
        run(src, bindings, dispatcher, **kw)
    return exc.value.issue


def test_addition_of_bindings():
    assert run("result = a + b", {"a": 1, "b": 2}) == 3


def test_null_field_arithmetic_names_the_line():
    def tools(name, kw):
        return {"weight": None, "name": kw["breed"]}
    src = 'x = call_tool("profile", breed=breed)\ny = 2\nresult = x.weight + 1'
    issue = failure(src, {"breed": "Persian"}, tools)
    assert issue.kind == "type_error"
    assert issue.line == 3
    assert issue.inputs == {"breed": "Persian"}
    assert issue.trace[-1].line == 3


def test_unbound_result_variable():
    assert failure("result = r").kind == "unknown_name"


def test_result_never_assigned():
    issue = failure("x = 1\ny = 2")
    assert issue.kind == "unknown_name"
    assert "result" in issue.message


def test_inputs_echo_bindings_exactly():
    issue = failure("result = n / 0", {"n": 4, "extra": [1, {"a": None}]})
    assert issue.kind == "type_error"
    assert issue.inputs == {"n": 4, "extra": [1, {"a": None}]}


def test_budget_exhaustion():
    src = "total = 0\nfor i in xs {\n  total = total + i\n}\nresult = total"
    assert run(src, {"xs": list(range(100))}) == 4950
    issue = failure(src, {"xs": list(range(100))}, budget=50)
    assert issue.kind == "budget_exceeded"


def test_step_count_never_exceeds_budget():
    ev = Evaluator(parse("result = [1, 2, 3]"), {}, budget=DEFAULT_BUDGET)
    ev.run()
    assert 0 < ev.steps <= DEFAULT_BUDGET


def test_call_tool_returns_value_directly():
    seen = []

    def tools(name, kw):
        seen.append((name, kw))
        return {"id": 7}
    assert run('result = call_tool("search", name="Mojito").id', dispatcher=tools) == 7
    assert seen == [("search", {"name": "Mojito"})]


def test_dispatcher_errors_become_tool_failure():
    def boom(name, kw):
        raise RuntimeError("backend down")
    assert failure('result = call_tool("x")', dispatcher=boom).kind == "tool_failure"


def test_tool_call_error_kind_is_kept():
    def arity(name, kw):
        raise ToolCallError("missing q", kind="arity_error")
    assert failure('result = call_tool("x")', dispatcher=arity).kind == "arity_error"


def test_no_tools_by_default():
    assert failure('result = call_tool("x")').kind == "unknown_tool"


def test_dispatcher_cannot_mutate_script_values():
    def tools(name, kw):
        kw["q"].append(99)
        return None
    assert run('q = [1]\nignored = call_tool("t", q=q)\nresult = q', dispatcher=tools) == [1]


@pytest.mark.parametrize("src,expected", [
    ("result = 7 % 3", 1),
    ("result = 1 / 4", 0.25),
    ("result = 6 / 3", 2),
    ('result = "a" + "b"', "ab"),
    ("result = [1] + [2]", [1, 2]),
    ("result = not null", True),
    ("result = 0 or \"x\"", "x"),
    ("result = 1 and 2", 2),
    ("result = -(3)", -3),
    ("result = 1 == 1.0", True),
    ("result = [1, {a: 2}] == [1, {a: 2}]", True),
    ('result = "b" > "a"', True),
    ("xs = [1, 2, 3]\nresult = xs[-1]", 3),
    ("r = {a: 1}\nr.b = 2\nresult = r", {"a": 1, "b": 2}),
    ("xs = [1, 2]\nxs[0] = 5\nresult = xs", [5, 2]),
    ("out = 0\nfor k in {a: 1, b: 2} {\n out = out + 1\n}\nresult = out", 2),
    ("if null {\n x = 1\n} else {\n x = 2\n}\nresult = x", 2),
])
def test_semantics(src, expected):
    assert run(src) == expected


@pytest.mark.parametrize("src", [
    "result = null + 1",
    "result = \"a\" + 1",
    "result = 1 < \"a\"",
    "result = 5 % 0",
    "result = [1][3]",
    "result = {a: 1}.b",
    "result = (1).a",
    "for x in 5 {\n y = x\n}\nresult = 1",
])
def test_type_errors(src):
    assert failure(src).kind == "type_error"


@pytest.mark.parametrize("src,expected", [
    ("result = len([1, 2])", 2),
    ('result = str(1.5)', "1.5"),
    ('result = num("2.50")', 2.5),
    ('result = lower("AbC") + upper("x")', "abcX"),
    ('result = contains([1, 2], 2)', True),
    ('result = split("a,b", ",")', ["a", "b"]),
    ('result = join(["a", 1], "-")', "a-1"),
    ("result = keys({b: 1, a: 2})", ["b", "a"]),
    ("result = values({b: 1, a: 2})", [1, 2]),
    ('result = get({a: null}, "a", "dflt")', "dflt"),
    ('result = get(null, "a")', None),
    ("result = append([1], 2)", [1, 2]),
    ("result = slice([1, 2, 3], 1)", [2, 3]),
    ("result = round(2.345, 2)", 2.35),
    ("result = round(2.5)", 3),
    ('result = json_decode(json_encode({a: [1, null]}))', {"a": [1, None]}),
    ('result = regex_match("(\\\\d+)-(\\\\d+)", "ages 12-15")', ["12-15", "12", "15"]),
    ('result = regex_match("z", "abc")', None),
])
def test_builtins(src, expected):
    assert run(src) == expected


def test_builtin_arity():
    assert failure("result = len()").kind == "arity_error"


@pytest.mark.parametrize("x,digits,expected", [
    (0.125, 2, 0.13),
    (2.675, 2, 2.68),   # binary float 2.67499..., rounded on its decimal repr
    (-1.5, 0, -2),
    (1.05, 1, 1.1),
    (10, 1, 10),
])
def test_round_half_up(x, digits, expected):
    assert round_half_up(x, digits) == expected
