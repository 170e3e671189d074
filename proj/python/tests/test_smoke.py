import json
import math

import pytest

import funcalg as fa


@pytest.fixture
def fg():
    f = fa.lift("f", 1, lambda x: x * x)
    g = fa.lift("g", 1, lambda x: 1.0 / (1.0 - x) if x != 1 else math.inf)
    return f, g


def test_pointwise_sum(fg):
    f, g = fg
    h = f + g
    assert h.arity == 1
    assert str(h) == "(f + g)"
    assert h(2) == 3.0
    assert h(9) == pytest.approx(81 - 0.125)


def test_vectors_broadcast():
    assert fa.parse("(1:4) * 2").evaluate() == [2.0, 4.0, 6.0, 8.0]
    assert fa.builtin("Cumsum")([1, 2, 3]) == [1.0, 3.0, 6.0]
    assert (fa.builtin("sin") * 2)([0.0, 0.0]) == [0.0, 0.0]


def test_quaternion_product():
    q = fa.Quaternion(1, 1, 1, 1) * fa.Quaternion(0, 0, 2, 1)
    assert q == fa.Quaternion(-3, -1, 1, 3)
    s = fa.Session()
    status, out, err = s.execute("f(x, y) = x + x*y\ng(x, y) = x^2 + y\n(f + g - f*g)(1 + qj, qk)")
    assert (status, out, err) == (0, "4+2i+2j-1k\n", "")


def test_composition_by_application():
    fun = fa.parse("Sin^2 + 2")
    sin = fa.builtin("sin")
    composed = fun(sin)
    assert isinstance(composed, fa.Function)
    x = 0.32
    expected = math.sin(math.sin(x)) ** 2 + 2
    assert composed(x) == pytest.approx(expected, rel=1e-12)


def test_complex_values():
    assert fa.builtin("exp")(1j * math.pi) == pytest.approx(-1 + 0j, abs=1e-12)


def test_compiled_program_agrees(fg):
    f, g = fg
    e = f + 4 * g - f * g
    prog = fa.compile(e)
    assert prog.size > 0
    for x in (0.5, 2.0, -3.0):
        assert prog.run(x) == e(x)
    assert math.isnan(prog.run(1.0))


def test_bench_reports(fg):
    f, g = fg
    tree, vm = fa.bench(f + g, (3.0,), 10)
    assert tree["backend"] == "tree" and vm["backend"] == "vm"
    assert tree["result"] == vm["result"] == 8.5
    json.dumps([tree, vm])


def test_errors_are_python_exceptions(fg):
    f, _ = fg
    two = fa.lift("h", 2, lambda x, y: x + y)
    with pytest.raises(fa.FuncalgError, match="arity"):
        f + two
    with pytest.raises(fa.FuncalgError, match="unknown primitive"):
        fa.builtin("sine")
    with pytest.raises(fa.FuncalgError, match="length"):
        (fa.const([1, 2]) + fa.const([1, 2, 3])).evaluate()


def test_session_composition_chain():
    s = fa.Session(backend="check")
    script = "\n".join(
        [
            "j(x, y) = Cos(x) + Sin(x - y)",
            "k(x, y) = Tan(x) + Log(x + y)",
            "l(x, y) = Sin(x/2) + x^2",
            "(j + k + l)(Sin + Log, Cos + Exp)(Sin + Tan)(0.4)",
        ]
    )
    assert s.execute(script) == (0, "2.545235\n", "")
    status, _, err = s.execute("nope(1)")
    assert status == 1 and "unknown identifier" in err
