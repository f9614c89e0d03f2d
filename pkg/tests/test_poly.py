from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorlab.errors import IndexOutOfRange, PolySyntaxError, UnknownVariable, VariableMismatch
from milnorlab.poly import Polynomial, format_polynomial, parse_polynomial, partial_derivative, poly_add, poly_mul

XY = ["x", "y"]


def P(text, variables=XY):
    return parse_polynomial(text, variables)


@pytest.mark.parametrize(
    "text, variables, terms",
    [
        ("x^3 + y^5", XY, {(3, 0): 1, (0, 5): 1}),
        ("2*x*y - x*y", XY, {(1, 1): 1}),
        ("1/2*x^2", ["x"], {(2,): Fraction(1, 2)}),
        ("-x + 3", ["x"], {(1,): -1, (0,): 3}),
        ("2x y^2", XY, {(1, 2): 2}),
        ("x*y*x", XY, {(2, 1): 1}),
        ("  x ^ 2  -  x^2 ", XY, {}),
        ("0", ["x"], {}),
    ],
)
def test_parse(text, variables, terms):
    assert parse_polynomial(text, variables).terms == terms


def test_parse_default_variables_are_sorted():
    assert parse_polynomial("y^5 + x^3").variables == ("x", "y")


@pytest.mark.parametrize("text, pos", [("x^3 +", 5), ("x^", 2), ("x ** 2", 3), ("(x+y)", 0), ("1/0*x", 2), ("x y +* 2", 5)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        parse_polynomial(text, XY)
    assert info.value.position == pos


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        parse_polynomial("x + z", XY)
    assert info.value.name == "z"


def test_add_examples():
    assert poly_add(P("x"), P("-x")).is_zero()
    assert poly_add(P("x^3"), P("y^5")) == P("x^3 + y^5")
    assert poly_add(P("x + y"), P("x - y")) == P("2*x")


def test_mul_examples():
    assert poly_mul(P("x + y"), P("x - y")) == P("x^2 - y^2")
    assert poly_mul(P("1"), P("x^2*y - 3")) == P("x^2*y - 3")
    assert poly_mul(P("x"), P("x")) == P("x^2")


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        P("x") + parse_polynomial("x", ["x"])


def test_partial_examples():
    f = P("x^3 + y^5")
    assert partial_derivative(f, 0) == P("3*x^2")
    assert partial_derivative(f, 1) == P("5*y^4")
    assert partial_derivative(P("x^2*y^2"), 0) == P("2*x*y^2")
    with pytest.raises(IndexOutOfRange):
        partial_derivative(f, 2)


def test_format():
    assert format_polynomial(P("y^5 + x^3")) == "y^5 + x^3"
    assert format_polynomial(P("-1/2*x^2*y + 3 - x")) == "-1/2*x^2*y - x + 3"
    assert format_polynomial(P("0")) == "0"


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exponents, coefficients, max_size=5).map(lambda t: Polynomial(XY, t))


@given(polys)
def test_roundtrip(p):
    assert parse_polynomial(format_polynomial(p), XY) == p


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(p, q, s):
    assert p + q == q + p
    assert (p + q) + s == p + (q + s)
    assert p * q == q * p
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert (p - p).is_zero()


@given(polys, polys)
@settings(max_examples=60)
def test_leibniz(p, q):
    for i in range(2):
        assert partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i)


@given(polys, polys)
@settings(max_examples=40)
def test_product_against_sympy(p, q):
    x, y = sympy.symbols("x y")
    expected = sympy.Poly(sympy.sympify(str(p).replace("^", "**")) * sympy.sympify(str(q).replace("^", "**")), x, y)
    got = {m: Fraction(int(c.p), int(c.q)) for m, c in zip(expected.monoms(), expected.coeffs())}
    assert (p * q).terms == {m: c for m, c in got.items() if c}
