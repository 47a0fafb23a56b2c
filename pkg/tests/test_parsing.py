import pytest

from fjl.parsing import Context, ParseError, parse, parse_jet, parse_scalar, tokenize
from fjl.jets import JetExpr
from fjl.scalars import I, SQRT2, Scalar, ZETA8


def test_precedence_and_juxtaposition():
    assert parse_jet("2x^2 y") == parse_jet("2*(x^2)*y")
    assert parse_jet("-x^2") == -(JetExpr.var("x") ** 2)
    assert parse_jet("x**3") == parse_jet("x^3")


def test_jets_and_logs():
    e = parse_jet("d(x)*d2(y) - dlog(x)")
    assert e == JetExpr.jet("x", 1) * JetExpr.jet("y", 2) - JetExpr.dlog("x")


def test_constants():
    assert parse_scalar("sqrt(2)") == SQRT2
    assert parse_scalar("(-1)^(1/4)") == ZETA8
    assert parse_scalar("i^2") == Scalar.rational(-1)
    assert parse_scalar("3/6") == Scalar.rational(1) / 2


def test_symbolic_exponent():
    from fjl.jets import valuation
    from fjl.exponents import exponent_text
    assert exponent_text(valuation(parse_jet("x^(n-1)*d(y)"), "x")) == "n-1"


@pytest.mark.parametrize("text,column,fragment", [
    ("9*x^", 5, "missing exponent"),
    ("x + q", 5, "unknown identifier"),
    ("x/0", 2, "division by zero"),
    ("1.5*x", 1, "decimal"),
    ("(x + y", 7, "expected ')'"),
    ("x $ y", 3, "unexpected character"),
])
def test_errors_report_columns(text, column, fragment):
    with pytest.raises(ParseError) as info:
        parse_jet(text)
    assert info.value.column == column
    assert fragment in info.value.message


def test_line_in_message():
    err = ParseError("oops", 4, "abc", line=2)
    assert str(err) == "line 2, column 4: oops"


def test_unknown_identifiers_are_never_symbols():
    with pytest.raises(ParseError):
        parse("alpha", Context())


def test_tokens():
    kinds = [t.kind for t in tokenize("d2(x)^3")]
    assert kinds == ["name", "op", "name", "op", "op", "num", "end"]


@pytest.mark.parametrize("text", [
    "x^2*d(y) - 3*y*d2(x)", "(1 + i)*x^(-3)", "sqrt(3)*d(x)^2/y", "x^(n-1)*d(y)",
    "2^(1/4)*x + (-1)^(1/4)*y",
])
def test_round_trip(text):
    e = parse_jet(text)
    assert parse_jet(e.to_text()) == e
