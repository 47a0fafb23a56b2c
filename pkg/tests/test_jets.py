import pytest

from fjl.jets import (JetExpr, JetSymbol, NonMonomialPower, ZeroExpression, dee2, lowest_part,
                      log_inverse_substitution, log_normal_form, log_substitution, substitute,
                      substitute_chart, total_derivative, valuation)
from fjl.exponents import Assumptions, parse_exponent
from fjl.scalars import Scalar

x, y = JetExpr.var("x"), JetExpr.var("y")
dx, dy = JetExpr.jet("x", 1), JetExpr.jet("y", 1)


def test_total_derivative_rules():
    assert total_derivative(x * y) == dx * y + x * dy
    assert total_derivative(x ** 3) == 3 * x ** 2 * dx
    assert total_derivative(x.inverse()) == -(dx * x ** -2)


def test_symbolic_power_rule():
    n = parse_exponent("n")
    d = total_derivative(x ** n)
    assert d == (x ** parse_exponent("n-1") * dx).scale(Scalar.param("n"))


def test_dee2_weight_one_is_plain_second_jet():
    assert dee2("x", 1) == JetExpr.jet("x", 2)


def test_valuation_and_lowest_part():
    e = x ** -3 * dy + x ** 2
    assert valuation(e, "x") == -3
    assert lowest_part(e, "x") == x ** -3 * dy
    with pytest.raises(ZeroExpression):
        valuation(JetExpr(), "x")


def test_symbolic_valuation_needs_assumptions():
    n = parse_exponent("n")
    e = x ** n + x ** 2
    assert valuation(e, "x", Assumptions.parse("n>=3")) == 2


def test_log_substitution_roundtrip():
    e = JetExpr.jet("x", 2) * dy + dx ** 2
    there = substitute(e, log_substitution("x"))
    back = substitute(there, log_inverse_substitution("x"))
    assert back == e


def test_log_normal_form_detects_log_pole():
    ok, _ = log_normal_form(dx * x.inverse(), "x")
    assert ok
    ok, _ = log_normal_form(dx * x ** -2, "x")
    assert not ok


def test_chart_change_commutes_with_d():
    chart = {"x": x * y, "y": y ** 2}
    e = dx * y + JetExpr.jet("x", 2)
    assert substitute_chart(total_derivative(e), chart) == total_derivative(substitute_chart(e, chart))


def test_symbolic_power_of_sum_is_rejected():
    with pytest.raises((NonMonomialPower, ValueError)):
        (x + y) ** parse_exponent("n")


def test_symbol_text():
    assert JetSymbol("x", 2, False).text() == "d2(x)"
    assert JetSymbol("x", 1, True).text() == "dlog(x)"
    assert (x ** -2 * dy * 3).to_text() == "3*x^(-2)*d(y)"
