import pytest

from fjl import exponents as ex
from fjl.exponents import Assumptions, IncomparableExponents


def test_arithmetic_and_text():
    n = ex.parse_exponent("n")
    e = ex.sub(ex.mul(2, n), 8)
    assert ex.exponent_text(e) == "2n-8"
    assert ex.substitute(e, {"n": 5}) == 2
    assert ex.coerce(ex.sub(n, n)) == 0


def test_assumptions_compare():
    a = Assumptions.parse("n>=9")
    n8 = ex.parse_exponent("n-8")
    assert a.is_nonnegative(n8)
    assert a.minimum(n8) == 1
    assert a.compare(ex.parse_exponent("n"), 3) == 1


def test_incomparable_without_bounds():
    with pytest.raises(IncomparableExponents):
        Assumptions().compare(ex.parse_exponent("n"), ex.parse_exponent("m"))


def test_threshold():
    assert ex.threshold(ex.parse_exponent("n-8")) == 8
    assert ex.threshold(ex.parse_exponent("n-8"), level=1) == 9


def test_bad_assumption():
    with pytest.raises(ValueError):
        Assumptions.parse("n >> 3")
