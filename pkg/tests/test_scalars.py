from fractions import Fraction

import pytest

from fjl.scalars import (I, ONE, Q, S, SQRT2, SQRT6, ZETA3, ZETA8, ZETA24, NotInvertible, Scalar,
                         UnassignedParameter, adjoin_radical, numeric_radical, principal_root)


def test_tower_generators():
    assert I * I == -ONE
    assert Q ** 4 == Scalar.rational(2)
    assert S * S == Scalar.rational(3)
    assert SQRT6 * SQRT6 == Scalar.rational(6)


def test_roots_of_unity():
    assert ZETA8 ** 4 == -ONE
    assert ZETA3 ** 3 == ONE and ZETA3 != ONE
    assert ZETA24 ** 12 == -ONE
    assert abs(ZETA24.eval_numeric() - complex(0.9659258262890683, 0.25881904510252074)) < 1e-12


def test_inverse_in_tower():
    x = ONE + Q + I * S
    assert (x * x.inverse()).is_one()
    with pytest.raises(ZeroDivisionError):
        Scalar().inverse()


def test_parameters():
    n = Scalar.param("n")
    e = (n - 1) / (n + 1)
    assert e.subs({"n": 3}) == Scalar.rational(Fraction(1, 2))
    with pytest.raises(UnassignedParameter):
        e.eval_numeric()


def test_principal_roots():
    assert principal_root(Fraction(-1), 4) == ZETA8
    assert principal_root(Fraction(8), 4) == Q ** 3
    r = numeric_radical(Fraction(3), 3)
    assert r ** 3 == Scalar.rational(3)
    assert abs(r.eval_numeric() - 3 ** (1 / 3)) < 1e-12


def test_negative_base_radical():
    w = numeric_radical(Fraction(-1), 5)
    assert w ** 5 == -ONE
    assert abs(w.eval_numeric() - complex(-1) ** 0.2) < 1e-12


def test_adjoined_radical_reduces():
    w = adjoin_radical("omega_t", 5, -1)
    assert w ** 10 == ONE
    assert (w * w.inverse()).is_one()


def test_text():
    assert (ONE + SQRT2).to_text() in ("1 + sqrt(2)", "sqrt(2) + 1", "1 + 2^(1/2)")
    assert "i" in (3 * I).to_text()


def test_norm_over_the_full_tower():
    x = Scalar.rational(2) + 3 * I
    assert x.norm() == Scalar.rational(13 ** 8)
    assert (ONE + Q).norm().is_rational()
