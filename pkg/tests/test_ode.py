import pytest

from fjl.jets import JetExpr, JetSymbol, substitute, total_derivative
from fjl.ode import (ConstraintRequired, DiffField, closed_family_substitution, p_identity_details,
                     verify_reduction_chain, wronskian, wronskian_details)


def test_reduction_chain_formal():
    rep = verify_reduction_chain()
    assert rep.passed, [s.name for s in rep.steps if not s.passed]
    names = [s.name for s in rep.steps]
    for step in ("Mxy_to_Nxy", "slope_derivative", "family_solves_Nxy", "generalized_family"):
        assert step in names
    assert len(rep.flags) == 1


@pytest.mark.parametrize("n", [3, 5, 9])
def test_reduction_chain_concrete(n):
    assert verify_reduction_chain(n).passed


def test_family_with_wrong_constant_is_not_integral():
    from fjl.scalars import Scalar
    fam = closed_family_substitution("n", k1=2 * Scalar.param("k1"))
    x, y = JetExpr.var("x"), JetExpr.var("y")
    from fjl import exponents as ex
    n = ex.parse_exponent("n")
    implicit = y ** n - (x ** n).scale(Scalar.param("k1"))
    assert not substitute(total_derivative(implicit), fam).is_zero()


@pytest.mark.parametrize("n,coef,hpow", [(8, 7, 6), (6, 5, 4)])
def test_p_identity(n, coef, hpow):
    rep = p_identity_details(n)
    assert rep.identity and rep.pullback_agrees
    assert (rep.coefficient, rep.h_power) == (coef, hpow)


def test_p_identity_display():
    rep = p_identity_details(8)
    assert rep.display_derived and not rep.display_verbatim


def test_p_identity_wrong_coefficient():
    assert not p_identity_details(8, coefficient=6).identity


@pytest.mark.parametrize("n", [8, 6])
def test_wronskian_factor(n):
    rep = wronskian_details(n)
    assert rep.holds and rep.factor == n * n and rep.degenerate_ok


def test_wronskian_needs_constraint():
    with pytest.raises(ConstraintRequired):
        wronskian_details(8, DiffField(8, constrained=False))


def test_wronskian_of_dependent_columns_vanishes():
    x = JetExpr.var("x")
    assert wronskian([x, x.scale(3), x * x]).is_zero()


def test_constraint_eliminates_h_prime():
    field_ = DiffField(4, constrained=True)
    f, g, h = (JetExpr.var(v) for v in "fgh")
    lhs = total_derivative(f ** 4 + g ** 4 + h ** 4)
    assert field_.reduce(lhs).is_zero()
