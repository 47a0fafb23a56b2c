"""Hypothesis versions of the algebraic property suites (1000 examples each)."""
from hypothesis import HealthCheck, given, settings, strategies as st

from fjl.jets import JetExpr, substitute_chart, total_derivative, valuation
from fjl.parsing import parse_jet, parse_scalar
from fjl.properties import _BASIS
from fjl.scalars import ONE, Scalar

SETTINGS = settings(max_examples=1000, deadline=None, derandomize=True,
                    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])

_term = st.tuples(st.integers(-6, 6), st.integers(1, 5), st.integers(0, len(_BASIS) - 1),
                  st.sampled_from([None, "n", "k1"]))


@st.composite
def scalars(draw, params=True, max_terms=3):
    x = Scalar()
    for c, d, b, p in draw(st.lists(_term, min_size=1, max_size=max_terms)):
        g = _BASIS[b]
        if params and p:
            g = g * Scalar.param(p)
        x = x + Scalar.rational(c) / d * g
    return x


@st.composite
def jets(draw, names=("x", "y"), negative=True, max_order=2, max_terms=3):
    e = JetExpr()
    lo = -2 if negative else 0
    for _ in range(draw(st.integers(1, max_terms))):
        t = JetExpr.const(draw(scalars(params=False, max_terms=2)))
        for v in names:
            k = draw(st.integers(lo, 3))
            if k:
                t = t * JetExpr.var(v) ** k
            order = draw(st.integers(0, max_order))
            if order:
                t = t * JetExpr.jet(v, order, draw(st.integers(1, 2)))
        e = e + t
    return e


@SETTINGS
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Scalar() and a * ONE == a
    if not a.is_zero() and not a.free_parameters():
        assert (a * a.inverse()).is_one()


@SETTINGS
@given(jets(), jets())
def test_leibniz(p, q):
    assert total_derivative(p * q) == total_derivative(p) * q + p * total_derivative(q)


@st.composite
def charts(draw, laurent):
    chart = {}
    for v in ("x", "y"):
        c = draw(scalars(params=False, max_terms=1))
        img = JetExpr.const(c if not c.is_zero() else ONE)
        for w in ("x", "y"):
            img = img * JetExpr.var(w) ** draw(st.integers(-2 if laurent else 0, 2))
        if not laurent and draw(st.booleans()):
            img = img + JetExpr.var(draw(st.sampled_from(["x", "y"])))
        chart[v] = img
    return chart


@st.composite
def chart_pairs(draw):
    laurent = draw(st.booleans())
    return draw(charts(laurent)), draw(charts(laurent))


@SETTINGS
@given(jets(negative=False, max_order=1, max_terms=2), chart_pairs())
def test_chart_functoriality(e, pair):
    A, B = pair
    composite = {v: substitute_chart(img, B) for v, img in A.items()}
    assert substitute_chart(substitute_chart(e, A), B) == substitute_chart(e, composite)
    assert substitute_chart(total_derivative(e), A) == total_derivative(substitute_chart(e, A))


@SETTINGS
@given(jets().filter(lambda e: not e.is_zero()), jets().filter(lambda e: not e.is_zero()))
def test_valuation_multiplicativity(p, q):
    for v in ("x", "y"):
        assert valuation(p * q, v) == valuation(p, v) + valuation(q, v)


@SETTINGS
@given(jets(names=("x", "y", "z")), scalars())
def test_round_trip(e, s):
    assert parse_jet(e.to_text()) == e
    assert parse_scalar(s.to_text()) == s
