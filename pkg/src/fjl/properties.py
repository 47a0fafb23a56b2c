"""Seeded randomized property checks.

Each suite draws ``cases`` random instances from ``random.Random(seed)`` and
returns the list of failing instances (as text), so an empty list is a pass.
"""
from __future__ import annotations

import random

from .jets import JetExpr, substitute_chart, total_derivative, valuation
from .parsing import parse_jet, parse_scalar
from .scalars import I, ONE, Q, S, Scalar

_BASIS = [ONE, I, Q, Q * Q, Q ** 3, S, I * Q, I * S, Q * S]


def random_scalar(rng: random.Random, params: bool = True, terms: int = 3) -> Scalar:
    x = Scalar()
    for _ in range(rng.randint(1, terms)):
        c = Scalar.rational(rng.randint(-5, 5)) / rng.randint(1, 4)
        g = rng.choice(_BASIS)
        if params and rng.random() < 0.25:
            g = g * Scalar.param(rng.choice(("n", "k1")))
        x = x + c * g
    return x


def random_jet(rng: random.Random, names=("x", "y"), terms: int = 3, max_order: int = 2,
               negative: bool = True) -> JetExpr:
    e = JetExpr()
    lo = -2 if negative else 0
    for _ in range(rng.randint(1, terms)):
        t = JetExpr.const(random_scalar(rng, params=False, terms=2))
        for v in names:
            k = rng.randint(lo, 3)
            if k:
                t = t * JetExpr.var(v) ** k
            if rng.random() < 0.5:
                t = t * JetExpr.jet(v, rng.randint(1, max_order), rng.randint(1, 2))
        e = e + t
    return e


def _nonzero(gen, rng):
    while True:
        v = gen(rng)
        if not v.is_zero():
            return v


def ring_axioms(cases: int = 1000, seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    for _ in range(cases):
        a, b, c = (random_scalar(rng) for _ in range(3))
        ok = (a + b == b + a and a * b == b * a and (a + b) + c == a + (b + c)
              and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
              and a - a == Scalar() and a * ONE == a)
        if ok and not a.is_zero() and not a.free_parameters():
            ok = (a * a.inverse()).is_one()
        if not ok:
            bad.append(f"{a} | {b} | {c}")
    return bad


def leibniz(cases: int = 1000, seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    for _ in range(cases):
        p, q = random_jet(rng), random_jet(rng)
        if total_derivative(p * q) != total_derivative(p) * q + p * total_derivative(q):
            bad.append(f"{p.to_text()} | {q.to_text()}")
    return bad


def _random_chart(rng, laurent: bool):
    """Monomial Laurent charts, or polynomial charts with a second term."""
    chart = {}
    for v in ("x", "y"):
        c = random_scalar(rng, params=False, terms=1)
        img = JetExpr.const(c if not c.is_zero() else ONE)
        for w in ("x", "y"):
            img = img * JetExpr.var(w) ** rng.randint(-2 if laurent else 0, 2)
        if not laurent and rng.random() < 0.5:
            img = img + JetExpr.var(rng.choice(("x", "y")))
        chart[v] = img
    return chart


def chart_functoriality(cases: int = 1000, seed: int = 0) -> list:
    """Composite charts act as the composite, and charts commute with d."""
    rng = random.Random(seed)
    bad = []
    for _ in range(cases):
        e = random_jet(rng, terms=2, max_order=1, negative=False)
        laurent = rng.random() < 0.5
        A, B = _random_chart(rng, laurent), _random_chart(rng, laurent)
        composite = {v: substitute_chart(img, B) for v, img in A.items()}
        ok = substitute_chart(substitute_chart(e, A), B) == substitute_chart(e, composite)
        ok = ok and substitute_chart(total_derivative(e), A) == total_derivative(substitute_chart(e, A))
        if not ok:
            bad.append(f"{e.to_text()} | {A} | {B}")
    return bad


def valuation_multiplicativity(cases: int = 1000, seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    for _ in range(cases):
        p = _nonzero(random_jet, rng)
        q = _nonzero(random_jet, rng)
        for v in ("x", "y"):
            if valuation(p * q, v) != valuation(p, v) + valuation(q, v):
                bad.append(f"{v}: {p.to_text()} | {q.to_text()}")
    return bad


def round_trip(cases: int = 1000, seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    for _ in range(cases):
        e = random_jet(rng, names=("x", "y", "z"))
        s = random_scalar(rng)
        if parse_jet(e.to_text()) != e or parse_scalar(s.to_text()) != s:
            bad.append(f"{e.to_text()} | {s.to_text()}")
    return bad


SUITES = {
    "ring_axioms": ring_axioms,
    "leibniz": leibniz,
    "chart_functoriality": chart_functoriality,
    "valuation_multiplicativity": valuation_multiplicativity,
    "round_trip": round_trip,
}


def run_all(cases: int = 1000, seed: int = 0) -> dict:
    return {name: fn(cases, seed) for name, fn in SUITES.items()}
