"""Jet differentials on Fermat-type surfaces.

The surface ``a x^n + b y^m + c z^l = const`` gives two relations on the
2-jets of a curve,

    sum a_v dv = 0,        sum a_v D2 v = 0,

with ``a_v`` the partial derivatives and ``D2 v = d2 v + (k_v - 1) dv^2 / v``.
Cramer's rule on these gives the 2-jet differential Phi as three equal
ratios.  This module builds those objects, checks the algebraic identities
around them, and reports pole orders along the coordinate divisors and the
divisor at infinity.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import exponents as ex
from .exponents import Assumptions, Exponent, IncomparableExponents
from .jets import (JetExpr, JetFraction, JetSymbol, dee2, log_normal_form, substitute,
                   substitute_chart, total_derivative, valuation)
from .scalars import Scalar

VARS = ("x", "y", "z")
INFINITY_CHART = {"x": ("w", -1), "y": ("u", "w"), "z": ("v", "w")}


class EliminationFailure(ArithmeticError):
    pass


@dataclass(frozen=True)
class JetRelation:
    expr: object
    tag: str  # first_order | second_order | defining_equation

    def __str__(self):
        return f"{self.tag}: {self.expr} = 0"


def _exp(e):
    return ex.coerce(e)


def _normalize_exponents(exponents, variant):
    if exponents is None:
        exponents = ("n", "n", "n") if variant == "fermat" else ("n", "m", "l")
    if isinstance(exponents, (str, int)):
        exponents = (exponents,) * 3
    return tuple(_exp(e) for e in exponents)


def jet_var(name, order=0):
    return JetExpr.var(name) if order == 0 else JetExpr.jet(name, order)


def weights(exponents, variant, coefficients=(1, 1, 1), names=VARS):
    """The coefficients a_v of dv in the first relation."""
    out = []
    for v, k, c in zip(names, exponents, coefficients):
        a = JetExpr.var(v) ** ex.sub(k, 1)
        if variant == "generalized":
            a = a.scale(k)
        out.append(a.scale(c))
    return out


def derive_relations(exponents=None, variant: str = "fermat", coefficients=(1, 1, 1), names=VARS):
    """First and second order relations for ``sum c_v v^k_v = const``.

    The second relation is computed as the total derivative of the first and
    then checked against its D2-weighted form; a mismatch raises.
    """
    if variant not in ("fermat", "generalized"):
        raise ValueError(f"unknown variant {variant!r}")
    exps = _normalize_exponents(exponents, variant)
    a = weights(exps, variant, coefficients, names)
    first = sum((a_v * JetExpr.jet(v, 1) for a_v, v in zip(a, names)), JetExpr())
    weighted = sum((a_v * dee2(v, k) for a_v, v, k in zip(a, names, exps)), JetExpr())
    second = total_derivative(first)
    if second != weighted:
        raise AssertionError("second relation differs from the derivative of the first")
    return JetRelation(first, "first_order"), JetRelation(weighted, "second_order")


def defining_equation(exponents=None, variant: str = "fermat", coefficients=(1, 1, 1), names=VARS):
    exps = _normalize_exponents(exponents, variant)
    terms = JetExpr()
    for v, k, c in zip(names, exps, coefficients):
        t = JetExpr.var(v) ** k
        if variant == "generalized":
            t = t.scale(k)
        terms = terms + t.scale(c)
    return terms


@dataclass
class PhiBundle:
    exponents: tuple
    variant: str
    names: tuple
    d2: dict                 # D2 v for each variable
    weights: list            # a_x, a_y, a_z
    numerators: dict         # N_yz, N_zx, N_xy (2x2 determinants)
    minors: dict             # M_yz, M_zx, M_xy, M_xyz
    ratios: list             # N_yz/a_x, N_zx/a_y, N_xy/a_z
    det3: JetExpr
    checks: dict = field(default_factory=dict)

    @property
    def phi(self):
        return self.ratios[0]

    def ratio_for(self, divisor_var: str):
        """A representative with no pole from the weight along ``divisor_var = 0``."""
        x, y, z = self.names
        pick = {x: 1, y: 2, z: 0}.get(divisor_var, 0)
        return self.ratios[pick]


def _n2(a, b, d2):
    return JetExpr.jet(a, 1) * d2[b] - JetExpr.jet(b, 1) * d2[a]


def build_phi(relations=None, exponents=None, variant: str = "fermat",
              coefficients=(1, 1, 1), names=VARS, verify: bool = True) -> PhiBundle:
    exps = _normalize_exponents(exponents, variant)
    if relations is None:
        relations = derive_relations(exps, variant, coefficients, names)
    x, y, z = names
    d2 = {v: dee2(v, k) for v, k in zip(names, exps)}
    a = weights(exps, variant, coefficients, names)
    num = {"yz": _n2(y, z, d2), "zx": _n2(z, x, d2), "xy": _n2(x, y, d2)}
    X, Y, Z = (JetExpr.var(v) for v in names)
    lx = {v: JetExpr.jet(v, 1) * JetExpr.var(v).inverse() for v in names}
    qx = {v: d2[v] * JetExpr.var(v).inverse() for v in names}
    minors = {
        "yz": lx[y] * qx[z] - lx[z] * qx[y],
        "zx": lx[z] * qx[x] - lx[x] * qx[z],
        "xy": lx[x] * qx[y] - lx[y] * qx[x],
    }
    minors["xyz"] = minors["yz"] + minors["zx"] + minors["xy"]  # expansion along the row of ones
    ratios = [num["yz"] / a[0], num["zx"] / a[1], num["xy"] / a[2]]
    dx = {v: JetExpr.jet(v, 1) for v in names}
    det3 = (X * (dx[y] * d2[z] - dx[z] * d2[y])
            - Y * (dx[x] * d2[z] - dx[z] * d2[x])
            + Z * (dx[x] * d2[y] - dx[y] * d2[x]))
    bundle = PhiBundle(exps, variant, tuple(names), d2, a, num, minors, ratios, det3)
    if verify:
        bundle.checks = phi_identity_checks(bundle, relations)
        if not all(bundle.checks.values()):
            failed = [k for k, v in bundle.checks.items() if not v]
            raise AssertionError(f"Phi identities failed: {failed}")
    return bundle


def eliminate_last(relations, bundle: PhiBundle):
    """Solve the two relations for the jets of the last variable (generic chart)."""
    x, y, z = bundle.names
    a = bundle.weights
    first, second = relations[0].expr, relations[1].expr
    dz_sym, d2z_sym = JetSymbol(z, 1), JetSymbol(z, 2)
    if not a[2].is_monomial():
        raise EliminationFailure("weight of the eliminated variable is not a monomial")
    ainv = a[2].inverse()
    # first = a_z dz + rest1, with rest1 free of dz
    rest1 = substitute(first, {dz_sym: JetExpr()})
    dz = -(rest1 * ainv)
    if substitute(first, {dz_sym: dz}) != JetExpr():
        raise EliminationFailure("first relation is not linear in dz")
    sec = substitute(second, {dz_sym: dz})
    rest2 = substitute(sec, {d2z_sym: JetExpr()})
    coeff = _coefficient_of(sec, d2z_sym)
    if coeff is None or not coeff.is_monomial():
        raise EliminationFailure("second relation is not linear in d2z with monomial coefficient")
    d2z = -(rest2 * coeff.inverse())
    if substitute(sec, {d2z_sym: d2z}) != JetExpr():
        raise EliminationFailure("elimination of d2z did not close")
    return {dz_sym: dz, d2z_sym: d2z}


def _coefficient_of(e: JetExpr, sym: JetSymbol):
    out = {}
    for mono, c in e.terms.items():
        d = dict(mono)
        k = d.get(sym)
        if k is None:
            continue
        if k != 1:
            return None
        del d[sym]
        out[tuple(sorted(d.items(), key=lambda kv: (kv[0].name, kv[0].log, kv[0].order)))] = c
    return JetExpr(out)


def phi_identity_checks(bundle: PhiBundle, relations) -> dict:
    x, y, z = bundle.names
    X, Y, Z = (JetExpr.var(v) for v in bundle.names)
    num = bundle.numerators
    checks = {}
    checks["cofactor_expansion"] = (X * num["yz"] + Y * num["zx"] + Z * num["xy"]) == bundle.det3
    checks["det3_equals_xyz_Mxyz"] = bundle.det3 == X * Y * Z * bundle.minors["xyz"]
    checks["yz_Myz_equals_Nyz"] = (Y * Z * bundle.minors["yz"] == num["yz"]
                                  and Z * X * bundle.minors["zx"] == num["zx"]
                                  and X * Y * bundle.minors["xy"] == num["xy"])
    elim = eliminate_last(relations, bundle)
    r = [substitute(q, elim) for q in bundle.ratios]
    checks["ratio1_equals_ratio2"] = r[0] == r[1]
    checks["ratio1_equals_ratio3"] = r[0] == r[2]
    # weighted average: (sum a_v v) Phi = det3 on the jet relations
    avg = sum((a_v * JetExpr.var(v) for a_v, v in zip(bundle.weights, bundle.names)), JetExpr())
    checks["weighted_average"] = substitute(avg * bundle.ratios[0] - bundle.det3, elim) == JetExpr()
    return checks


def phi_equals_det3_on_surface(bundle: PhiBundle) -> dict:
    """The one use of the defining equation: rewrite the averaging factor to 1."""
    avg = sum((a_v * JetExpr.var(v) for a_v, v in zip(bundle.weights, bundle.names)), JetExpr())
    eq = defining_equation(bundle.exponents, bundle.variant, names=bundle.names)
    rewrite_applies = bundle.variant == "fermat" and avg == eq
    return {
        "averaging_factor": avg.to_text(),
        "rewrite": f"{eq.to_text()} -> 1",
        "applies": rewrite_applies,
        "conclusion": "Phi = det3 = (xyz) M_xyz" if rewrite_applies
        else "det3 = (averaging factor) * Phi",
    }


# ---------------------------------------------------------------------------
# expansion of Phi * x^(n-1)
# ---------------------------------------------------------------------------

def phi_expansion_rhs(coefficient=None, names=VARS):
    """``(dy d2z - dz d2y) + c dy dz (dz/z - dy/y)`` with ``c = n - 1`` by default."""
    x, y, z = names
    c = ex.parse_exponent("n-1") if coefficient is None else coefficient
    dy, dz = JetExpr.jet(y, 1), JetExpr.jet(z, 1)
    d2y, d2z = JetExpr.jet(y, 2), JetExpr.jet(z, 2)
    Y, Z = JetExpr.var(y), JetExpr.var(z)
    return (dy * d2z - dz * d2y) + (dy * dz * (dz * Z.inverse() - dy * Y.inverse())).scale(
        c if isinstance(c, Scalar) else _as_scalar(c))


def _as_scalar(c):
    from .jets import exponent_scalar
    if isinstance(c, (Exponent, int)):
        return exponent_scalar(c)
    if isinstance(c, str):
        return exponent_scalar(ex.parse_exponent(c))
    return Scalar.coerce(c)


def phi_expansion_check(phi: PhiBundle | None = None, coefficient=None, assignment=None) -> bool:
    phi = phi or build_phi(verify=False)
    if phi.variant != "fermat":
        raise ValueError("the expansion applies to the Fermat variant")
    lhs = phi.ratios[0] * phi.weights[0]
    rhs = phi_expansion_rhs(coefficient, phi.names)
    if assignment:
        lhs = lhs.subs_params(assignment)
        rhs = rhs.subs_params(assignment)
    return lhs == rhs


# ---------------------------------------------------------------------------
# pole orders
# ---------------------------------------------------------------------------

TARGETS = {
    "xyzPhi": ("fermat", (1, 1, 1)),
    "xy/zPhi": ("fermat", (1, 1, -1)),
    "generalized_xyzPhi": ("generalized", (1, 1, 1)),
}
TARGET_ALIASES = {
    "xyzphi": "xyzPhi", "xyz_phi": "xyzPhi",
    "xy/zphi": "xy/zPhi", "xy_over_z_phi": "xy/zPhi", "xyphi/z": "xy/zPhi",
    "generalized_xyzphi": "generalized_xyzPhi", "gen_xyzphi": "generalized_xyzPhi",
}


def resolve_target(name: str) -> str:
    if name in TARGETS:
        return name
    key = name.replace(" ", "").lower()
    if key in TARGET_ALIASES:
        return TARGET_ALIASES[key]
    raise KeyError(f"unknown target {name!r}; choose from {sorted(TARGETS)}")


@dataclass
class PoleReport:
    target: str
    divisor: str
    valuation: object              # int or Exponent
    log_valuation: object          # valuation after the d log rewrite
    log_pole: bool                 # true when log coefficients are holomorphic
    holomorphic: object            # True / False / None (undecided) under the assumptions
    vanishing: object
    holomorphy_threshold: object   # least n0, or None when not n-dependent
    vanishing_threshold: object
    representative: str
    intermediates: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "divisor": self.divisor,
            "valuation": ex.exponent_text(self.valuation),
            "log_valuation": ex.exponent_text(self.log_valuation),
            "log_pole": self.log_pole,
            "holomorphic": self.holomorphic,
            "vanishing": self.vanishing,
            "holomorphy_threshold": self.holomorphy_threshold,
            "vanishing_threshold": self.vanishing_threshold,
            "representative": self.representative,
            "intermediates": {k: ex.exponent_text(v) for k, v in self.intermediates.items()},
            "notes": list(self.notes),
        }


def target_prefactor(target: str, names=VARS) -> JetExpr:
    _, powers = TARGETS[resolve_target(target)]
    out = JetExpr.const(1)
    for v, p in zip(names, powers):
        out = out * JetExpr.var(v) ** p
    return out


def target_expression(target: str = "xyzPhi", exponents=None, names=VARS) -> JetExpr:
    """The target as a jet differential in the affine chart (prefactor times the first ratio)."""
    variant, _ = TARGETS[resolve_target(target)]
    bundle = build_phi(exponents=exponents, variant=variant, names=names, verify=False)
    return target_prefactor(target, names) * bundle.ratios[0]


def infinity_chart(names=VARS) -> dict:
    x, y, z = names
    w, u, v = JetExpr.var("w"), JetExpr.var("u"), JetExpr.var("v")
    winv = w.inverse()
    return {x: winv, y: u * winv, z: v * winv}


def _decide(assumptions: Assumptions, e, level: int):
    try:
        return assumptions.is_nonnegative(ex.sub(e, level))
    except IncomparableExponents:
        return None


def _thresholds(val):
    try:
        return ex.threshold(val, 0), ex.threshold(val, 1)
    except IncomparableExponents:
        return None, None


def pole_report(target: str = "xyzPhi", assumptions=None, assignment=None, exponents=None) -> list:
    """Valuations of a Phi-multiple along w=0 (infinity), x=0, y=0 and z=0."""
    target = resolve_target(target)
    variant, _ = TARGETS[target]
    if isinstance(assumptions, str) or assumptions is None:
        assumptions = Assumptions.parse(assumptions)
    bundle = build_phi(exponents=exponents, variant=variant, verify=False)
    pref = target_prefactor(target)
    x, y, z = bundle.names

    def spec(e):
        return e.subs_params(assignment) if assignment else e

    def fix(val):
        return ex.substitute(val, assignment) if assignment else val

    reports = []
    # divisor at infinity through the chart x = 1/w, y = u/w, z = v/w
    chart = infinity_chart(bundle.names)
    dy, dz = JetExpr.jet(y, 1), JetExpr.jet(z, 1)
    d2y, d2z = JetExpr.jet(y, 2), JetExpr.jet(z, 2)
    Y, Z = JetExpr.var(y), JetExpr.var(z)
    part_a = dy * d2z - dz * d2y
    part_b = dy * dz * (dz * Z.inverse() - dy * Y.inverse())
    numerator = pref * bundle.numerators["yz"]
    whole = numerator / bundle.weights[0]
    inter = {}
    for key, e in (("dy_d2z_minus_dz_d2y", part_a), ("dy_dz_dlog_difference", part_b),
                   ("prefactor", pref), ("numerator", numerator), ("denominator", bundle.weights[0])):
        inter[key] = fix(valuation(substitute_chart(spec(e), chart), "w", assumptions))
    img = substitute_chart(spec(whole), chart)
    val = fix(valuation(img, "w", assumptions))
    lval = fix(valuation(substitute(img, _log_map("w")), "w", assumptions))
    reports.append(_make_report(target, "w=0", val, lval, assumptions,
                                f"({pref.to_text()})*N_yz/a_x in the chart x=1/w, y=u/w, z=v/w",
                                inter))
    # coordinate divisors, each with the ratio free of that variable's weight
    for var in (x, y, z):
        ratio = bundle.ratio_for(var)
        e = spec(pref * ratio)
        val = fix(valuation(e, var, assumptions))
        lval = fix(valuation(substitute(e, _log_map(var)), var, assumptions))
        reports.append(_make_report(target, f"{var}=0", val, lval, assumptions,
                                    _ratio_name(bundle, ratio, pref), {}))
    return reports


def _log_map(v):
    from .jets import log_substitution
    return log_substitution(v)


def _ratio_name(bundle, ratio, pref):
    names = {0: "N_yz/a_x", 1: "N_zx/a_y", 2: "N_xy/a_z"}
    for j, r in enumerate(bundle.ratios):
        if r is ratio:
            return f"({pref.to_text()})*{names[j]}"
    return "?"


def _make_report(target, divisor, val, lval, assumptions, rep, inter):
    # holomorphic/vanishing keep their ordinary meaning; a pole cured by d log is
    # recorded separately as a log pole and never counts as holomorphic
    hol = _decide(assumptions, val, 0)
    van = _decide(assumptions, val, 1)
    holo_log = _decide(assumptions, lval, 0)
    log_pole = hol is False and holo_log is True
    if hol is None and holo_log is True and not isinstance(val, Exponent):
        log_pole = True
    h0 = v0 = None
    notes = []
    if isinstance(val, Exponent):
        h0, v0 = _thresholds(val)
    if log_pole:
        notes.append("ordinary pole removed by rewriting through d log; logarithmic pole")
    return PoleReport(target, divisor, val, lval, log_pole, hol, van, h0, v0, rep, inter, notes)


# ---------------------------------------------------------------------------
# chart correspondence between (x, y, z, 1) and (x, y, 1, w)
# ---------------------------------------------------------------------------

@dataclass
class CorrespondenceResult:
    literal_equal: bool
    factor: str
    factor_is_transition_monomial: bool
    involution: bool
    numeric_ratio_error: float
    details: dict = field(default_factory=dict)

    @property
    def corresponds(self) -> bool:
        return self.factor_is_transition_monomial and self.involution

    def as_dict(self):
        return {
            "literal_equal": self.literal_equal,
            "factor": self.factor,
            "factor_is_transition_monomial": self.factor_is_transition_monomial,
            "involution": self.involution,
            "numeric_ratio_error": self.numeric_ratio_error,
            "corresponds": self.corresponds,
            **self.details,
        }


def _swap_chart():
    X, Y, W = JetExpr.var("x"), JetExpr.var("y"), JetExpr.var("w")
    winv = W.inverse()
    return {"x": X * winv, "y": Y * winv, "z": winv}


def _swap_back():
    X, Y, Z = JetExpr.var("x"), JetExpr.var("y"), JetExpr.var("z")
    zinv = Z.inverse()
    return {"x": X * zinv, "y": Y * zinv, "w": zinv}


def chart_swap_details(seed: int = 9):
    """Transport ``xyz Phi_xyz`` to the chart (x, y, 1, w) and compare with ``(xy/w) Phi_xyw``.

    ``Phi_xyw`` is built from ``x^n + y^n + 1 = w^n``, i.e. weights
    ``(x^(n-1), y^(n-1), -w^(n-1))``, taking the representative over ``x^(n-1)``.
    Returns the exact monomial factor by which the two sides differ.
    """
    a = build_phi(verify=False)
    X, Y, Z = (JetExpr.var(v) for v in VARS)
    lhs = substitute_chart(X * Y * Z * a.ratios[0], _swap_chart())
    b = build_phi(variant="fermat", coefficients=(1, 1, -1), names=("x", "y", "w"), verify=False)
    W = JetExpr.var("w")
    rhs = JetExpr.var("x") * JetExpr.var("y") * W.inverse() * b.ratios[0]
    literal = lhs == rhs
    factor = _monomial_quotient(lhs, rhs)
    is_transition = False
    ftext = "not a monomial"
    if factor is not None:
        ftext = factor.to_text()
        (mono, c), = factor.terms.items()
        is_transition = (all(sym.name == "w" and sym.is_base for sym, _ in mono)
                         and c in (Scalar.rational(1), Scalar.rational(-1)))
    # transporting there and back is the identity
    there = substitute_chart(X * Y * Z * a.ratios[0], _swap_chart())
    back = substitute_chart(there, _swap_back())
    involution = back == X * Y * Z * a.ratios[0]
    err = _numeric_ratio_error(lhs, rhs, factor, seed)
    return CorrespondenceResult(literal, ftext, is_transition, involution, err,
                                {"lhs_terms": len(lhs.terms), "rhs_terms": len(rhs.terms)})


def _monomial_quotient(a: JetExpr, b: JetExpr):
    if a.is_zero() or b.is_zero():
        return None
    ka = a.sorted_terms()[0]
    best = None
    for mono, c in b.terms.items():
        cand = JetExpr({ka[0]: ka[1]}) / JetExpr({mono: c})
        if isinstance(cand, JetExpr) and cand * b == a:
            best = cand
            break
    return best


def _numeric_ratio_error(lhs, rhs, factor, seed):
    """Evaluate both sides at a random complex point (n=9) and compare through the factor."""
    import random
    if factor is None:
        return float("inf")
    rng = random.Random(seed)
    point = {}
    for e in (lhs, rhs, factor):
        for sym in e.symbols():
            point.setdefault(sym, complex(rng.uniform(0.5, 2), rng.uniform(-1, 1)))
    assign = {"n": 9}
    lv = evaluate_jet(lhs, point, assign)
    rv = evaluate_jet(rhs, point, assign) * evaluate_jet(factor, point, assign)
    return abs(lv - rv) / max(abs(lv), 1e-300)


def evaluate_jet(e, point: dict, assignment: dict):
    """Numeric value of a jet expression at a point of jet space."""
    import mpmath
    if isinstance(e, JetFraction):
        return evaluate_jet(e.num, point, assignment) / evaluate_jet(e.den, point, assignment)
    with mpmath.workdps(40):
        total = mpmath.mpc(0)
        for mono, c in e.terms.items():
            term = mpmath.mpc(c.eval_numeric(assignment, precision=30, as_mpmath=True))
            for sym, k in mono:
                kk = ex.substitute(k, assignment)
                if isinstance(kk, Exponent):
                    raise ValueError("unassigned exponent parameter")
                term *= mpmath.mpc(point[sym]) ** int(kk)
            total += term
        return complex(total)


def chart_swap_correspondence() -> bool:
    """True when the two jet differentials agree up to the chart transition factor +-w^k."""
    return chart_swap_details().corresponds
