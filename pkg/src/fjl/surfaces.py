"""Monomial surfaces in P^3: singular points, genus formulas and the existence table."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import exponents as ex
from .jets import JetExpr, declare_variables
from .parsing import Context, parse
from .scalars import ONE, Scalar, ZETA24, adjoin_radical, numeric_radical

COORDS = ("X", "Y", "Z", "W")
declare_variables(*COORDS)


class SurfaceError(ValueError):
    pass


class NonIntegerGenus(SurfaceError):
    pass


# ---------------------------------------------------------------------------
# surfaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialSurface:
    terms: tuple            # ((Scalar, (a, b, c, d)), ...)

    @classmethod
    def parse(cls, text: str) -> "MonomialSurface":
        ctx = Context(variables={v: v for v in COORDS} | {v.lower(): v for v in COORDS})
        left, sep, right = text.partition("=")
        e = parse(left, ctx)
        if sep:
            e = e - parse(right, ctx)
        return cls.from_expr(e)

    @classmethod
    def from_expr(cls, e: JetExpr) -> "MonomialSurface":
        terms = []
        for mono, c in e.sorted_terms():
            exps = [0, 0, 0, 0]
            for sym, k in mono:
                if sym.order or sym.name not in COORDS or not isinstance(k, int) or k < 0:
                    raise SurfaceError(f"not a polynomial in X, Y, Z, W: {e}")
                exps[COORDS.index(sym.name)] = k
            terms.append((c, tuple(exps)))
        return cls(tuple(terms))

    @property
    def degree(self) -> int:
        return sum(self.terms[0][1])

    def is_homogeneous(self) -> bool:
        return len({sum(e) for _, e in self.terms}) == 1

    def is_delsarte(self) -> bool:
        return (self.is_homogeneous() and self.degree >= 2 and len(self.terms) <= 4
                and all(sum(1 for k in e if k) <= 2 for _, e in self.terms))

    def polynomial(self) -> list:
        return list(self.terms)

    def partial(self, j: int) -> list:
        out = []
        for c, e in self.terms:
            if e[j]:
                d = list(e)
                d[j] -= 1
                out.append((c * e[j], tuple(d)))
        return out

    def evaluate(self, point, poly=None) -> Scalar:
        poly = self.terms if poly is None else poly
        total = Scalar()
        for c, e in poly:
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def to_text(self) -> str:
        e = JetExpr()
        for c, exps in self.terms:
            m = JetExpr.const(c)
            for v, k in zip(COORDS, exps):
                if k:
                    m = m * JetExpr.var(v) ** k
            e = e + m
        return e.to_text()


def fermat_surface(n: int) -> MonomialSurface:
    return MonomialSurface.parse(f"X^{n} + Y^{n} + Z^{n} - W^{n}")


def smooth_delsarte(n: int) -> MonomialSurface:
    """X^n + Y^n + Z^(n-1) W - W^n."""
    return MonomialSurface.parse(f"X^{n} + Y^{n} + Z^{n - 1}*W - W^{n}")


def singular_delsarte(n: int) -> MonomialSurface:
    """X^n + Y^(n-1) W + Z^(n-1) W - W^n."""
    return MonomialSurface.parse(f"X^{n} + Y^{n - 1}*W + Z^{n - 1}*W - W^{n}")


# ---------------------------------------------------------------------------
# singular locus
# ---------------------------------------------------------------------------

@dataclass
class SingularityVerdict:
    status: str                       # Smooth | IsolatedSingular | Unknown
    points: list = field(default_factory=list)
    verified: bool = True
    notes: list = field(default_factory=list)

    def point_texts(self):
        return ["[" + ":".join(x.to_text() for x in p) + "]" for p in self.points]

    def as_dict(self):
        return {"status": self.status, "points": self.point_texts(), "verified": self.verified,
                "notes": list(self.notes)}


class _Unknown(Exception):
    pass


def _roots_of_unity(k: int) -> list:
    if 24 % k == 0:
        z = ZETA24 ** (24 // k)
    else:
        name = f"zeta{k}"
        z = adjoin_radical(name, k, ONE, branch=1)
    out = [ONE]
    for _ in range(k - 1):
        out.append(out[-1] * z)
    return out


def _all_roots(c: Scalar, k: int) -> list:
    """All k-th roots of a rational c."""
    if not c.is_rational():
        raise _Unknown(f"root of the irrational constant {c}")
    r = c.rational_value()
    if r == 0:
        return [Scalar()]
    base = numeric_radical(r, k)
    return [base * u for u in _roots_of_unity(k)]


def _solve_binomials(rows, nvars):
    """All torus solutions of u^a_i = c_i (a_i integer vectors, c_i scalars)."""
    rows = [(list(a), c) for a, c in rows]
    eqs = []
    for col in range(nvars):
        # Euclid on column `col` among the remaining rows
        while True:
            live = [i for i, (a, _) in enumerate(rows) if a[col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(rows[i][0][col]))
            p = live[0]
            ap, cp = rows[p]
            for i in live[1:]:
                a, c = rows[i]
                q = a[col] // ap[col]
                rows[i] = ([x - q * y for x, y in zip(a, ap)], c / cp ** q)
        live = [i for i, (a, _) in enumerate(rows) if a[col] != 0]
        if not live:
            raise _Unknown("positive-dimensional singular locus")
        a, c = rows.pop(live[0])
        if a[col] < 0:
            a, c = [-x for x in a], c.inverse()
        eqs.append((a, c))
    for a, c in rows:                 # leftover rows read 1 = c
        if not (c - 1).is_zero():
            if c.is_rational():
                return []
            raise _Unknown("undecided consistency condition")
    sols = [[None] * nvars]
    for col in reversed(range(nvars)):
        a, c = eqs[col]
        nxt = []
        for s in sols:
            rhs = c
            for j in range(col + 1, nvars):
                if a[j]:
                    rhs = rhs / s[j] ** a[j]
            roots = [rhs] if a[col] == 1 else _all_roots(rhs, a[col])
            for r in roots:
                t = list(s)
                t[col] = r
                nxt.append(t)
        sols = nxt
    return sols


def _collect(poly):
    out = {}
    for c, e in poly:
        out[e] = out.get(e, Scalar()) + c
    return [(c, e) for e, c in out.items() if not c.is_zero()]


def singular_locus(surface: MonomialSurface) -> SingularityVerdict:
    if not surface.is_homogeneous():
        raise SurfaceError("a projective surface needs a homogeneous equation")
    if not surface.is_delsarte():
        return SingularityVerdict("Unknown", verified=False, notes=["not of Delsarte shape"])
    grads = [_collect(surface.partial(j)) for j in range(4)]
    points = []
    try:
        for size in range(1, 5):
            for V in itertools.combinations(range(4), size):
                points.extend(_pattern_points(grads, V))
    except _Unknown as exc:
        return SingularityVerdict("Unknown", verified=False, notes=[str(exc)])
    verified = all(surface.evaluate(p).is_zero()
                   and all(surface.evaluate(p, g).is_zero() for g in grads) for p in points)
    if not points:
        return SingularityVerdict("Smooth", [], verified)
    return SingularityVerdict("IsolatedSingular", points, verified)


def _pattern_points(grads, V):
    """Singular points whose nonzero coordinates are exactly V."""
    zero = [j for j in range(4) if j not in V]
    chart = V[-1]
    free = [j for j in V if j != chart]
    rows = []
    for g in grads:
        live = [(c, e) for c, e in g if all(e[k] == 0 for k in zero)]
        if not live:
            continue
        if len(live) == 1:
            return []
        if len(live) > 2:
            raise _Unknown("gradient component with more than two surviving monomials")
        (c1, e1), (c2, e2) = live
        a = [e1[j] - e2[j] for j in free]
        rows.append((a, -c2 / c1))
    if not free:
        if rows:
            ok = all((c - 1).is_zero() for a, c in rows)
            return [[ONE if j == chart else Scalar() for j in range(4)]] if ok else []
        return [[ONE if j == chart else Scalar() for j in range(4)]]
    if len(rows) < len(free) and not rows:
        raise _Unknown("positive-dimensional singular locus")
    out = []
    for sol in _solve_binomials(rows, len(free)):
        p = [Scalar() for _ in range(4)]
        p[chart] = ONE
        for j, v in zip(free, sol):
            p[j] = v
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# genus formulas
# ---------------------------------------------------------------------------

def ci_genus(d1: int, d2: int) -> int:
    if d1 < 1 or d2 < 1:
        raise SurfaceError("degrees must be positive")
    num = d1 * d2 * (d1 + d2 - 4)
    if num % 2:
        raise NonIntegerGenus(f"({d1}, {d2})")
    return 1 + num // 2


def fermat_plane_genus(n: int) -> int:
    if n < 1:
        raise SurfaceError("n must be positive")
    return (n - 1) * (n - 2) // 2


# ---------------------------------------------------------------------------
# existence table
# ---------------------------------------------------------------------------

CITATIONS = {
    "THM-1.1": "no non-trivial entire solution when n = m = l >= 6",
    "THM-1.2": "no non-trivial meromorphic solution when n = m = l >= 8",
    "THM-7.1": "no non-trivial meromorphic solution when 1/n + 1/m + 1/l <= 3/8",
    "TODA": "non-constant entire solutions force 1/n + 1/m + 1/l >= 1/2",
    "OPEN-N7": "meromorphic n = 7 conjectured to have non-trivial solutions",
    "GUNDERSEN-N6": "elliptic meromorphic solutions for n = 6 (not exactly checkable here)",
}


@dataclass
class Verdict:
    exponents: tuple
    meromorphic: str
    entire: str
    citations: dict

    def as_dict(self):
        return {"exponents": list(self.exponents), "meromorphic": self.meromorphic,
                "entire": self.entire, "citations": dict(self.citations)}


def _witness(triple, catalog=None):
    """A catalog entry with these exponents, non-trivial and residual zero."""
    from .solutions import classify, load_catalog, residual_is_zero
    cat = catalog or load_catalog()
    target = sorted(triple)
    cands = [cat.get(n) for n in cat.names()]
    for name, p in cat.templates().items():
        rec = cat.records[name]
        parts = [s.strip() for s in rec["exponents"].split(",")]
        fixed = sorted(int(s) for s in parts if "{" not in s)
        rest = list(target)
        ok = True
        for v in fixed:
            if v in rest:
                rest.remove(v)
            else:
                ok = False
        if ok and len(rest) == 1 and rest[0] >= 1:
            cands.append(cat.get(name, **{p.strip(): rest[0]}))
    for e in cands:
        if sorted(e.exponents) != target:
            continue
        if classify(e).startswith("trivial"):
            continue
        if residual_is_zero(e):
            return e
    return None


def threshold_verdict(n: int, m: int, l: int, catalog=None) -> Verdict:
    n, m, l = sorted((int(n), int(m), int(l)), reverse=True)
    if l < 1:
        raise SurfaceError("exponents must be positive")
    s = Fraction(1, n) + Fraction(1, m) + Fraction(1, l)
    cites = {}
    mero = entire = None
    if s <= Fraction(3, 8):
        mero = "None"
        cites["meromorphic"] = "THM-7.1"
    if n == m == l >= 8:
        mero = "None"
        cites["meromorphic"] = "THM-1.2"
    if mero == "None":
        entire = "None"
        cites["entire"] = cites["meromorphic"]
    elif n == m == l >= 6:
        entire = "None"
        cites["entire"] = "THM-1.1"
    elif s < Fraction(1, 2):
        entire = "None"
        cites["entire"] = "TODA"
    w = _witness((n, m, l), catalog) if (entire is None or mero is None) else None
    if w is not None:
        if entire is None and w.classification == "entire":
            entire = "Exists"
            cites["entire"] = f"CATALOG:{w.name}"
        if mero is None:
            mero = "Exists"
            cites["meromorphic"] = f"CATALOG:{w.name}"
    if mero is None and n == m == l == 6:
        mero = "Exists"
        cites["meromorphic"] = "GUNDERSEN-N6"
    if mero is None and n == m == l == 7:
        mero = "Open"
        cites["meromorphic"] = "OPEN-N7"
    if mero is None:
        mero = "Open"
        cites["meromorphic"] = "OPEN"
    if entire is None:
        entire = "Open"
        cites["entire"] = "OPEN"
    return Verdict((n, m, l), mero, entire, cites)


@dataclass
class GapTriple:
    exponents: tuple
    total: Fraction
    flagged: bool

    def as_dict(self):
        return {"exponents": list(self.exponents), "sum": str(self.total), "flagged": self.flagged}


def gap_enumeration(bound: int) -> list:
    """Triples n >= m >= l >= 8, n <= bound, with 25/72 <= 1/n + 1/m + 1/l <= 3/8.

    Flagged triples are those with every exponent at most 9: the cases left
    once the boundary triples with an exponent of 10 or more are dominated.
    """
    if bound < 9:
        raise SurfaceError("bound must be at least 9")
    lo, hi = Fraction(25, 72), Fraction(3, 8)
    out = []
    for n in range(8, bound + 1):
        for m in range(8, n + 1):
            for l in range(8, m + 1):
                s = Fraction(1, n) + Fraction(1, m) + Fraction(1, l)
                if lo <= s <= hi:
                    out.append(GapTriple((n, m, l), s, max(n, m, l) <= 9))
    return out


# ---------------------------------------------------------------------------
# covering identity
# ---------------------------------------------------------------------------

@dataclass
class CoverReport:
    n: object
    holds: bool
    verbatim_holds: object
    lhs: str
    rhs: str
    flags: list = field(default_factory=list)

    def as_dict(self):
        return {"n": ex.exponent_text(self.n), "holds": self.holds, "verbatim_holds": self.verbatim_holds,
                "lhs": self.lhs, "rhs": self.rhs, "flags": list(self.flags)}


def _cover_lhs(n, phi2_power=None, phi3_power=None):
    x, y, z, w = (JetExpr.var(v) for v in "xyzw")
    n1 = ex.sub(n, 1)
    phi = [x ** n1, y ** n * w ** -1, z ** n * w ** -1, w ** n1]
    p2 = n1 if phi2_power is None else phi2_power
    p3 = n1 if phi3_power is None else phi3_power
    return phi[0] ** n + phi[3] * phi[1] ** p2 + phi[3] * phi[2] ** p3 + phi[3] ** n


def _cover_rhs(n, y_power=None, z_power=None):
    x, y, z, w = (JetExpr.var(v) for v in "xyzw")
    N = ex.mul(n, ex.sub(n, 1))
    return (x ** N + y ** (N if y_power is None else y_power)
            + z ** (N if z_power is None else z_power) + w ** N)


def shioda_cover_check(n="n", phi2_power=None) -> bool:
    return shioda_cover_details(n, phi2_power).holds


def shioda_cover_details(n="n", phi2_power=None) -> CoverReport:
    n = ex.coerce(n)
    if not isinstance(n, ex.Exponent) and n < 2:
        raise SurfaceError("n must be at least 2")
    lhs = _cover_lhs(n, phi2_power)
    rhs = _cover_rhs(n)
    holds = lhs == rhs
    verbatim = None
    if not isinstance(n, ex.Exponent):
        vp = (n - 1) ** n
        verbatim = _cover_lhs(n) == _cover_rhs(n, vp, vp)
    return CoverReport(n, holds, verbatim, lhs.to_text(), rhs.to_text(),
                       ["covering display: exponent (n-1)^n of y and z read as n(n-1)"])
