"""Symbolic exponents and the assumption sets used to compare them.

An exponent is a polynomial over Q in the formal parameters ``n, m, l``.
Constant exponents are kept as plain ``int`` (or ``Fraction``) so the common
case costs nothing; only genuinely symbolic ones become :class:`Exponent`.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

import flint

EXPONENT_PARAMETERS = ("n", "m", "l")
_ECTX = flint.fmpq_mpoly_ctx.get(EXPONENT_PARAMETERS, "lex")


class IncomparableExponents(ValueError):
    """An order question whose answer depends on information not in the assumptions."""


class Exponent:
    __slots__ = ("poly", "_key")

    def __init__(self, poly):
        self.poly = poly
        self._key = None

    @staticmethod
    def wrap(poly):
        """Collapse constant polynomials to ``int``/``Fraction``."""
        if poly.is_constant():
            if poly.is_zero():
                return 0
            c = poly.leading_coefficient()
            f = Fraction(int(c.p), int(c.q))
            return f.numerator if f.denominator == 1 else f
        return Exponent(poly)

    @staticmethod
    def param(name: str) -> "Exponent":
        return Exponent(_ECTX.gen(EXPONENT_PARAMETERS.index(name)))

    @staticmethod
    def affine(a=0, n=0, m=0, l=0):
        """``a + n*n + m*m + l*l`` (collapsing to a number when constant)."""
        x, y, z = _ECTX.gens()
        return Exponent.wrap(_ECTX.constant(_q(a)) + _q(n) * x + _q(m) * y + _q(l) * z)

    def key(self) -> str:
        if self._key is None:
            self._key = str(self.poly)
        return self._key

    def __eq__(self, other):
        if isinstance(other, Exponent):
            return self.poly == other.poly
        return False

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Exponent({self.key()})"

    def __str__(self):
        return exponent_text(self)

    def is_affine(self) -> bool:
        return all(sum(mono) <= 1 for mono in self.poly.monoms())

    def coefficients(self) -> dict:
        """Map from ``(deg_n, deg_m, deg_l)`` to ``Fraction``."""
        return {tuple(mono): Fraction(int(c.p), int(c.q))
                for mono, c in zip(self.poly.monoms(), self.poly.coeffs())}

    def free(self) -> set:
        return {EXPONENT_PARAMETERS[j] for mono in self.poly.monoms()
                for j, e in enumerate(mono) if e}

    # arithmetic is delegated to the module helpers so ints mix freely
    def __add__(self, o):
        return add(self, o) if _is_exp(o) else NotImplemented

    __radd__ = __add__

    def __sub__(self, o):
        return sub(self, o) if _is_exp(o) else NotImplemented

    def __rsub__(self, o):
        return sub(o, self) if _is_exp(o) else NotImplemented

    def __neg__(self):
        return neg(self)

    def __mul__(self, o):
        return mul(self, o) if _is_exp(o) else NotImplemented

    __rmul__ = __mul__


def _is_exp(o) -> bool:
    return isinstance(o, (Exponent, int, Fraction)) and not isinstance(o, bool)


AffineOrder = Exponent


def _q(x):
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


def as_poly(e):
    if isinstance(e, Exponent):
        return e.poly
    return _ECTX.constant(_q(e))


def is_symbolic(e) -> bool:
    return isinstance(e, Exponent)


def add(a, b):
    if not isinstance(a, Exponent) and not isinstance(b, Exponent):
        return _norm_number(a + b)
    return Exponent.wrap(as_poly(a) + as_poly(b))


def sub(a, b):
    if not isinstance(a, Exponent) and not isinstance(b, Exponent):
        return _norm_number(a - b)
    return Exponent.wrap(as_poly(a) - as_poly(b))


def neg(a):
    if not isinstance(a, Exponent):
        return -a
    return Exponent(-a.poly)


def mul(a, b):
    if not isinstance(a, Exponent) and not isinstance(b, Exponent):
        return _norm_number(a * b)
    return Exponent.wrap(as_poly(a) * as_poly(b))


def _norm_number(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def coerce(x):
    """Accept ints, Fractions, Exponents, or strings such as ``"n-1"``."""
    if isinstance(x, (Exponent, int, Fraction)) and not isinstance(x, bool):
        return _norm_number(x)
    if isinstance(x, str):
        return parse_exponent(x)
    if hasattr(x, "poly"):
        return Exponent.wrap(x.poly)
    raise TypeError(f"not an exponent: {x!r}")


def parse_exponent(text: str):
    """Parse a polynomial exponent written with n, m, l, integers, + - * ( ) and ^."""
    if not re.fullmatch(r"[\snml0-9+\-*/^()]*", text) or not text.strip():
        raise ValueError(f"bad exponent {text!r}")
    env = {name: _ECTX.gen(j) for j, name in enumerate(EXPONENT_PARAMETERS)}
    expr = re.sub(r"(\d+)", r"_c(\1)", text.replace("^", "**"))
    env["_c"] = lambda k: _ECTX.constant(k)
    poly = eval(expr, {"__builtins__": {}}, env)  # restricted alphabet checked above
    return Exponent.wrap(poly)


def substitute(e, assignment):
    """Specialise parameters of an exponent (unassigned ones stay symbolic)."""
    if not isinstance(e, Exponent):
        return e
    vals = {k: _q(v) for k, v in assignment.items() if k in EXPONENT_PARAMETERS}
    if not vals:
        return e
    return Exponent.wrap(e.poly.subs(vals))


def sort_key(e):
    if isinstance(e, Exponent):
        return (1, 0, e.key())
    return (0, Fraction(e), "")


def exponent_text(e) -> str:
    if not isinstance(e, Exponent):
        return str(e)
    return str(e.poly).replace(" ", "").replace("*", "").replace("^", "**").replace("**", "^")


# ---------------------------------------------------------------------------
# assumptions
# ---------------------------------------------------------------------------

_BOUND_RE = re.compile(r"^\s*([nml])\s*(>=|<=|>|<|==|=)\s*(-?\d+)\s*$")


class Assumptions:
    """Integer box constraints ``lo <= p <= hi`` on n, m, l (either side optional)."""

    __slots__ = ("bounds",)

    def __init__(self, bounds: dict | None = None):
        self.bounds = dict(bounds or {})

    @classmethod
    def parse(cls, *texts) -> "Assumptions":
        bounds: dict = {}
        for text in texts:
            if text is None:
                continue
            if isinstance(text, Assumptions):
                for k, (lo, hi) in text.bounds.items():
                    _tighten(bounds, k, lo, hi)
                continue
            for piece in re.split(r"[,;]|\band\b", text):
                piece = piece.strip()
                if not piece or piece in ("n integer", "integer"):
                    continue
                match = _BOUND_RE.match(piece)
                if not match:
                    raise ValueError(f"cannot parse assumption {piece!r}")
                name, op, val = match.group(1), match.group(2), int(match.group(3))
                if op == ">=":
                    _tighten(bounds, name, val, None)
                elif op == ">":
                    _tighten(bounds, name, val + 1, None)
                elif op == "<=":
                    _tighten(bounds, name, None, val)
                elif op == "<":
                    _tighten(bounds, name, None, val - 1)
                else:
                    _tighten(bounds, name, val, val)
        return cls(bounds)

    def interval(self, name):
        return self.bounds.get(name, (None, None))

    def __and__(self, other: "Assumptions") -> "Assumptions":
        return Assumptions.parse(self, other)

    def __repr__(self):
        return f"Assumptions({self.describe()})"

    def describe(self) -> str:
        parts = []
        for name in EXPONENT_PARAMETERS:
            lo, hi = self.interval(name)
            if lo is not None and lo == hi:
                parts.append(f"{name}={lo}")
                continue
            if lo is not None:
                parts.append(f"{name}>={lo}")
            if hi is not None:
                parts.append(f"{name}<={hi}")
        return ", ".join(parts) if parts else "none"

    def minimum(self, e):
        """Exact infimum of ``e`` over the box (a Fraction or ``-math.inf``).

        Affine exponents are decided exactly from the box corners.  For
        polynomial ones each parameter is rewritten as ``lo + t`` with
        ``t >= 0``; if every non-constant coefficient is then nonnegative the
        constant term is the infimum, otherwise the question is refused.
        """
        if not isinstance(e, Exponent):
            return Fraction(e)
        coeffs = e.coefficients()
        if e.is_affine():
            total = coeffs.get((0, 0, 0), Fraction(0))
            for j, name in enumerate(EXPONENT_PARAMETERS):
                b = coeffs.get(tuple(1 if k == j else 0 for k in range(3)), Fraction(0))
                if not b:
                    continue
                lo, hi = self.interval(name)
                end = lo if b > 0 else hi
                if end is None:
                    return -math.inf
                total += b * end
            return total
        gens = list(_ECTX.gens())
        for j, name in enumerate(EXPONENT_PARAMETERS):
            lo, _ = self.interval(name)
            if name in e.free():
                if lo is None:
                    raise IncomparableExponents(
                        f"cannot bound {exponent_text(e)} under {self.describe()}")
                gens[j] = gens[j] + lo
        shifted = e.poly.compose(*gens)
        const = Fraction(0)
        for mono, c in zip(shifted.monoms(), shifted.coeffs()):
            c = Fraction(int(c.p), int(c.q))
            if any(mono):
                if c < 0:
                    raise IncomparableExponents(
                        f"cannot bound {exponent_text(e)} under {self.describe()}")
            else:
                const = c
        return const

    def maximum(self, e):
        return -self.minimum(neg(e))

    # decisions ---------------------------------------------------------------
    def is_nonnegative(self, e) -> bool:
        """True/False when decided for every parameter value in the box; else raise."""
        lo = self.minimum(e)
        if lo >= 0:
            return True
        hi = self._safe_max(e)
        if hi is not None and hi < 0:
            return False
        raise IncomparableExponents(
            f"sign of {exponent_text(e)} is not determined under {self.describe()}")

    def _safe_max(self, e):
        try:
            return self.maximum(e)
        except IncomparableExponents:
            return None

    def compare(self, a, b) -> int:
        """-1, 0, 1 for a<b, a==b, a>b throughout the box; raise if it varies."""
        d = sub(a, b)
        if not isinstance(d, Exponent):
            return (d > 0) - (d < 0)
        lo = self.minimum(d)
        hi = self._safe_max(d)
        if lo > 0:
            return 1
        if hi is not None and hi < 0:
            return -1
        if lo == 0 and hi == 0:
            return 0
        raise IncomparableExponents(
            f"{exponent_text(a)} vs {exponent_text(b)} undecided under {self.describe()}")

    def min_of(self, exps):
        """The element that is <= all others over the whole box."""
        exps = list(exps)
        if not exps:
            raise ValueError("empty minimum")
        best = exps[0]
        for e in exps[1:]:
            d = sub(e, best)
            if not isinstance(d, Exponent):
                if d < 0:
                    best = e
                continue
            if self.minimum(d) >= 0:
                continue
            hi = self._safe_max(d)
            if hi is not None and hi <= 0:
                best = e
                continue
            raise IncomparableExponents(
                f"minimum of {exponent_text(best)} and {exponent_text(e)} depends on parameters "
                f"(assumptions: {self.describe()})")
        return best


def _tighten(bounds, name, lo, hi):
    old_lo, old_hi = bounds.get(name, (None, None))
    if lo is not None:
        old_lo = lo if old_lo is None else max(old_lo, lo)
    if hi is not None:
        old_hi = hi if old_hi is None else min(old_hi, hi)
    if old_lo is not None and old_hi is not None and old_lo > old_hi:
        raise ValueError(f"empty assumption range for {name}")
    bounds[name] = (old_lo, old_hi)


NO_ASSUMPTIONS = Assumptions()


def threshold(e, level: int = 0, param: str = "n"):
    """Least integer ``p0`` with ``e >= level`` for every integer ``p >= p0``.

    ``e`` must be affine in ``param`` alone with positive slope; returns
    ``None`` when no threshold exists (slope <= 0 and the bound fails).
    """
    d = sub(e, level)
    if not isinstance(d, Exponent):
        return -math.inf if d >= 0 else None
    coeffs = d.coefficients()
    if d.free() != {param} or not d.is_affine():
        raise IncomparableExponents(f"threshold needs an affine exponent in {param}")
    j = EXPONENT_PARAMETERS.index(param)
    unit = tuple(1 if k == j else 0 for k in range(3))
    slope = coeffs.get(unit, Fraction(0))
    const = coeffs.get((0, 0, 0), Fraction(0))
    if slope <= 0:
        return None
    return math.ceil(-const / slope)
