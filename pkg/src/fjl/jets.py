"""The differential ring of jet expressions.

A :class:`JetExpr` is a finite sum of ``Scalar * monomial`` where a monomial
is a product of powers of :class:`JetSymbol`.  Base variables (order 0) may
carry symbolic exponents such as ``n - 1`` and negative exponents (Laurent
style); jets carry concrete integer exponents, and a negative jet exponent
encodes division by a jet monomial.  Anything that would need a non-monomial
denominator becomes a :class:`JetFraction`.

Because every monomial is a distinct basis element of the Laurent ring in
the free symbols, collecting like monomials (exponents compared as exact
polynomials in n, m, l) decides equality; there is no hidden simplification.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple

from . import exponents as ex
from .exponents import Assumptions, Exponent, IncomparableExponents
from .scalars import PARAMETERS, Coeff, Scalar, _CTX

MAX_ORDER = 3


class JetError(ArithmeticError):
    pass


class OrderOverflow(JetError):
    pass


class ZeroExpression(JetError, ValueError):
    pass


class NonMonomialPower(JetError, ValueError):
    pass


class UnknownVariable(JetError, KeyError):
    pass


_ALPHABET = {"x", "y", "z", "w", "u", "v", "f", "g", "h", "a", "b", "c", "e", "t", "X", "Y", "Z", "W"}


def declare_variables(*names: str) -> None:
    """Extend the alphabet of base-variable names."""
    for name in names:
        if not name.isidentifier():
            raise ValueError(f"bad variable name {name!r}")
        _ALPHABET.add(name)


def alphabet() -> frozenset:
    return frozenset(_ALPHABET)


class JetSymbol(NamedTuple):
    name: str
    order: int = 0
    log: bool = False

    def next(self) -> "JetSymbol":
        if self.order >= MAX_ORDER:
            raise OrderOverflow(f"derivative of {self.text()} needs order {self.order + 1}")
        return JetSymbol(self.name, self.order + 1, self.log)

    @property
    def is_base(self) -> bool:
        return self.order == 0 and not self.log

    def text(self) -> str:
        if self.log:
            return f"dlog({self.name})" if self.order == 1 else f"d{self.order}log({self.name})"
        if self.order == 0:
            return self.name
        if self.order == 1:
            return f"d({self.name})"
        return f"d{self.order}({self.name})"

    def tex(self) -> str:
        if self.log:
            return rf"d\log {self.name}" if self.order == 1 else rf"d^{{{self.order}}}\log {self.name}"
        if self.order == 0:
            return self.name
        if self.order == 1:
            return f"d{self.name}"
        return f"d^{{{self.order}}}{self.name}"

    def sort_key(self):
        return (self.name, self.log, self.order)


def _sym_sort(sym: JetSymbol):
    return (sym.name, sym.log, sym.order)


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

_EMPTY = ()


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for sym, e in b:
        old = d.get(sym)
        if old is None:
            d[sym] = e
        else:
            s = ex.add(old, e)
            if isinstance(s, Exponent) or s != 0:
                d[sym] = s
            else:
                del d[sym]
    return tuple(sorted(d.items(), key=lambda kv: _sym_sort(kv[0])))


def _mono_pow(a: tuple, k) -> tuple:
    if k == 0:
        return _EMPTY
    out = []
    for sym, e in a:
        p = ex.mul(e, k)
        if not sym.is_base and (isinstance(p, Exponent) or (isinstance(p, Fraction))):
            raise NonMonomialPower(f"jet {sym.text()} would get exponent {ex.exponent_text(p)}")
        if isinstance(p, Exponent) or p != 0:
            out.append((sym, p))
    return tuple(out)


def _mono_inv(a: tuple) -> tuple:
    return tuple((sym, ex.neg(e)) for sym, e in a)


def _mono_key(mono: tuple):
    return tuple((_sym_sort(sym), ex.sort_key(e)) for sym, e in mono)


_EXP_SCALAR_CACHE: dict = {}


def exponent_scalar(e) -> Scalar:
    """The exponent ``e`` (a polynomial in n, m, l) as a parameter Scalar."""
    if not isinstance(e, Exponent):
        return Scalar.rational(e)
    key = e.key()
    hit = _EXP_SCALAR_CACHE.get(key)
    if hit is not None:
        return hit
    gens = [_CTX.gen(PARAMETERS.index(p)) for p in ex.EXPONENT_PARAMETERS]
    poly = _CTX.constant(0)
    for mono, c in zip(e.poly.monoms(), e.poly.coeffs()):
        term = _CTX.constant(c)
        for g, k in zip(gens, mono):
            if k:
                term = term * g ** k
        poly = poly + term
    out = Scalar({(0, 0, 0, ()): Coeff(poly)})
    _EXP_SCALAR_CACHE[key] = out
    return out


def scalar_exponent(s: Scalar):
    """Inverse of :func:`exponent_scalar` for polynomial scalars in n, m, l."""
    s = Scalar.coerce(s)
    if s.is_zero():
        return 0
    if not s.is_param_only():
        raise ValueError(f"{s} is not a parameter polynomial")
    c = next(iter(s.terms.values()))
    if c.den is not None or c.free_parameters() - set(ex.EXPONENT_PARAMETERS):
        raise ValueError(f"{s} is not a polynomial in n, m, l")
    gens = ex._ECTX.gens()
    poly = ex._ECTX.constant(0)
    for mono, coeff in zip(c.num.monoms(), c.num.coeffs()):
        term = ex._ECTX.constant(coeff)
        for name, k in zip(PARAMETERS, mono):
            if k:
                term = term * gens[ex.EXPONENT_PARAMETERS.index(name)] ** k
        poly = poly + term
    return Exponent.wrap(poly)


def _scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, Exponent):
        return exponent_scalar(x)
    if isinstance(x, str):
        return exponent_scalar(ex.parse_exponent(x))
    return Scalar.coerce(x)


# ---------------------------------------------------------------------------
# JetExpr
# ---------------------------------------------------------------------------

class JetExpr:
    """Immutable sum of ``Scalar * monomial`` terms."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms = terms or {}
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "JetExpr":
        c = _scalar(c)
        return cls({_EMPTY: c}) if not c.is_zero() else cls()

    @classmethod
    def symbol(cls, sym: JetSymbol, power=1) -> "JetExpr":
        if sym.name not in _ALPHABET:
            raise UnknownVariable(f"variable {sym.name!r} is not declared")
        if sym.order > MAX_ORDER:
            raise OrderOverflow(f"jet order {sym.order} exceeds {MAX_ORDER}")
        power = ex.coerce(power)
        if not sym.is_base and (isinstance(power, Exponent) or isinstance(power, Fraction)):
            raise NonMonomialPower("jets carry concrete integer exponents only")
        if not isinstance(power, Exponent) and power == 0:
            return cls.const(1)
        return cls({((sym, power),): Scalar.rational(1)})

    @classmethod
    def var(cls, name: str, power=1) -> "JetExpr":
        return cls.symbol(JetSymbol(name), power)

    @classmethod
    def jet(cls, name: str, order: int, power=1) -> "JetExpr":
        return cls.symbol(JetSymbol(name, order), power)

    @classmethod
    def dlog(cls, name: str, order: int = 1) -> "JetExpr":
        return cls.symbol(JetSymbol(name, order, True))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, (JetExpr, JetFraction)):
            return x
        return cls.const(x)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _EMPTY in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("expression is not constant")
        return self.terms.get(_EMPTY, Scalar())

    def symbols(self) -> set:
        return {sym for mono in self.terms for sym, _ in mono}

    def max_order(self) -> int:
        return max((sym.order for sym in self.symbols()), default=0)

    def variables(self) -> set:
        return {sym.name for sym in self.symbols()}

    def free_parameters(self) -> set:
        out = set()
        for mono, c in self.terms.items():
            out |= c.free_parameters()
            for _, e in mono:
                if isinstance(e, Exponent):
                    out |= e.free()
        return out

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, JetFraction):
            return other + self
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            prev = out.get(mono)
            if prev is None:
                out[mono] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[mono]
                else:
                    out[mono] = s
        return JetExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return JetExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, JetFraction):
            return other * self
        if not self.terms or not other.terms:
            return JetExpr()
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                prev = out.get(m)
                if prev is None:
                    out[m] = c
                else:
                    s = prev + c
                    if s.is_zero():
                        del out[m]
                    else:
                        out[m] = s
        return JetExpr({m: c for m, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def scale(self, c) -> "JetExpr":
        c = _scalar(c)
        if c.is_zero():
            return JetExpr()
        return JetExpr({m: v * c for m, v in self.terms.items()})

    def __pow__(self, k):
        k = ex.coerce(k)
        if self.is_monomial():
            (mono, c), = self.terms.items()
            if isinstance(k, Exponent) or isinstance(k, Fraction):
                if not c.is_one():
                    raise NonMonomialPower("symbolic power of a non-unit coefficient")
                return JetExpr({_mono_pow(mono, k): c})
            return JetExpr({_mono_pow(mono, k): c ** k})
        if isinstance(k, Exponent) or isinstance(k, Fraction):
            raise NonMonomialPower("symbolic powers apply to monomials only")
        if k < 0:
            return JetFraction(JetExpr.const(1), self ** (-k))
        out = JetExpr.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self):
        if not self.terms:
            raise ZeroDivisionError("division by the zero jet expression")
        if self.is_monomial():
            (mono, c), = self.terms.items()
            return JetExpr({_mono_inv(mono): c.inverse()})
        return JetFraction(JetExpr.const(1), self)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, JetFraction):
            return JetFraction(self * other.den, other.num).simplify()
        return _times(self, other.inverse())

    def __rtruediv__(self, other):
        return _coerce(other) / self

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if isinstance(other, JetFraction):
            return other == self
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, c) for m, c in self.terms.items()))
        return self._hash

    # transformations ----------------------------------------------------
    def subs_params(self, assignment: Mapping[str, object]) -> "JetExpr":
        """Specialise parameters in both coefficients and exponents."""
        out = JetExpr()
        for mono, c in self.terms.items():
            c2 = c.subs(assignment)
            if c2.is_zero():
                continue
            new = tuple((sym, ex.substitute(e, assignment)) for sym, e in mono)
            new = tuple((sym, e) for sym, e in new if isinstance(e, Exponent) or e != 0)
            out = out + JetExpr({_mono_mul(new, _EMPTY) if len(new) < 2 else
                                 tuple(sorted(new, key=lambda kv: _sym_sort(kv[0]))): c2})
        return out

    def map_coefficients(self, fn) -> "JetExpr":
        out = {}
        for m, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                out[m] = c2
        return JetExpr(out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))

    def to_text(self) -> str:
        return _expr_text(self, tex=False)

    def to_tex(self) -> str:
        return _expr_text(self, tex=True)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"JetExpr({self.to_text()})"


def _times(a, b):
    if isinstance(a, JetFraction) or isinstance(b, JetFraction):
        return JetFraction.of(a) * b
    return a * b


def _coerce(x):
    if isinstance(x, (JetExpr, JetFraction)):
        return x
    if isinstance(x, (int, Fraction, Scalar, Exponent)) and not isinstance(x, bool):
        return JetExpr.const(x)
    return None


# ---------------------------------------------------------------------------
# JetFraction
# ---------------------------------------------------------------------------

class JetFraction:
    """``num / den`` with a non-monomial denominator; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: JetExpr, den: JetExpr):
        if den.is_zero():
            raise ZeroDivisionError("jet fraction with zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def of(x) -> "JetFraction":
        if isinstance(x, JetFraction):
            return x
        return JetFraction(_coerce(x), JetExpr.const(1))

    def simplify(self):
        """Clear monomial denominators; return a JetExpr when the denominator is one."""
        num, den = self.num, self.den
        if num.is_zero():
            return JetExpr()
        if den.is_monomial():
            return num * den.inverse()
        content = _monomial_content(den)
        if content is not None:
            inv = content.inverse()
            num, den = num * inv, den * inv
        if num == den:
            return JetExpr.const(1)
        return JetFraction(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        o = JetFraction.of(other)
        if o.den == self.den:
            return JetFraction(self.num + o.num, self.den).simplify()
        return JetFraction(self.num * o.den + o.num * self.den, self.den * o.den).simplify()

    __radd__ = __add__

    def __neg__(self):
        return JetFraction(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        o = JetFraction.of(other)
        return JetFraction(self.num * o.num, self.den * o.den).simplify()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        o = JetFraction.of(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero jet expression")
        return JetFraction(self.num * o.den, self.den * o.num).simplify()

    def __rtruediv__(self, other):
        return JetFraction.of(_coerce(other)) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise NonMonomialPower("fractions take integer powers only")
        if k < 0:
            return JetFraction(self.den ** (-k), self.num ** (-k)).simplify()
        return JetFraction(self.num ** k, self.den ** k).simplify()

    def inverse(self):
        return JetFraction(self.den, self.num).simplify()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        o = JetFraction.of(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def subs_params(self, assignment):
        return JetFraction(self.num.subs_params(assignment), self.den.subs_params(assignment)).simplify()

    def symbols(self) -> set:
        return self.num.symbols() | self.den.symbols()

    def max_order(self) -> int:
        return max(self.num.max_order(), self.den.max_order())

    def to_text(self) -> str:
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def to_tex(self) -> str:
        return rf"\frac{{{self.num.to_tex()}}}{{{self.den.to_tex()}}}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"JetFraction({self.to_text()})"


def _monomial_content(e: JetExpr):
    """Largest monomial (concrete exponents only) dividing every term, or None if trivial."""
    monos = list(e.terms)
    common = dict(monos[0])
    for mono in monos[1:]:
        d = dict(mono)
        for sym in list(common):
            a, b = common[sym], d.get(sym, 0)
            if isinstance(a, Exponent) or isinstance(b, Exponent):
                diff = ex.sub(a, b)
                if isinstance(diff, Exponent):
                    del common[sym]
                    continue
                common[sym] = b if diff > 0 else a
            else:
                common[sym] = min(a, b)
        for sym in d:
            if sym not in common:
                pass
    # symbols absent from the first monomial have exponent 0 there
    for mono in monos:
        d = dict(mono)
        for sym in list(common):
            if sym not in d:
                a = common[sym]
                if isinstance(a, Exponent):
                    del common[sym]
                else:
                    common[sym] = min(a, 0)
    common = {s: e for s, e in common.items() if isinstance(e, Exponent) or e != 0}
    if not common:
        return None
    return JetExpr({tuple(sorted(common.items(), key=lambda kv: _sym_sort(kv[0]))): Scalar.rational(1)})


# ---------------------------------------------------------------------------
# derivation
# ---------------------------------------------------------------------------

def _symbol_derivative_default(sym: JetSymbol) -> JetExpr:
    return JetExpr({((sym.next(), 1),): Scalar.rational(1)})


def derive(e, rule=None):
    """Apply a derivation given on symbols (``rule(sym) -> JetExpr``); scalars are constants."""
    rule = rule or _symbol_derivative_default
    if isinstance(e, JetFraction):
        dn = derive(e.num, rule)
        dd = derive(e.den, rule)
        return JetFraction(dn * e.den - e.num * dd, e.den * e.den).simplify()
    e = _coerce(e)
    out: dict = {}
    cache: dict = {}
    for mono, c in e.terms.items():
        for j, (sym, k) in enumerate(mono):
            dsym = cache.get(sym)
            if dsym is None:
                dsym = rule(sym)
                cache[sym] = dsym
            if dsym.is_zero():
                continue
            rest = list(mono)
            k1 = ex.sub(k, 1)
            if isinstance(k1, Exponent) or k1 != 0:
                rest[j] = (sym, k1)
            else:
                del rest[j]
            coeff = c * exponent_scalar(k) if (isinstance(k, Exponent) or k != 1) else c
            rest = tuple(rest)
            for dm, dc in dsym.terms.items():
                m = _mono_mul(rest, dm)
                v = coeff * dc
                prev = out.get(m)
                if prev is None:
                    out[m] = v
                else:
                    s = prev + v
                    if s.is_zero():
                        del out[m]
                    else:
                        out[m] = s
    return JetExpr(out)


def total_derivative(e):
    """The total derivative d: d(d^k x) = d^(k+1) x, Leibniz and power rules."""
    return derive(e)


def dee2(v: str, weight) -> JetExpr:
    """``d2(v) + (weight - 1) * d(v)^2 / v``."""
    kappa = _scalar(weight)
    x = JetExpr.var(v)
    return JetExpr.jet(v, 2) + JetExpr.jet(v, 1, 2) * x.inverse() * (kappa - 1)


# ---------------------------------------------------------------------------
# valuation, substitution, log normal form
# ---------------------------------------------------------------------------

def _v_exponent(mono, v: str):
    for sym, e in mono:
        if sym.name == v and sym.is_base:
            return e
    return 0


def valuation(e, v: str, assumptions: Assumptions | None = None):
    """Minimum exponent of the base variable ``v`` (numerator minus denominator)."""
    assumptions = assumptions or ex.NO_ASSUMPTIONS
    if isinstance(e, JetFraction):
        if e.num.is_zero():
            raise ZeroExpression("valuation of zero")
        return ex.sub(valuation(e.num, v, assumptions), valuation(e.den, v, assumptions))
    e = _coerce(e)
    if e.is_zero():
        raise ZeroExpression("valuation of zero")
    return assumptions.min_of(_v_exponent(m, v) for m in e.terms)


def lowest_part(e: JetExpr, v: str, assumptions: Assumptions | None = None) -> JetExpr:
    """Terms of minimal ``v``-exponent."""
    val = valuation(e, v, assumptions)
    return JetExpr({m: c for m, c in e.terms.items()
                    if ex.sub(_v_exponent(m, v), val) == 0})


def substitute(e, mapping: Mapping[JetSymbol, object]):
    """Replace symbols by expressions; monomial images take any exponent."""
    if isinstance(e, JetFraction):
        return _div(substitute(e.num, mapping), substitute(e.den, mapping))
    e = _coerce(e)
    images = {sym: _coerce(img) for sym, img in mapping.items()}
    total = JetExpr()
    powcache: dict = {}
    for mono, c in e.terms.items():
        kept = []
        acc = JetExpr.const(c)
        for sym, k in mono:
            img = images.get(sym)
            if img is None:
                kept.append((sym, k))
                continue
            key = (sym, ex.sort_key(k))
            p = powcache.get(key)
            if p is None:
                p = _power(img, k)
                powcache[key] = p
            acc = _times(acc, p)
        if kept:
            acc = _times(acc, JetExpr({tuple(kept): Scalar.rational(1)}))
        total = total + acc
    if isinstance(total, JetFraction):
        return total.simplify()
    return total


def _power(img, k):
    if isinstance(img, JetFraction):
        if isinstance(k, Exponent):
            raise NonMonomialPower("symbolic power of a fraction")
        return img ** k
    return img ** k


def _div(a, b):
    if isinstance(b, JetExpr) and b.is_monomial():
        return _times(a, b.inverse())
    return JetFraction.of(a) / b


def jet_images(image, depth: int = 2) -> list:
    """``[image, d(image), d2(image), ...]`` up to ``depth``."""
    out = [_coerce(image)]
    for _ in range(depth):
        out.append(total_derivative(out[-1]))
    return out


def substitute_chart(e, chart: Mapping[str, object]):
    """Change coordinates: each mapped base variable and all its jets are replaced."""
    syms = e.symbols()
    mapping = {}
    for name, image in chart.items():
        wanted = [s for s in syms if s.name == name]
        if not wanted:
            continue
        depth = max(s.order for s in wanted)
        chain = jet_images(image, depth)
        logs = None
        for s in wanted:
            if not s.log:
                mapping[s] = chain[s.order]
            else:
                if logs is None:
                    lg = _div(chain[1], chain[0])
                    logs = [None, lg]
                    for _ in range(depth - 1):
                        logs.append(total_derivative(logs[-1]))
                mapping[s] = logs[s.order]
    return substitute(e, mapping)


def log_symbols(v: str):
    return [JetExpr.dlog(v, k) for k in (1, 2, 3)]


def log_substitution(v: str) -> dict:
    """dv -> v*l1, d2v -> v*(l2 + l1^2), d3v -> v*(l3 + 3 l1 l2 + l1^3)."""
    x = JetExpr.var(v)
    l1, l2, l3 = log_symbols(v)
    return {
        JetSymbol(v, 1): x * l1,
        JetSymbol(v, 2): x * (l2 + l1 * l1),
        JetSymbol(v, 3): x * (l3 + 3 * l1 * l2 + l1 * l1 * l1),
    }


def log_inverse_substitution(v: str) -> dict:
    x = JetExpr.var(v)
    inv = x.inverse()
    d1 = JetExpr.jet(v, 1) * inv
    d2 = JetExpr.jet(v, 2) * inv
    d3 = JetExpr.jet(v, 3) * inv
    return {
        JetSymbol(v, 1, True): d1,
        JetSymbol(v, 2, True): d2 - d1 * d1,
        JetSymbol(v, 3, True): d3 - 3 * d1 * d2 + 2 * d1 * d1 * d1,
    }


def log_normal_form(e, v: str, assumptions: Assumptions | None = None):
    """Rewrite jets of ``v`` through d log v; return ``(is_log_pole, normalized)``.

    ``is_log_pole`` is true when the rewritten expression has nonnegative
    ``v``-valuation for every parameter value allowed by the assumptions.
    """
    if (isinstance(e, JetExpr) and e.is_zero()) or (isinstance(e, JetFraction) and e.is_zero()):
        raise ZeroExpression("log normal form of zero")
    normalized = substitute(e, log_substitution(v))
    val = valuation(normalized, v, assumptions)
    ok = (assumptions or ex.NO_ASSUMPTIONS).is_nonnegative(val)
    return ok, normalized


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _factor_text(sym: JetSymbol, e, tex: bool) -> str:
    base = sym.tex() if tex else sym.text()
    if not isinstance(e, Exponent) and e == 1:
        return base
    if tex:
        if sym.order:
            base = f"({base})"
        return f"{base}^{{{ex.exponent_text(e)}}}"
    et = ex.exponent_text(e)
    if not (et.isidentifier() or et.isdigit()):
        et = f"({et})"
    return f"{base}^{et}"


def _coeff_text(c: Scalar, tex: bool) -> str:
    text = c.to_tex() if tex else c.to_text()
    if c.needs_parens():
        text = f"({text})"
    return text


def _expr_text(e: JetExpr, tex: bool) -> str:
    if not e.terms:
        return "0"
    pieces = []
    sep = r"\," if tex else "*"
    for mono, c in e.sorted_terms():
        factors = [_factor_text(sym, k, tex) for sym, k in mono]
        if not factors:
            pieces.append(_coeff_text(c, tex) if c.needs_parens() and len(e.terms) > 1 else
                          (c.to_tex() if tex else c.to_text()))
            continue
        body = sep.join(factors)
        if c.is_one():
            pieces.append(body)
        elif c == Scalar.rational(-1):
            pieces.append("-" + body)
        else:
            ct = _coeff_text(c, tex)
            pieces.append(ct + sep + body)
    text = pieces[0]
    for p in pieces[1:]:
        text += " - " + p[1:] if p.startswith("-") else " + " + p
    return text


def to_text(e) -> str:
    return _coerce(e).to_text()


def to_tex(e) -> str:
    return _coerce(e).to_tex()


__all__ = [
    "JetSymbol", "JetExpr", "JetFraction", "OrderOverflow", "ZeroExpression", "NonMonomialPower",
    "UnknownVariable", "IncomparableExponents", "declare_variables", "total_derivative", "derive",
    "dee2", "valuation", "substitute", "substitute_chart", "log_normal_form", "exponent_scalar",
    "scalar_exponent", "lowest_part", "jet_images", "to_text", "to_tex",
]
