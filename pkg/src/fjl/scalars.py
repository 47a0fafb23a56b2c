"""Exact scalars for every constant the engine meets.

A :class:`Scalar` lives in the tower

    Q  ->  Q(i)  ->  Q(i, q)  (q^4 = 2)  ->  Q(i, q, s)  (s^2 = 3)

taken over the rational function field Q(n, m, l, k1, k2, c1, c2), optionally
extended by *radical symbols* that each carry one monomial relation
``w^N = c`` (``N`` a concrete integer, ``c`` a radical-free scalar).

The canonical form is the expansion in the power basis
``i^a q^b s^c w^e`` (``a < 2, b < 4, c < 2, e < N``) with rational-function
coefficients reduced to lowest terms.  Because that basis is free over the
coefficient field, two scalars are equal exactly when their expansions agree,
so equality and hashing are structural.  Denominators involving ``i, q, s``
are rationalised through the Galois norm of the (Galois) field Q(i, q, s).
"""
from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import flint
import mpmath

PARAMETERS = ("n", "m", "l", "k1", "k2", "c1", "c2")

_CTX = flint.fmpq_mpoly_ctx.get(PARAMETERS, "lex")
_ZERO_POLY = _CTX.constant(0)
_ONE_POLY = _CTX.constant(1)


class ScalarError(ArithmeticError):
    pass


class ZeroDenominator(ScalarError, ZeroDivisionError):
    pass


class NotInvertible(ScalarError, ZeroDivisionError):
    """Raised for zero divisors of a radical extension (the ring is not a field)."""


class UnassignedParameter(ScalarError, KeyError):
    pass


class RadicalConflict(ScalarError, ValueError):
    pass


def _fmpq_to_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _to_fmpq(x):
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


# ---------------------------------------------------------------------------
# rational functions in the parameters
# ---------------------------------------------------------------------------

class Coeff:
    """Element of Q(n, m, l, k1, k2, c1, c2) in lowest terms.

    ``den`` is ``None`` for polynomials; otherwise it is a non-constant
    polynomial with leading coefficient 1 coprime to ``num``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = den

    @classmethod
    def make(cls, num, den=None) -> "Coeff":
        if den is None:
            return cls(num)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if den.is_constant():
            return cls(num / den.leading_coefficient())
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
        if den.is_constant():
            return cls(num / den.leading_coefficient())
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        return cls(num, den)

    @classmethod
    def rational(cls, x) -> "Coeff":
        return cls(_CTX.constant(_to_fmpq(x)))

    @classmethod
    def param(cls, name: str) -> "Coeff":
        return cls(_CTX.gen(PARAMETERS.index(name)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den is None and self.num.is_one()

    def is_rational(self) -> bool:
        return self.den is None and self.num.is_constant()

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("coefficient depends on parameters")
        if self.num.is_zero():
            return Fraction(0)
        return _fmpq_to_fraction(self.num.leading_coefficient())

    def __add__(self, other: "Coeff") -> "Coeff":
        if self.den is None and other.den is None:
            return Coeff(self.num + other.num)
        if self.den is None:
            return Coeff.make(self.num * other.den + other.num, other.den)
        if other.den is None:
            return Coeff.make(self.num + other.num * self.den, self.den)
        if self.den == other.den:
            return Coeff.make(self.num + other.num, self.den)
        return Coeff.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Coeff":
        return Coeff(-self.num, self.den)

    def __sub__(self, other: "Coeff") -> "Coeff":
        return self + (-other)

    def __mul__(self, other: "Coeff") -> "Coeff":
        if self.den is None and other.den is None:
            return Coeff(self.num * other.num)
        n = self.num * other.num
        if self.den is None:
            return Coeff.make(n, other.den)
        if other.den is None:
            return Coeff.make(n, self.den)
        return Coeff.make(n, self.den * other.den)

    def scale(self, r: Fraction) -> "Coeff":
        return Coeff(self.num * _to_fmpq(r), self.den)

    def inverse(self) -> "Coeff":
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero")
        return Coeff.make(self.den if self.den is not None else _ONE_POLY, self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coeff):
            return NotImplemented
        if self.num != other.num:
            return False
        if self.den is None or other.den is None:
            return self.den is None and other.den is None
        return self.den == other.den

    def __hash__(self) -> int:
        return hash((str(self.num), "" if self.den is None else str(self.den)))

    def free_parameters(self) -> set[str]:
        used = set()
        for poly in (self.num, self.den):
            if poly is None:
                continue
            for mono in poly.monoms():
                used.update(PARAMETERS[j] for j, e in enumerate(mono) if e)
        return used

    def subs(self, assignment: Mapping[str, object]) -> "Coeff":
        values = {k: _to_fmpq(v) for k, v in assignment.items() if k in PARAMETERS}
        if not values:
            return self
        num = self.num.subs(values)
        if self.den is None:
            return Coeff(num)
        den = self.den.subs(values)
        if den.is_zero():
            raise ZeroDenominator(f"denominator {self.den} vanishes at {dict(assignment)}")
        return Coeff.make(num, den)

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        missing = self.free_parameters() - set(assignment)
        if missing:
            raise UnassignedParameter(", ".join(sorted(missing)))
        return self.subs(assignment).rational_value()

    def to_text(self) -> str:
        num = str(self.num)
        if self.den is None:
            return num
        if len(self.num.monoms()) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.monoms()) > 1 or "*" in den or "/" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def needs_parens(self) -> bool:
        if self.den is not None:
            return True
        return len(self.num.monoms()) > 1

    def __repr__(self) -> str:
        return f"Coeff({self.to_text()})"


_C_ONE = Coeff(_ONE_POLY)


# ---------------------------------------------------------------------------
# radical symbols
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Radical:
    """A symbol ``w`` with the single relation ``w**degree == value``.

    The numeric embedding uses the principal root of ``value`` times
    ``exp(2*pi*i*branch/degree)``.
    """

    name: str
    degree: int
    value: "Scalar"
    branch: int = 0

    def numeric(self, dps: int):
        with mpmath.workdps(dps + 10):
            v = self.value.eval_numeric(precision=dps + 5, as_mpmath=True)
            root = mpmath.root(v, self.degree)
            if self.branch:
                root *= mpmath.expjpi(mpmath.mpf(2 * self.branch) / self.degree)
            return root


_RADICALS: dict[str, Radical] = {}


def adjoin_radical(name: str, degree, value, branch: int = 0) -> "Scalar":
    """Declare (or re-fetch) the radical ``name`` with ``name**degree == value``."""
    if not isinstance(degree, int) or isinstance(degree, bool):
        raise RadicalConflict(f"radical {name!r} needs a concrete integer degree, got {degree!r}")
    if degree < 2:
        raise RadicalConflict(f"radical {name!r} needs degree >= 2")
    value = Scalar.coerce(value)
    if value.radicals():
        raise RadicalConflict("radical values must not involve other radical symbols")
    if value.is_zero():
        raise RadicalConflict("radical value must be nonzero")
    known = _RADICALS.get(name)
    rad = Radical(name, degree, value, branch)
    if known is not None:
        if known != rad:
            raise RadicalConflict(
                f"radical {name!r} already declared as {name}^{known.degree} = {known.value}")
        return Scalar({(0, 0, 0, ((name, 1),)): _C_ONE})
    _RADICALS[name] = rad
    return Scalar({(0, 0, 0, ((name, 1),)): _C_ONE})


def radical(name: str) -> Radical:
    return _RADICALS[name]


def known_radicals() -> dict[str, Radical]:
    return dict(_RADICALS)


# ---------------------------------------------------------------------------
# basis keys
# ---------------------------------------------------------------------------

_ONE_KEY = (0, 0, 0, ())


@functools.lru_cache(maxsize=None)
def _key_mul(k1, k2):
    """Product of two basis monomials: ``(key, rational factor, scalar factor or None)``."""
    a = k1[0] + k2[0]
    b = k1[1] + k2[1]
    c = k1[2] + k2[2]
    f = Fraction(1)
    if a >= 2:
        a -= 2
        f = -f
    if b >= 4:
        b -= 4
        f *= 2
    if c >= 2:
        c -= 2
        f *= 3
    extra = None
    if not k1[3]:
        rads = k2[3]
    elif not k2[3]:
        rads = k1[3]
    else:
        merged = dict(k1[3])
        for name, e in k2[3]:
            merged[name] = merged.get(name, 0) + e
        out = []
        for name in sorted(merged):
            e = merged[name]
            rad = _RADICALS[name]
            if e >= rad.degree:
                e -= rad.degree
                val = rad.value
                if val.is_rational():
                    f *= val.rational_value()
                else:
                    extra = val if extra is None else extra * val
            if e:
                out.append((name, e))
        rads = tuple(out)
    return (a, b, c, rads), f, extra


def _accumulate(out: dict, key, coeff: Coeff) -> None:
    prev = out.get(key)
    if prev is None:
        out[key] = coeff
    else:
        s = prev + coeff
        if s.is_zero():
            del out[key]
        else:
            out[key] = s


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

class Scalar:
    """Immutable exact scalar in canonical power-basis form."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms = terms or {}
        self._hash = None

    # construction ----------------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        if isinstance(x, Coeff):
            return cls({_ONE_KEY: x}) if not x.is_zero() else cls()
        if hasattr(x, "to_scalar"):
            return x.to_scalar()
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @classmethod
    def rational(cls, x) -> "Scalar":
        x = Fraction(x)
        if x == 0:
            return cls()
        return cls({_ONE_KEY: Coeff.rational(x)})

    @classmethod
    def param(cls, name: str) -> "Scalar":
        if name not in PARAMETERS:
            raise KeyError(f"unknown parameter {name!r}")
        return cls({_ONE_KEY: Coeff.param(name)})

    # predicates --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        if not self.terms:
            return True
        if len(self.terms) != 1 or _ONE_KEY not in self.terms:
            return False
        return self.terms[_ONE_KEY].is_rational()

    def rational_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms[_ONE_KEY].rational_value()

    def is_one(self) -> bool:
        return len(self.terms) == 1 and _ONE_KEY in self.terms and self.terms[_ONE_KEY].is_one()

    def is_param_only(self) -> bool:
        """True when the scalar lies in Q(parameters), i.e. involves no i, q, s or radicals."""
        return not self.terms or (len(self.terms) == 1 and _ONE_KEY in self.terms)

    def radicals(self) -> set[str]:
        return {name for key in self.terms for name, _ in key[3]}

    def free_parameters(self) -> set[str]:
        out = set()
        for c in self.terms.values():
            out |= c.free_parameters()
        return out

    # arithmetic ------------------------------------------------------------
    def __add__(self, other) -> "Scalar":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Scalar":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return Scalar()
        if len(other.terms) == 1 and _ONE_KEY in other.terms:
            c = other.terms[_ONE_KEY]
            if c.is_one():
                return self
            return Scalar({k: v * c for k, v in self.terms.items()})._prune()
        if len(self.terms) == 1 and _ONE_KEY in self.terms:
            return other * self
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key, f, extra = _key_mul(k1, k2)
                c = c1 * c2
                if f != 1:
                    c = c.scale(f)
                if extra is None:
                    _accumulate(out, key, c)
                else:
                    for k3, c3 in (Scalar({key: c}) * extra).terms.items():
                        _accumulate(out, k3, c3)
        return Scalar(out)

    __rmul__ = __mul__

    def _prune(self) -> "Scalar":
        if any(c.is_zero() for c in self.terms.values()):
            return Scalar({k: c for k, c in self.terms.items() if not c.is_zero()})
        return self

    def __pow__(self, e: int) -> "Scalar":
        if not isinstance(e, int):
            raise TypeError("Scalar powers must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        result = Scalar.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other) -> "Scalar":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def inverse(self) -> "Scalar":
        if not self.terms:
            raise ZeroDenominator("division by zero scalar")
        if len(self.terms) == 1:
            (key, c), = self.terms.items()
            return _monomial_inverse(key) * Scalar({_ONE_KEY: c.inverse()})
        if not self.radicals():
            return _field_inverse(self)
        return _radical_inverse(self)

    # Galois action on Q(i, q, s) --------------------------------------------
    def conjugate(self, i_sign: int = 1, q_shift: int = 0, s_sign: int = 1) -> "Scalar":
        """Apply i -> i_sign*i, q -> i^q_shift * q, s -> s_sign*s (radical-free scalars)."""
        if self.radicals():
            raise ValueError("Galois action is defined on radical-free scalars only")
        out: dict = {}
        for (a, b, c, _), coeff in self.terms.items():
            sign = 1
            if i_sign < 0 and a % 2:
                sign = -sign
            if s_sign < 0 and c % 2:
                sign = -sign
            ipow = a + q_shift * b
            ipow %= 4
            if ipow >= 2:
                ipow -= 2
                sign = -sign
            _accumulate(out, (ipow, b, c, ()), coeff if sign > 0 else -coeff)
        return Scalar(out)

    def complex_conjugate(self) -> "Scalar":
        return self.conjugate(i_sign=-1)

    def norm(self) -> "Scalar":
        prod = self
        for sigma in _GALOIS:
            prod = prod * self.conjugate(*sigma)
        return prod

    # substitution / evaluation ---------------------------------------------
    def subs(self, assignment: Mapping[str, object]) -> "Scalar":
        if not assignment:
            return self
        out: dict = {}
        for k, c in self.terms.items():
            c2 = c.subs(assignment)
            if not c2.is_zero():
                _accumulate(out, k, c2)
        return Scalar(out)

    def eval_numeric(self, assignment: Mapping[str, object] | None = None,
                     precision: int = 15, as_mpmath: bool = False):
        """Numeric value under the embedding i -> +sqrt(-1), q -> 2**(1/4) > 0, s -> sqrt(3) > 0."""
        assignment = assignment or {}
        dps = max(precision + 5, 20)
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            gens = _numeric_generators(dps)
            for (a, b, c, rads), coeff in self.terms.items():
                val = coeff.evaluate(assignment)
                term = mpmath.mpf(val.numerator) / val.denominator
                term = term * gens["i"] ** a * gens["q"] ** b * gens["s"] ** c
                for name, e in rads:
                    term = term * _RADICALS[name].numeric(dps) ** e
                total += term
            if as_mpmath or precision > 15:
                return +total
            return complex(total)

    # comparison / hashing ------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # printing ------------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _key_sort(kv[0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            parts.append(_term_text(key, c))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def to_tex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            parts.append(_term_tex(key, c))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def is_single_term(self) -> bool:
        return len(self.terms) <= 1

    def needs_parens(self) -> bool:
        """Whether the text form must be parenthesised when used as a factor."""
        if len(self.terms) > 1:
            return True
        if len(self.terms) == 1:
            (key, c), = self.terms.items()
            if c.is_rational():
                return False
            return key == _ONE_KEY and c.needs_parens()
        return False

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()})"


def _coerce_or_none(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Scalar.rational(x)
    return None


_GALOIS = [(e, k, f) for e in (1, -1) for k in range(4) for f in (1, -1)
           if (e, k, f) != (1, 0, 1)]


def _monomial_inverse(key) -> Scalar:
    a, b, c, rads = key
    out = Scalar.rational(1)
    if a:
        out = out * Scalar({(1, 0, 0, ()): Coeff.rational(-1)})
    if b:
        out = out * Scalar({(0, 4 - b, 0, ()): Coeff.rational(Fraction(1, 2))})
    if c:
        out = out * Scalar({(0, 0, 1, ()): Coeff.rational(Fraction(1, 3))})
    for name, e in rads:
        rad = _RADICALS[name]
        part = Scalar({(0, 0, 0, ((name, rad.degree - e),)): _C_ONE})
        out = out * part * rad.value.inverse()
    return out


def _field_inverse(x: Scalar) -> Scalar:
    others = Scalar.rational(1)
    for sigma in _GALOIS:
        others = others * x.conjugate(*sigma)
    nrm = x * others
    if not nrm.is_param_only():
        raise ScalarError("norm did not descend to the parameter field")
    return others * Scalar({_ONE_KEY: nrm.terms[_ONE_KEY].inverse()})


def _radical_inverse(x: Scalar) -> Scalar:
    """Invert in K[w_1, ...]/(w_j^N_j - c_j) by solving the multiplication system."""
    names = sorted(x.radicals())
    degs = [_RADICALS[nm].degree for nm in names]
    basis = [()]
    for nm, d in zip(names, degs):
        basis = [b + ((nm, e),) for b in basis for e in range(d)]
    basis = [tuple(p for p in b if p[1]) for b in basis]
    index = {b: j for j, b in enumerate(basis)}

    def split(v: Scalar) -> list[Scalar]:
        col = [Scalar() for _ in basis]
        for (a, b_, c, rads), coeff in v.terms.items():
            col[index[rads]] = col[index[rads]] + Scalar({(a, b_, c, ()): coeff})
        return col

    size = len(basis)
    cols = [split(x * Scalar({(0, 0, 0, b): _C_ONE})) for b in basis]
    mat = [[cols[j][r] for j in range(size)] + [Scalar.rational(1 if r == 0 else 0)]
           for r in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if not mat[r][col].is_zero()), None)
        if pivot is None:
            raise NotInvertible(f"{x} is a zero divisor modulo its radical relations")
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv = mat[col][col].inverse()
        mat[col] = [v * inv for v in mat[col]]
        for r in range(size):
            if r != col and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [vr - f * vc for vr, vc in zip(mat[r], mat[col])]
    result = Scalar()
    for j, b in enumerate(basis):
        result = result + mat[j][size] * Scalar({(0, 0, 0, b): _C_ONE})
    return result


@functools.lru_cache(maxsize=8)
def _numeric_generators(dps: int):
    with mpmath.workdps(dps):
        return {"i": mpmath.mpc(0, 1), "q": mpmath.root(mpmath.mpf(2), 4), "s": mpmath.sqrt(3)}


def _key_sort(key):
    a, b, c, rads = key
    return (len(rads), rads, a, b, c)


def _gen_text(key) -> str:
    a, b, c, rads = key
    parts = []
    if a:
        parts.append("i")
    if b:
        fr = Fraction(b, 4)
        parts.append(f"2^({fr.numerator}/{fr.denominator})")
    if c:
        parts.append("3^(1/2)")
    for name, e in rads:
        if e == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{e}" if name.isidentifier() else f"({name})^{e}")
    return "*".join(parts)


def _term_text(key, c: Coeff) -> str:
    gens = _gen_text(key)
    if c.is_rational():
        r = c.rational_value()
        if not gens:
            return str(r)
        if r == 1:
            return gens
        if r == -1:
            return "-" + gens
        return f"{r}*{gens}"
    ctext = c.to_text()
    if not gens:
        return ctext
    if c.needs_parens():
        ctext = f"({ctext})"
    return f"{ctext}*{gens}"


def _gen_tex(key) -> str:
    a, b, c, rads = key
    parts = []
    if a:
        parts.append("i")
    if b == 2:
        parts.append(r"\sqrt{2}")
    elif b:
        fr = Fraction(b, 4)
        parts.append(f"2^{{{fr.numerator}/{fr.denominator}}}")
    if c:
        parts.append(r"\sqrt{3}")
    for name, e in rads:
        atom = name if name.isidentifier() else f"({name})"
        parts.append(atom if e == 1 else f"{atom}^{{{e}}}")
    return r"\,".join(parts)


def _term_tex(key, c: Coeff) -> str:
    gens = _gen_tex(key)
    if c.is_rational():
        r = c.rational_value()
        rt = str(r) if r.denominator == 1 else rf"\frac{{{r.numerator}}}{{{r.denominator}}}"
        if r < 0 and r.denominator != 1:
            rt = rf"-\frac{{{-r.numerator}}}{{{r.denominator}}}"
        if not gens:
            return rt
        if r == 1:
            return gens
        if r == -1:
            return "-" + gens
        return rt + r"\," + gens
    ctext = c.to_text().replace("*", " ")
    return f"({ctext})" + (r"\," + gens if gens else "")


# ---------------------------------------------------------------------------
# named constants and module-level operations
# ---------------------------------------------------------------------------

ZERO = Scalar()
ONE = Scalar.rational(1)
I = Scalar({(1, 0, 0, ()): _C_ONE})
Q = Scalar({(0, 1, 0, ()): _C_ONE})      # 2^(1/4)
S = Scalar({(0, 0, 1, ()): _C_ONE})      # sqrt(3)
SQRT2 = Q * Q
SQRT3 = S
SQRT6 = SQRT2 * S
ZETA8 = (ONE + I) * SQRT2 / 2            # (-1)^(1/4), principal
ZETA3 = (Scalar.rational(-1) + I * S) / 2
ZETA24 = ZETA8 ** 3 / ZETA3             # exp(i*pi/12)


def normalize(numerator: Mapping, denominator: Mapping | None = None) -> Scalar:
    """Reduce a raw fraction of generator polynomials to canonical form.

    Each mapping sends an exponent tuple ``(a, b, c)`` or ``(a, b, c, {radical: e})``
    (exponents of ``i``, ``q``, ``s``; any nonnegative size) to a rational or
    :class:`Coeff` coefficient.
    """
    num = _raw_poly(numerator)
    if denominator is None:
        return num
    den = _raw_poly(denominator)
    if den.is_zero():
        raise ZeroDenominator("denominator reduces to 0")
    return num / den


def _raw_poly(raw: Mapping) -> Scalar:
    total = Scalar()
    for exps, coeff in raw.items():
        a, b, c = exps[:3]
        rads = dict(exps[3]) if len(exps) > 3 else {}
        if min(a, b, c) < 0 or any(e < 0 for e in rads.values()):
            raise ValueError("raw generator exponents must be nonnegative")
        term = Scalar.coerce(coeff) if not isinstance(coeff, Coeff) else Scalar({_ONE_KEY: coeff})
        term = term * I ** a * Q ** b * S ** c
        for name, e in rads.items():
            term = term * Scalar({(0, 0, 0, ((name, 1),)): _C_ONE}) ** e
        total = total + term
    return total


def is_zero(x) -> bool:
    return Scalar.coerce(x).is_zero()


def eval_numeric(x, assignment: Mapping[str, object] | None = None, precision: int = 15):
    return Scalar.coerce(x).eval_numeric(assignment, precision)


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def principal_root(base: Fraction, k: int) -> Scalar | None:
    """Principal ``base**(1/k)`` as a tower element, or ``None`` when it leaves the tower."""
    base = Fraction(base)
    if k == 1:
        return Scalar.rational(base)
    if base == 0:
        return Scalar()
    result = ONE
    if base < 0:
        # (-1)^(1/k) = zeta_(2k), which lives in the tower iff 2k divides 24
        if 24 % (2 * k):
            return None
        result = ZETA24 ** (24 // (2 * k))
        base = -base
    for part, sign in ((base.numerator, 1), (base.denominator, -1)):
        for p, e in _factor_int(part).items():
            if p == 2 and (4 * e) % k == 0:
                factor = Q ** (4 * e // k)
            elif p == 3 and (2 * e) % k == 0:
                factor = S ** (2 * e // k)
            elif e % k == 0:
                factor = Scalar.rational(p ** (e // k))
            else:
                return None
            result = result * factor if sign > 0 else result / factor
    return result


def numeric_radical(base: Fraction, k: int) -> Scalar:
    """Principal ``base**(1/k)``: in the tower when possible, else an adjoined radical."""
    inside = principal_root(base, k)
    if inside is not None:
        return inside
    base = Fraction(base)
    text = str(base)
    if base < 0 or base.denominator != 1:
        text = f"({text})"
    name = f"{text}^(1/{k})"
    return adjoin_radical(name, k, Scalar.rational(base))


def principal_value_check(x: Scalar, expected: complex, tol: float = 1e-12) -> bool:
    got = x.eval_numeric()
    return abs(got - expected) <= tol * max(1.0, abs(expected))


def _principal_complex_root(base: complex, k: int) -> complex:
    return cmath.exp(cmath.log(base) / k) if base != 0 else 0j


def root_of_unity_value(k: int, j: int = 1) -> complex:
    return cmath.exp(2j * math.pi * j / k)
