"""Explicit solutions of f^n + g^m + h^l = 1 in small function rings.

Rings
-----
``poly``         polynomials in alpha (alpha' = 1 once alpha is specialised to z)
``laurent_exp``  Laurent polynomials in t = e^alpha with rational exponents, t' = t
``trig``         polynomials in s = sin(alpha), c = cos(alpha) modulo s^2 + c^2 = 1
``free``         f, g as free differential generators (jets d(f), d2(f), ...)

Elements are jet expressions (or fractions of them) in the ring variables, so
the arithmetic, printing and substitution machinery of :mod:`fjl.jets` is
reused.  Only the ``trig`` ring needs a reduction step.
"""
from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .jets import (JetExpr, JetFraction, JetSymbol, declare_variables, derive,
                   substitute)
from .ode import reduce_power
from .parsing import Context, ParseError, parse
from .scalars import Scalar, adjoin_radical, known_radicals, radical

ALPHA = "α"
declare_variables(ALPHA, "s")

# variables of each ring kind, and the derivative of each (alpha = z)
RING_VARIABLES = {
    "poly": (ALPHA,),
    "laurent_exp": ("t",),
    "trig": ("s", "c"),
    "free": ("f", "g", "h"),
}


class SolutionError(ValueError):
    pass


class ExponentRelationMissing(SolutionError):
    pass


class DivisionByZeroElement(ZeroDivisionError):
    def __init__(self, msg="curve lies in a coordinate plane or degenerate locus"):
        super().__init__(msg)


class UnknownEntry(KeyError):
    pass


def _one():
    return JetExpr.const(1)


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------

class FunctionRing:
    def __init__(self, kind: str):
        if kind not in RING_VARIABLES:
            raise SolutionError(f"unknown ring kind {kind!r}")
        self.kind = kind
        self.variables = RING_VARIABLES[kind]

    def __repr__(self):
        return f"FunctionRing({self.kind!r})"

    def __eq__(self, other):
        return isinstance(other, FunctionRing) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    # derivation ---------------------------------------------------------
    def _rule(self, sym: JetSymbol) -> JetExpr:
        k = self.kind
        if k == "poly":
            return _one() if sym.name == ALPHA else JetExpr()
        if k == "laurent_exp":
            return JetExpr.var("t") if sym.name == "t" else JetExpr()
        if k == "trig":
            if sym.name == "s":
                return JetExpr.var("c")
            if sym.name == "c":
                return -JetExpr.var("s")
            return JetExpr()
        if sym.name in self.variables:
            return JetExpr.symbol(sym.next())
        return JetExpr()

    def derivative(self, value):
        return self.normalize(derive(value, self._rule))

    # canonical form -----------------------------------------------------
    def reduce(self, e: JetExpr) -> JetExpr:
        if self.kind == "trig":
            return reduce_power(e, "s", 2, _one() - JetExpr.var("c") ** 2)
        return e

    def normalize(self, value):
        if isinstance(value, JetFraction):
            num, den = self.reduce(value.num), self.reduce(value.den)
            if den.is_zero():
                raise DivisionByZeroElement()
            return JetFraction(num, den).simplify() if not num.is_zero() else JetExpr()
        return self.reduce(value)

    def is_zero(self, value) -> bool:
        if isinstance(value, JetFraction):
            return self.reduce(value.num).is_zero()
        return self.reduce(value).is_zero()

    def equal(self, a, b) -> bool:
        return self.is_zero(JetFraction.of(a) - JetFraction.of(b) if _frac(a, b) else a - b)

    # parsing ------------------------------------------------------------
    def context(self, radicals=None) -> Context:
        funcs = {}
        # alpha is visible everywhere so that exp/sin/cos can see it in their
        # argument; a bare alpha outside the poly ring is rejected afterwards
        variables = {ALPHA: ALPHA, "alpha": ALPHA, "z": ALPHA}
        if self.kind == "laurent_exp":
            variables["t"] = "t"
            funcs["exp"] = _exp_handler
        elif self.kind == "trig":
            variables.update(s="s", c="c")
            funcs["sin"] = lambda arg: _trig_handler(arg, "s")
            funcs["cos"] = lambda arg: _trig_handler(arg, "c")
        elif self.kind == "free":
            variables = {"f": "f", "g": "g", "h": "h"}
        return Context(variables=variables, radicals=dict(radicals or {}), functions=funcs,
                       jets=self.kind == "free")

    def parse(self, text: str, radicals=None):
        value = self.normalize(parse(text, self.context(radicals)))
        if self.kind != "poly" and any(sym.name == ALPHA for sym in value.symbols()):
            raise ParseError(f"alpha may only appear inside function arguments in the {self.kind} ring",
                             1, text)
        return value

    # numerics -----------------------------------------------------------
    def evaluate(self, value, z):
        """Value at the complex point (or numpy array) z with alpha = z."""
        if isinstance(value, JetFraction):
            return self.evaluate(value.num, z) / self.evaluate(value.den, z)
        if self.kind == "free":
            raise SolutionError("free generators have no numeric value")
        import numpy as np
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for mono, c in value.terms.items():
            term = np.full_like(z, c.eval_numeric())
            for sym, k in mono:
                term = term * _numeric_power(sym.name, k, z)
            out = out + term
        return out


def _numeric_power(name, k, z):
    import numpy as np
    k = float(k) if isinstance(k, Fraction) else k
    if name == "t":
        return np.exp(k * z)
    if name == ALPHA:
        return z ** k
    if name == "s":
        return np.sin(z) ** k
    if name == "c":
        return np.cos(z) ** k
    raise SolutionError(f"no numeric meaning for {name}")


def _frac(a, b):
    return isinstance(a, JetFraction) or isinstance(b, JetFraction)


def _linear_alpha(arg) -> Fraction:
    if isinstance(arg, JetFraction):
        arg = arg.simplify()
    if not isinstance(arg, JetExpr) or not arg.is_monomial():
        raise ValueError("argument must be a rational multiple of alpha")
    (mono, c), = arg.terms.items()
    if mono != ((JetSymbol(ALPHA), 1),) or not c.is_rational():
        raise ValueError("argument must be a rational multiple of alpha")
    return c.rational_value()


def _exp_handler(arg):
    k = _linear_alpha(arg)
    k = int(k) if k.denominator == 1 else k
    return JetExpr.var("t") ** k


def _trig_handler(arg, var):
    if _linear_alpha(arg) != 1:
        raise ValueError("only sin(alpha) and cos(alpha) are supported")
    return JetExpr.var(var)


RINGS = {k: FunctionRing(k) for k in RING_VARIABLES}


# ---------------------------------------------------------------------------
# catalog entries
# ---------------------------------------------------------------------------

@dataclass
class SolutionEntry:
    name: str
    exponents: tuple
    ring: FunctionRing
    f: object
    g: object
    h: object
    classification: str = "entire"
    note: str = ""
    radicals: dict = field(default_factory=dict)
    sources: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)

    @property
    def elements(self):
        return (self.f, self.g, self.h)

    def text(self, which: str) -> str:
        return getattr(self, which).to_text()

    def as_dict(self):
        return {"name": self.name, "exponents": list(self.exponents), "ring": self.ring.kind,
                "classification": self.classification,
                "f": self.f.to_text(), "g": self.g.to_text(), "h": self.h.to_text(),
                "note": self.note, "flags": list(self.flags)}


def _radical_degrees(entry: SolutionEntry) -> dict:
    out = {}
    for e in entry.elements:
        num, den = (e.num, e.den) if isinstance(e, JetFraction) else (e, None)
        for part in (num, den):
            if part is None:
                continue
            for c in part.terms.values():
                for name in c.radicals():
                    out[name] = radical(name).degree
    for name, s in entry.radicals.items():
        for r in s.radicals():
            out[r] = radical(r).degree
    return out


def validate_radicals(entry: SolutionEntry) -> None:
    """Every radical symbol's relation degree must divide one of the exponents."""
    for name, deg in _radical_degrees(entry).items():
        if not any(k % deg == 0 for k in entry.exponents):
            raise ExponentRelationMissing(
                f"{entry.name}: radical {name} has relation degree {deg}, "
                f"which divides none of the exponents {entry.exponents}")


def check_solution(entry: SolutionEntry):
    """f^n + g^m + h^l - 1 in canonical form."""
    validate_radicals(entry)
    n, m, l = entry.exponents
    ring = entry.ring
    total = _pow(entry.f, n) + _pow(entry.g, m) + _pow(entry.h, l) - 1
    return ring.normalize(total)


def _pow(e, k):
    return e ** k


def residual_is_zero(entry: SolutionEntry) -> bool:
    return entry.ring.is_zero(check_solution(entry))


def substitute_alpha(entry: SolutionEntry, image_text: str) -> SolutionEntry:
    """Replace alpha by another element of the poly ring (e.g. alpha^2)."""
    if entry.ring.kind != "poly":
        raise SolutionError("alpha substitution is implemented for the poly ring")
    img = entry.ring.parse(image_text)
    mp = {JetSymbol(ALPHA): img}
    return SolutionEntry(entry.name + f"[alpha->{image_text}]", entry.exponents, entry.ring,
                         substitute(entry.f, mp), substitute(entry.g, mp), substitute(entry.h, mp),
                         entry.classification, entry.note, entry.radicals)


def permute(entry: SolutionEntry, order=(1, 2, 0)) -> SolutionEntry:
    els = entry.elements
    exps = entry.exponents
    return SolutionEntry(entry.name + f"[perm{order}]", tuple(exps[i] for i in order), entry.ring,
                         *(els[i] for i in order), entry.classification, entry.note, entry.radicals)


def _constant(ring, e):
    if isinstance(e, JetFraction):
        e = e.simplify()
        if isinstance(e, JetFraction):
            return None
    e = ring.reduce(e)
    return e.constant_value() if e.is_constant() else None


def classify(entry: SolutionEntry) -> str:
    """``trivial-constant``, ``trivial`` or ``non-trivial``."""
    ring = entry.ring
    consts = [_constant(ring, e) for e in entry.elements]
    if all(c is not None for c in consts):
        return "trivial-constant"
    els, exps = entry.elements, entry.exponents
    for k in range(3):
        c = consts[k]
        if c is None or not (c ** exps[k] - 1).is_zero():
            continue
        i, j = [a for a in range(3) if a != k]
        if exps[i] != exps[j]:
            continue
        for a, b in ((i, j), (j, i)):
            fa, fb = els[a], els[b]
            if ring.is_zero(fa):
                continue
            ratio = _constant(ring, ring.normalize(JetFraction.of(fb) / JetFraction.of(fa)))
            if ratio is not None and (ratio ** exps[a] + 1).is_zero():
                return "trivial"
    return "non-trivial"


# ---------------------------------------------------------------------------
# pullback of jet differentials
# ---------------------------------------------------------------------------

def pullback(e, entry: SolutionEntry, names=("x", "y", "z")):
    """Substitute the curve (f, g, h) and its derivatives (alpha = z) into ``e``."""
    ring = entry.ring
    syms = e.symbols()
    mapping = {}
    negative = set()
    for mono in _monomials(e):
        for sym, k in mono:
            if sym.log or (not isinstance(k, int)) or k < 0:
                negative.add(sym.name)
    for var, comp in zip(names, entry.elements):
        wanted = [s for s in syms if s.name == var]
        if not wanted:
            continue
        if var in negative and ring.is_zero(comp):
            raise DivisionByZeroElement()
        depth = max(s.order for s in wanted)
        chain = [comp]
        for _ in range(depth):
            chain.append(ring.derivative(chain[-1]))
        logs = None
        for s in wanted:
            if not s.log:
                mapping[s] = chain[s.order]
                continue
            if logs is None:
                logs = [None, ring.normalize(JetFraction.of(chain[1]) / JetFraction.of(chain[0]))]
                for _ in range(depth - 1):
                    logs.append(ring.derivative(logs[-1]))
            mapping[s] = logs[s.order]
    if isinstance(e, JetFraction):
        den = substitute(e.den, mapping)
        if ring.is_zero(den):
            raise DivisionByZeroElement()
        num = substitute(e.num, mapping)
        return ring.normalize(JetFraction.of(num) / JetFraction.of(den))
    return ring.normalize(substitute(e, mapping))


def _monomials(e):
    if isinstance(e, JetFraction):
        return list(e.num.terms) + list(e.den.terms)
    return list(e.terms)


# ---------------------------------------------------------------------------
# catalog fixture
# ---------------------------------------------------------------------------

CATALOG_ENV = "FJL_CATALOG"


def default_catalog_path():
    env = os.environ.get(CATALOG_ENV)
    if env:
        return env
    return str(resources.files("fjl").joinpath("data/catalog.ini"))


def _parse_radicals(text: str) -> dict:
    """``omega: omega^5 = -1; r: r^3 = 2`` -> {name: Scalar}."""
    out = {}
    if not text.strip():
        return out
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        name, _, rel = part.partition(":")
        name = name.strip()
        lhs, _, rhs = rel.partition("=")
        base, _, deg = lhs.strip().partition("^")
        if base.strip() != name or not deg.strip().isdigit():
            raise ParseError(f"bad radical relation {part!r}", 1, text)
        value = Scalar.coerce(Fraction(rhs.strip()))
        existing = known_radicals().get(name)
        if existing is not None and (existing.degree != int(deg) or existing.value != value):
            raise SolutionError(f"radical {name} already declared with another relation")
        out[name] = adjoin_radical(name, int(deg), value)
    return out


def _parse_exponents(text: str, params: dict) -> tuple:
    vals = []
    for part in text.split(","):
        part = part.strip().format(**params)
        vals.append(int(part))
    if len(vals) != 3 or any(v < 1 for v in vals):
        raise SolutionError(f"exponents must be three positive integers, got {text!r}")
    return tuple(vals)


def entry_from_record(name: str, rec, params: dict | None = None) -> SolutionEntry:
    params = params or {}
    ring = RINGS[rec.get("ring", "poly").strip()]
    radicals = _parse_radicals(rec.get("radicals", ""))
    exps = _parse_exponents(rec["exponents"], params)
    els = {}
    sources = {}
    for key in ("f", "g", "h"):
        text = rec[key].format(**params)
        sources[key] = text
        try:
            els[key] = ring.parse(text, radicals)
        except ParseError as err:
            raise ParseError(f"entry {name}, {key}: {err.message}", err.column, text) from None
    flags = [s.strip() for s in rec.get("flags", "").split(";") if s.strip()]
    label = name if not params else name + "".join(f"_{v}" for v in params.values())
    return SolutionEntry(label, exps, ring, els["f"], els["g"], els["h"],
                         rec.get("classification", "entire").strip(), rec.get("note", "").strip(),
                         radicals, sources, flags)


class Catalog:
    def __init__(self, path=None):
        self.path = path or default_catalog_path()
        cp = configparser.ConfigParser(interpolation=None)
        with open(self.path, encoding="utf-8") as fh:
            cp.read_file(fh)
        self.version = cp.get("catalog", "version", fallback="0") if cp.has_section("catalog") else "0"
        self.records = {s: dict(cp[s]) for s in cp.sections() if s != "catalog"}
        self.aliases = {}
        for name, rec in self.records.items():
            for a in rec.get("aliases", "").split(","):
                if a.strip():
                    self.aliases[a.strip()] = name
        self._cache = {}

    def names(self):
        return [n for n, r in self.records.items() if "template" not in r]

    def templates(self):
        return {n: r["template"] for n, r in self.records.items() if "template" in r}

    def get(self, name: str, **params) -> SolutionEntry:
        key = (name, tuple(sorted(params.items())))
        if key in self._cache:
            return self._cache[key]
        name = self.aliases.get(name, name)
        rec = self.records.get(name)
        if rec is None:
            base, _, suffix = name.rpartition("_")
            if base in self.records and suffix.isdigit() and "template" in self.records[base]:
                return self.get(base, **{self.records[base]["template"].strip(): int(suffix)})
            raise UnknownEntry(name)
        if "template" in rec:
            p = rec["template"].strip()
            if p not in params:
                raise SolutionError(f"entry {name} needs parameter {p}")
        entry = entry_from_record(name, rec, params)
        self._cache[key] = entry
        return entry

    def instantiate_all(self, template_range=range(2, 13)):
        out = [self.get(n) for n in self.names()]
        for name, p in self.templates().items():
            lo, hi = _template_range(self.records[name], template_range)
            out.extend(self.get(name, **{p.strip(): k}) for k in range(lo, hi + 1))
        return out


def _template_range(rec, default):
    text = rec.get("range")
    if not text:
        return default.start, default.stop - 1
    lo, _, hi = text.partition("..")
    return int(lo), int(hi)


_DEFAULT = {}


def load_catalog(path=None) -> Catalog:
    path = path or default_catalog_path()
    if path not in _DEFAULT:
        _DEFAULT[path] = Catalog(path)
    return _DEFAULT[path]


def get_entry(name: str, path=None, **params) -> SolutionEntry:
    return load_catalog(path).get(name, **params)


def modified_green(n: int, path=None) -> SolutionEntry:
    return get_entry("modified_green", path, N=n)


# ---------------------------------------------------------------------------
# the unbalanced brace in the degree-5 exponential example
# ---------------------------------------------------------------------------

GT_BRACKETINGS = {
    "imaginary_group": "{(sqrt(6)+2)-(3*sqrt(2)+2*sqrt(3))*i}",
    "inner_i": "{(sqrt(6)+2)-(3*sqrt(2)+2*sqrt(3)*i)}",
}


def gundersen_tohge_candidates():
    """Both readings of g's e^(-alpha) coefficient, with their residuals."""
    ring = RINGS["laurent_exp"]
    f = ring.parse("1/3*((2-sqrt(6))*exp(α) + 1 + (2+sqrt(6))*exp(-α))")
    h = ring.parse("1/6*(((sqrt(6)-2)+(2*sqrt(3)-3*sqrt(2))*i)*exp(α) + 2"
                   " - ((sqrt(6)+2)+(3*sqrt(2)+2*sqrt(3))*i)*exp(-α))")
    out = {}
    for label, brace in GT_BRACKETINGS.items():
        coeff = brace.strip("{}")
        g_text = f"1/6*(((sqrt(6)-2)+(3*sqrt(2)-2*sqrt(3))*i)*exp(α) + 2 - ({coeff})*exp(-α))"
        g = ring.parse(g_text)
        entry = SolutionEntry(f"gundersen_tohge[{label}]", (5, 5, 5), ring, f, g, h)
        out[label] = (entry, check_solution(entry))
    return out


def resolve_gundersen_tohge():
    """The bracketing whose residual vanishes (exactly one is expected)."""
    good = [k for k, (_, r) in gundersen_tohge_candidates().items() if r.is_zero()]
    if len(good) != 1:
        raise SolutionError(f"bracketing search found {len(good)} zero-residual readings")
    return good[0]
