"""Desk-scale value distribution: proximity, counting and characteristic functions.

Supported function classes

* :class:`Rational`, P(z)/Q(z);
* :class:`ExpRatio`, P(T)/Q(T) with T = exp(lam*z) and P, Q Laurent polynomials;
* :class:`ExpOfPoly`, exp(P(z)), which has neither zeros nor poles.

Zeros and poles are listed from the roots of the polynomial parts.  For
exponential ratios each root rho of a polynomial in T gives the lattice
z = (log rho + 2 pi i k)/lam.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2 * math.pi
ROOT_TOL = 1e-7


class NevanlinnaError(ValueError):
    pass


class PoleOnCircle(NevanlinnaError):
    pass


class UnsupportedFunctionClass(NevanlinnaError):
    pass


def _cluster(roots, tol=ROOT_TOL):
    """[(root, multiplicity)] with nearby roots merged."""
    out = []
    for r in roots:
        for i, (c, k) in enumerate(out):
            if abs(r - c) <= tol * max(1.0, abs(c)):
                out[i] = ((c * k + r) / (k + 1), k + 1)
                break
        else:
            out.append((complex(r), 1))
    return out


def _cancel(zs, ps, tol=ROOT_TOL):
    zs = list(zs)
    ps = list(ps)
    for i, (z, kz) in enumerate(zs):
        for j, (p, kp) in enumerate(ps):
            if kz and kp and abs(z - p) <= tol * max(1.0, abs(z)):
                c = min(kz, kp)
                kz -= c
                ps[j] = (p, kp - c)
                zs[i] = (z, kz)
    return [(z, k) for z, k in zs if k], [(p, k) for p, k in ps if k]


class MeroFunction:
    """Immutable evaluable model with zero/pole enumerators."""

    def __call__(self, z):
        raise NotImplementedError

    def zeros(self, r):
        raise NotImplementedError

    def poles(self, r):
        raise NotImplementedError

    def a_points(self, a, r):
        return self.shifted(a).zeros(r)

    def shifted(self, a) -> "MeroFunction":
        """fn - a."""
        raise UnsupportedFunctionClass(f"{type(self).__name__} is not closed under shifts")

    def reciprocal(self) -> "MeroFunction":
        raise UnsupportedFunctionClass(f"{type(self).__name__} is not closed under reciprocals")

    def log_derivative(self) -> "MeroFunction":
        raise UnsupportedFunctionClass(f"{type(self).__name__} has no log derivative model")

    def is_constant(self) -> bool:
        return False


# ---------------------------------------------------------------------------

def _trim(c):
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    nz = np.flatnonzero(np.abs(c) > 0)
    if nz.size == 0:
        return np.zeros(1, dtype=complex)
    return c[nz[0]:]


class Rational(MeroFunction):
    """P(z)/Q(z); coefficients highest degree first (numpy convention)."""

    def __init__(self, num, den=(1,)):
        self.num = _trim(num)
        self.den = _trim(den)
        if not np.any(self.den):
            raise NevanlinnaError("zero denominator")

    def __call__(self, z):
        return np.polyval(self.num, z) / np.polyval(self.den, z)

    def _roots(self, c):
        return _cluster(np.roots(c)) if len(c) > 1 else []

    def _divisors(self):
        return _cancel(self._roots(self.num), self._roots(self.den))

    def zeros(self, r):
        if not np.any(self.num):
            raise NevanlinnaError("the zero function has no zero divisor")
        return [(z, k) for z, k in self._divisors()[0] if abs(z) <= r]

    def poles(self, r):
        return [(p, k) for p, k in self._divisors()[1] if abs(p) <= r]

    def shifted(self, a):
        return Rational(np.polysub(self.num, a * self.den), self.den)

    def reciprocal(self):
        return Rational(self.den, self.num)

    def log_derivative(self):
        dn, dd = np.polyder(self.num), np.polyder(self.den)
        num = np.polysub(np.polymul(dn, self.den), np.polymul(self.num, dd))
        return Rational(num, np.polymul(self.num, self.den))

    def is_constant(self):
        return len(self.num) == 1 and len(self.den) == 1


class ExpRatio(MeroFunction):
    """P(T)/Q(T), T = exp(lam*z); P, Q given as {power: coefficient}."""

    def __init__(self, num: dict, den: dict | None = None, lam=1.0):
        self.num = {int(k): complex(v) for k, v in num.items() if v != 0}
        self.den = {int(k): complex(v) for k, v in (den or {0: 1}).items() if v != 0}
        self.lam = complex(lam)
        if not self.den:
            raise NevanlinnaError("zero denominator")
        if self.lam == 0:
            raise NevanlinnaError("lam must be nonzero")

    def _eval(self, poly, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for k, c in poly.items():
            out = out + c * np.exp(k * self.lam * z)
        return out

    def __call__(self, z):
        return self._eval(self.num, z) / self._eval(self.den, z)

    @staticmethod
    def _t_roots(poly):
        if not poly:
            return []
        lo, hi = min(poly), max(poly)
        coeffs = [poly.get(k, 0) for k in range(hi, lo - 1, -1)]
        return _cluster(np.roots(coeffs)) if hi > lo else []

    def _divisors(self):
        return _cancel(self._t_roots(self.num), self._t_roots(self.den))

    def _lattice(self, roots, r):
        out = []
        R = r * abs(self.lam)
        for rho, mult in roots:
            w = complex(np.log(rho))
            a, b = w.real, w.imag
            if abs(a) > R:
                continue
            span = math.sqrt(max(R * R - a * a, 0.0))
            k0 = math.ceil((-span - b) / TWO_PI)
            k1 = math.floor((span - b) / TWO_PI)
            for k in range(k0, k1 + 1):
                z = (w + TWO_PI * 1j * k) / self.lam
                if abs(z) <= r * (1 + 1e-12):
                    out.append((z, mult))
        return out

    def zeros(self, r):
        if not self.num:
            raise NevanlinnaError("the zero function has no zero divisor")
        return self._lattice(self._divisors()[0], r)

    def poles(self, r):
        return self._lattice(self._divisors()[1], r)

    def shifted(self, a):
        num = dict(self.num)
        for k, c in self.den.items():
            num[k] = num.get(k, 0) - a * c
        return ExpRatio(num, self.den, self.lam)

    def reciprocal(self):
        return ExpRatio(self.den, self.num, self.lam)

    def _d(self, poly):
        return {k: k * self.lam * c for k, c in poly.items() if k}

    def log_derivative(self):
        num = _lmul(self._d(self.num), self.den)
        for k, c in _lmul(self.num, self._d(self.den)).items():
            num[k] = num.get(k, 0) - c
        return ExpRatio(num, _lmul(self.num, self.den), self.lam)

    def is_constant(self):
        return set(self.num) <= {min(self.num, default=0)} and set(self.den) == set(self.num) \
            and len(self.num) <= 1


def _lmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}


class ExpOfPoly(MeroFunction):
    """exp(P(z)); coefficients highest first."""

    def __init__(self, poly):
        self.poly = _trim(poly)

    def __call__(self, z):
        return np.exp(np.polyval(self.poly, z))

    def zeros(self, r):
        return []

    def poles(self, r):
        return []

    def log_derivative(self):
        return Rational(np.polyder(self.poly) if len(self.poly) > 1 else [0])

    def is_constant(self):
        return len(self.poly) == 1


def constant(c) -> Rational:
    return Rational([c])


def exp_z(lam=1.0) -> ExpRatio:
    return ExpRatio({1: 1}, lam=lam)


# ---------------------------------------------------------------------------
# proximity and counting
# ---------------------------------------------------------------------------

@dataclass
class Proximity:
    value: float
    error: float
    samples: int


def _circle(r, samples):
    theta = np.arange(samples) * (TWO_PI / samples)
    return r * np.exp(1j * theta)


def _log_plus(values):
    a = np.abs(values)
    with np.errstate(divide="ignore"):
        lg = np.log(np.where(a > np.finfo(float).eps, a, 1.0))
    return np.maximum(lg, 0.0)


def _check_circle(fn, r, tol=1e-12):
    for p, _ in fn.poles(r * (1 + 1e-6)):
        if abs(abs(p) - r) <= tol * max(1.0, r):
            raise PoleOnCircle(f"pole at {p} lies on |z| = {r}")


def proximity_details(fn: MeroFunction, r: float, samples: int = 4096) -> Proximity:
    if r <= 0:
        raise NevanlinnaError("radius must be positive")
    if samples < 4 or samples % 2:
        raise NevanlinnaError("samples must be an even integer >= 4")
    _check_circle(fn, r)
    lp = _log_plus(fn(_circle(r, samples)))
    full = float(lp.mean())
    half = float(lp[::2].mean())
    return Proximity(full, abs(full - half), samples)


def proximity(fn: MeroFunction, r: float, samples: int = 4096) -> float:
    """m(r, fn) by the trapezoidal rule."""
    return proximity_details(fn, r, samples).value


def _count(points, r):
    total = 0.0
    for a, k in points:
        if abs(a) < 1e-300:
            total += k * math.log(r)
        elif abs(a) <= r:
            total += k * math.log(r / abs(a))
    return total


def counting(fn: MeroFunction, r: float, target=math.inf) -> float:
    """N(r, fn, target): integrated count of poles (target inf) or target-points."""
    if r <= 0:
        raise NevanlinnaError("radius must be positive")
    if target is None or (isinstance(target, float) and math.isinf(target)):
        return _count(fn.poles(r), r)
    return _count(fn.a_points(target, r), r)


def characteristic(fn: MeroFunction, r: float, samples: int = 4096) -> float:
    return proximity(fn, r, samples) + counting(fn, r)


def safe_radius(fn: MeroFunction, r: float, extra=()) -> float:
    """Nudge r outward when a pole (or listed point) is within 1e-8 of the circle."""
    for _ in range(50):
        pts = list(fn.poles(r * 1.01)) + [(p, 1) for p in extra]
        if all(abs(abs(p) - r) > 1e-8 for p, _ in pts):
            return r
        r *= 1 + 1e-6
    return r


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

@dataclass
class ProfileRow:
    r: float
    m: float
    N: float
    T: float
    error: float


@dataclass
class NevanlinnaProfile:
    label: str
    rows: list
    samples: int

    @property
    def radii(self):
        return [row.r for row in self.rows]

    def T(self):
        return [row.T for row in self.rows]

    def max_error(self):
        return max((row.error for row in self.rows), default=0.0)

    def consistent(self) -> bool:
        rs = self.radii
        return (all(b > a for a, b in zip(rs, rs[1:]))
                and all(row.T == row.m + row.N for row in self.rows)
                and all(math.isfinite(row.T) for row in self.rows))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["component", "r", "m", "N", "T", "quadrature_error"])
        for row in self.rows:
            w.writerow([self.label, f"{row.r:.10g}", f"{row.m:.12g}", f"{row.N:.12g}",
                        f"{row.T:.12g}", f"{row.error:.3g}"])
        return buf.getvalue()

    def as_dict(self):
        return {"label": self.label, "samples": self.samples,
                "rows": [row.__dict__.copy() for row in self.rows]}


def profile(fn: MeroFunction, grid, samples: int = 4096, label: str = "fn") -> NevanlinnaProfile:
    rows = []
    for r in grid:
        r = safe_radius(fn, float(r))
        p = proximity_details(fn, r, samples)
        n = counting(fn, r)
        rows.append(ProfileRow(r, p.value, n, p.value + n, p.error))
    return NevanlinnaProfile(label, rows, samples)


# ---------------------------------------------------------------------------
# catalog bridge
# ---------------------------------------------------------------------------

def from_element(ring, value) -> MeroFunction:
    """Model a ring element of the solutions module with alpha = z."""
    from .jets import JetFraction, JetExpr
    if isinstance(value, JetFraction):
        num, den = value.num, value.den
    else:
        num, den = value, JetExpr.const(1)
    kind = ring.kind
    if kind == "poly":
        return _poly_model(num, den)
    if kind == "laurent_exp":
        return _exp_model(num, den)
    if kind == "trig":
        return _trig_model(num, den)
    raise UnsupportedFunctionClass(f"ring {kind} has no numeric model")


def _coeff(c):
    return complex(c.eval_numeric())


def _poly_model(num, den):
    def dense(e):
        d = {}
        for mono, c in e.terms.items():
            k = sum(p for _, p in mono)
            d[k] = d.get(k, 0) + _coeff(c)
        return d
    a, b = dense(num), dense(den)
    shift = -min(min(a, default=0), min(b, default=0), 0)
    def arr(d):
        if not d:
            return [0]
        hi = max(d) + shift
        return [d.get(k - shift, 0) for k in range(hi, -1, -1)]
    return Rational(arr(a), arr(b))


def _exp_model(num, den):
    from fractions import Fraction
    dens = [Fraction(p).denominator for e in (num, den) for mono in e.terms for _, p in mono]
    L = 1
    for d in dens:
        L = L * d // math.gcd(L, d)
    def conv(e):
        out = {}
        for mono, c in e.terms.items():
            k = sum(Fraction(p) for _, p in mono) * L
            out[int(k)] = out.get(int(k), 0) + _coeff(c)
        return out
    return ExpRatio(conv(num), conv(den), lam=1.0 / L)


def _trig_model(num, den):
    # s = (T - 1/T)/(2i), c = (T + 1/T)/2 with T = exp(i z)
    s = {1: 1 / 2j, -1: -1 / 2j}
    c = {1: 0.5, -1: 0.5}
    def conv(e):
        out = {}
        for mono, coeff in e.terms.items():
            term = {0: _coeff(coeff)}
            for sym, p in mono:
                base = s if sym.name == "s" else c
                for _ in range(p):
                    term = _lmul(term, base)
            for k, v in term.items():
                out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if abs(v) > 1e-15}
    return ExpRatio(conv(num), conv(den), lam=1j)


def entry_functions(entry) -> tuple:
    return tuple(from_element(entry.ring, e) for e in entry.elements)


# ---------------------------------------------------------------------------
# comparisons
# ---------------------------------------------------------------------------

def _map_characteristic(fns, r, samples):
    """T(r, F) for F = [f, g, h, 1] from the circle average of log max|F_j|.

    With all components entire this is the Cartan characteristic up to the
    constant log max|F_j(0)|, which is subtracted.  Poles are cleared by the
    product of denominators when every component is an ExpRatio or Rational.
    """
    z = _circle(r, samples)
    parts = [np.abs(fn(z)) for fn in fns]
    at0 = [abs(complex(np.asarray(fn(np.array([0j])))[0])) for fn in fns]
    poles = [fn.poles(r) for fn in fns]
    if any(poles):
        # multiply through by prod Q_j: log max|F| gains sum log|Q_j|, and
        # the Jensen formula turns the extra term into sum N(r, f_j) - ...
        raise UnsupportedFunctionClass("map characteristic implemented for entire components")
    lg = np.log(np.maximum.reduce(parts + [np.ones_like(parts[0])]))
    return float(lg.mean()) - math.log(max(at0 + [1.0]))


@dataclass
class ComparisonReport:
    entry: str
    grid: list
    profiles: dict
    ratios: dict
    sandwich: dict
    notes: list = field(default_factory=list)

    def ratio_deviation(self, pair=("f", "g"), r=None):
        key = f"T_{pair[0]}/T_{pair[1]}"
        vals = self.ratios[key]
        idx = -1 if r is None else self.grid.index(r)
        v = vals[idx]
        return None if v is None else abs(v - 1.0)

    def to_csv(self) -> str:
        text = ""
        for i, p in enumerate(self.profiles.values()):
            csv_text = p.to_csv()
            text += csv_text if i == 0 else csv_text.split("\n", 1)[1]
        return text

    def as_dict(self):
        return {"entry": self.entry, "grid": self.grid,
                "profiles": {k: v.as_dict() for k, v in self.profiles.items()},
                "ratios": self.ratios, "sandwich": self.sandwich, "notes": list(self.notes)}


def characteristic_profile(entry, grid=(5, 10, 20), samples: int = 4096) -> ComparisonReport:
    fns = entry_functions(entry)
    grid = [float(r) for r in grid]
    profiles = {name: profile(fn, grid, samples, name) for name, fn in zip("fgh", fns)}
    ratios = {}
    for a, b in (("f", "g"), ("f", "h"), ("g", "h")):
        vals = []
        for ra, rb in zip(profiles[a].rows, profiles[b].rows):
            vals.append(ra.T / rb.T if rb.T > 0 else None)
        ratios[f"T_{a}/T_{b}"] = vals
    sandwich = {}
    notes = ["grid checks may meet the exceptional set of finite logarithmic measure; "
             "asymptotic comparisons are soft"]
    try:
        TF = [_map_characteristic(fns, r, samples) for r in grid]
        sums = [sum(p.rows[i].T for p in profiles.values()) for i in range(len(grid))]
        lower = max(s / 3 - t for s, t in zip(sums, TF))
        upper = max(t - s for s, t in zip(sums, TF))
        C = max(lower, upper, 0.0)
        sandwich = {"T_F": TF, "sum_T": sums, "C": C,
                    "holds": all(s / 3 - C <= t <= s + C for s, t in zip(sums, TF))}
    except UnsupportedFunctionClass as exc:
        notes.append(f"sandwich skipped: {exc}")
    return ComparisonReport(entry.name, grid, profiles, ratios, sandwich, notes)


def fmt_deviation(fn: MeroFunction, a: complex, grid, samples: int = 4096) -> list:
    """|T(r, 1/(fn - a)) - T(r, fn)| over the grid (bounded by the First Main Theorem)."""
    g = fn.shifted(a).reciprocal()
    out = []
    for r in grid:
        r = safe_radius(fn, float(r), [p for p, _ in g.poles(float(r) * 1.01)])
        out.append(abs(characteristic(g, r, samples) - characteristic(fn, r, samples)))
    return out


def fmt_constant(fn: MeroFunction, a: complex) -> float:
    """log+|a| + log 2 + |log|c|| bound from the First Main Theorem, c the leading coefficient at 0."""
    v = complex(np.asarray(fn(np.array([0j])))[0]) - a
    return math.log(max(abs(a), 1)) + math.log(2) + abs(math.log(abs(v))) if v != 0 else math.inf


def random_fmt_targets(fn: MeroFunction, count: int, seed: int = 0, radius: float = 1.0):
    """Points a on the circle |a - fn(0)| = radius, away from fn(0)."""
    rng = np.random.default_rng(seed)
    c = complex(np.asarray(fn(np.array([0j])))[0])
    return [c + radius * complex(np.exp(1j * t)) for t in rng.uniform(0, TWO_PI, count)]


@dataclass
class LogDerivRow:
    r: float
    m_logderiv: float
    log_rT: float
    ratio: float | None


def logderiv_check(fn: MeroFunction, grid, samples: int = 4096, bound: float = 1.0, tail: int = 3):
    """Table of m(r, fn'/fn) against log(r T(r, fn)); flag if the tail ratio exceeds ``bound``."""
    ld = fn.log_derivative()
    rows = []
    for r in grid:
        r = safe_radius(ld, float(r))
        m = proximity(ld, r, samples)
        T = characteristic(fn, r, samples)
        base = math.log(r * T) if r * T > 1 else None
        rows.append(LogDerivRow(r, m, base if base is not None else float("nan"),
                                (m / base) if base else None))
    tail_ratios = [row.ratio for row in rows[-tail:] if row.ratio is not None]
    flag = any(x > bound for x in tail_ratios)
    return {"rows": [row.__dict__.copy() for row in rows], "flag": flag, "bound": bound}
