"""Designated single-coefficient mutations of the verified identities.

Each mutation changes exactly one coefficient (or exponent) of an identity
that holds, and the corresponding checker must reject it.  ``detect(name)``
returns (original_holds, mutant_rejected).
"""
from __future__ import annotations

from dataclasses import replace

from .jets import JetExpr


def _cofactor():
    from .fermat import build_phi, derive_relations, phi_identity_checks
    rel = derive_relations()
    b = build_phi(rel, verify=False)
    Z = JetExpr.var("z")
    bad = replace(b, det3=b.det3 + Z * b.numerators["xy"])      # coefficient of z: 1 -> 2
    return (phi_identity_checks(b, rel)["cofactor_expansion"],
            not phi_identity_checks(bad, rel)["cofactor_expansion"])


def _expansion():
    from .fermat import phi_expansion_check
    return phi_expansion_check(), not phi_expansion_check(coefficient="n-2")


def _p_identity(n, wrong):
    def run():
        from .ode import p_identity_details
        return p_identity_details(n).identity, not p_identity_details(n, coefficient=wrong).identity
    return run


def _wronskian(n, wrong):
    def run():
        from .ode import wronskian_details
        return wronskian_details(n).holds, not wronskian_details(n, factor=wrong).holds
    return run


def _shioda():
    from .surfaces import shioda_cover_details
    return shioda_cover_details("n").holds, not shioda_cover_details("n", phi2_power="n-2").holds


def _entry(name, key, old, new):
    def run():
        from .solutions import check_solution, load_catalog, entry_from_record
        cat = load_catalog()
        e = cat.get(name)
        rec = dict(cat.records[name])
        if rec[key].count(old) != 1:
            raise ValueError(f"mutation {old!r} -> {new!r} is ambiguous in {name}.{key}")
        rec[key] = rec[key].replace(old, new)
        m = entry_from_record(name, rec)
        return e.ring.is_zero(check_solution(e)), not m.ring.is_zero(check_solution(m))
    return run


def _closed_family():
    from . import exponents as ex
    from .jets import substitute, total_derivative
    from .ode import closed_family_substitution
    from .scalars import Scalar
    x, y = JetExpr.var("x"), JetExpr.var("y")
    n = ex.parse_exponent("n")
    k1 = Scalar.param("k1")
    implicit = y ** n - (x ** n).scale(k1)
    good = substitute(total_derivative(implicit), closed_family_substitution("n")).is_zero()
    bad = substitute(total_derivative(implicit), closed_family_substitution("n", k1=2 * k1)).is_zero()
    return good, not bad


MUTATIONS = {
    "cofactor: z coefficient 1 -> 2": _cofactor,
    "expansion: n-1 -> n-2": _expansion,
    "p-identity n=8: 7 -> 6": _p_identity(8, 6),
    "p-identity n=6: 5 -> 4": _p_identity(6, 4),
    "wronskian n=8: 64 -> 63": _wronskian(8, 63),
    "wronskian n=6: 36 -> 35": _wronskian(6, 35),
    "covering: phi2 exponent n-1 -> n-2": _shioda,
    "lehmer: f coefficient 9 -> 8": _entry("lehmer", "f", "9*", "8*"),
    "gundersen_tohge: f prefactor 1/3 -> 1/4": _entry("gundersen_tohge", "f", "1/3*", "1/4*"),
    "closed family: k1 -> 2 k1": _closed_family,
}


def detect(name: str):
    return MUTATIONS[name]()


def run_all() -> dict:
    return {name: fn() for name, fn in MUTATIONS.items()}
