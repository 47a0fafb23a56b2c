"""Acceptance criteria 1-10, one recorded pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from fjl import exponents as ex


# 1 -------------------------------------------------------------------------

def test_criterion_01_phi_identities(criterion):
    from fjl.fermat import build_phi, derive_relations, phi_identity_checks
    t0 = time.perf_counter()
    keys = ("cofactor_expansion", "det3_equals_xyz_Mxyz", "ratio1_equals_ratio2", "ratio1_equals_ratio3")
    rel = derive_relations()
    formal = phi_identity_checks(build_phi(rel, verify=False), rel)
    failed = [k for k in keys if not formal[k]]
    for n in range(2, 13):
        rel = derive_relations((n, n, n))
        res = phi_identity_checks(build_phi(rel, (n, n, n), verify=False), rel)
        failed += [f"n={n}:{k}" for k in keys if not res[k]]
    dt = time.perf_counter() - t0
    ok = not failed and dt < 10
    criterion(1, ok, f"formal n and n=2..12, {dt:.2f} s" + (f", failed {failed}" if failed else ""))
    assert ok


# 2 -------------------------------------------------------------------------

def test_criterion_02_pole_orders(criterion):
    from fjl.fermat import pole_report, chart_swap_details
    w = {r.divisor: r for r in pole_report("xyzPhi")}["w=0"]
    inter = {k: ex.exponent_text(v) for k, v in w.intermediates.items()}
    a = (ex.exponent_text(w.valuation) == "n-8"
         and inter["dy_d2z_minus_dz_d2y"] == "-3" and inter["dy_dz_dlog_difference"] == "-4"
         and inter["numerator"] == "-7"
         and (w.holomorphy_threshold, w.vanishing_threshold) == (8, 9))
    reps = {r.divisor: r for r in pole_report("xy/zPhi")}
    b = (reps["z=0"].log_pole is True and ex.exponent_text(reps["w=0"].valuation) == "n-6"
         and (reps["w=0"].holomorphy_threshold, reps["w=0"].vanishing_threshold) == (6, 7))
    c = chart_swap_details().corresponds
    ok = a and b and c
    criterion(2, ok, f"xyzPhi n-8 with -3/-4/-7 and 8/9: {a}; xy/zPhi: {b}; chart swap: {c}")
    assert ok


# 3 -------------------------------------------------------------------------

def test_criterion_03_reduction(criterion):
    from fjl.ode import verify_reduction_chain
    rep = verify_reduction_chain()
    steps = {s.name: s.passed for s in rep.steps}
    ok = (rep.passed and steps["family_solves_Nxy"] and steps["family_is_integral"]
          and steps["end_to_end"] and steps["generalized_family"])
    criterion(3, ok, f"{sum(steps.values())}/{len(steps)} steps with formal n, k1, k2, m")
    assert ok


# 4 -------------------------------------------------------------------------

def test_criterion_04_p_identity_and_wronskian(criterion):
    from fjl.ode import p_identity_details, wronskian_details
    p8, p6 = p_identity_details(8), p_identity_details(6)
    w8, w6 = wronskian_details(8), wronskian_details(6)
    ok = (p8.identity and p8.coefficient == 7 and p6.identity and p6.coefficient == 5
          and w8.holds and w8.factor == 64 and w6.holds and w6.factor == 36)
    criterion(4, ok, f"coefficients {p8.coefficient}, {p6.coefficient}; factors {w8.factor}, {w6.factor}")
    assert ok


# 5 -------------------------------------------------------------------------

def test_criterion_05_catalog(criterion, catalog):
    from fjl.fermat import build_phi, target_expression
    from fjl.solutions import check_solution, pullback
    entries = [catalog.get(n) for n in
               ("case1", "case2", "lehmer", "gross", "green", "gundersen_tohge", "trivial")]
    entries += [catalog.get("modified_green", N=N) for N in range(2, 13)]
    bad = [e.name for e in entries if not e.ring.is_zero(check_solution(e))]
    t = catalog.get("trivial")
    trivial_ok = t.ring.is_zero(pullback(build_phi(exponents=t.exponents, verify=False).minors["xyz"], t))
    gt = catalog.get("gundersen_tohge")
    gt_ok = gt.exponents == (5, 5, 5) and not gt.ring.is_zero(
        pullback(target_expression("xyzPhi", gt.exponents), gt))
    ok = not bad and trivial_ok and gt_ok
    criterion(5, ok, f"{len(entries) - len(bad)}/{len(entries)} residuals zero; trivial M_xyz=0: "
                     f"{trivial_ok}; Gundersen-Tohge xyzPhi!=0: {gt_ok}")
    assert ok


# 6 -------------------------------------------------------------------------

NUMERIC_ENTRIES = ("case2", "lehmer", "gross", "green", "gundersen_tohge")
GREEN_PAIRS = (("f", "g"), ("f", "h"), ("g", "h"))


def _green_ratios(catalog):
    from fjl.nevanlinna import characteristic_profile
    rep = characteristic_profile(catalog.get("green"), [5, 10, 20], samples=4096)
    return {p: rep.ratio_deviation(p, 20) for p in GREEN_PAIRS}


def _criterion_6_hard(catalog):
    from fjl.nevanlinna import (entry_functions, exp_z, fmt_deviation, profile, proximity_details,
                                random_fmt_targets)
    m = proximity_details(exp_z(), math.pi, samples=2 ** 14).value
    grid = list(np.linspace(5, 50, 10))
    rows_ok = True
    worst = 0.0
    for k, name in enumerate(NUMERIC_ENTRIES):
        for j, fn in enumerate(entry_functions(catalog.get(name))):
            if fn.is_constant():
                continue
            rows_ok &= profile(fn, grid, label=f"{name}/{j}").consistent()
            for a in random_fmt_targets(fn, 5, seed=100 * k + j):
                worst = max(worst, max(abs(d) for d in fmt_deviation(fn, a, grid)))
    return abs(m - 1) < 1e-6, rows_ok, worst


def test_criterion_06_nevanlinna(criterion, catalog):
    t0 = time.perf_counter()
    m_ok, rows_ok, worst = _criterion_6_hard(catalog)
    ratios = _green_ratios(catalog)
    dt = time.perf_counter() - t0
    hard = m_ok and rows_ok and worst <= 1.0 and dt < 60
    soft = all(v <= 0.05 for v in ratios.values())
    dev = ", ".join(f"T_{a}/T_{b}-1={ratios[(a, b)]:+.3f}".replace("+-", "-") for a, b in GREEN_PAIRS)
    criterion(6, hard and soft,
              f"hard parts {'pass' if hard else 'FAIL'} (m(pi,e^z)=1: {m_ok}; T=m+N: {rows_ok}; "
              f"FMT max {worst:.3f}; {dt:.1f} s); soft Green ratios at r=20 "
              f"{'pass' if soft else 'FAIL'}: {dev}")
    assert hard


@pytest.mark.xfail(strict=True, reason="for Green's n=4 solution T(r,h) is half of T(r,f) and T(r,g)")
def test_criterion_06_soft_green_pairwise(catalog):
    ratios = _green_ratios(catalog)
    assert ratios[("f", "g")] <= 0.05
    assert ratios[("f", "h")] <= 0.05 and ratios[("g", "h")] <= 0.05


def test_criterion_06_green_f_g(catalog):
    assert _green_ratios(catalog)[("f", "g")] <= 0.05


# 7 -------------------------------------------------------------------------

def test_criterion_07_surfaces(criterion):
    from fjl.surfaces import (ci_genus, fermat_surface, gap_enumeration, shioda_cover_details,
                              singular_delsarte, singular_locus, smooth_delsarte)
    fermat = all(singular_locus(fermat_surface(n)).status == "Smooth" for n in range(3, 11))
    a = singular_locus(smooth_delsarte(9)).status == "Smooth"
    v = singular_locus(singular_delsarte(9))
    values = {(round(complex(p[1].eval_numeric()).real, 9), round(complex(p[1].eval_numeric()).imag, 9))
              for p in v.points}
    b = (v.status == "IsolatedSingular" and v.verified and len(v.points) == 8 and len(values) == 8
         and all(p[0].is_zero() and p[3].is_zero() and p[2].is_one() and (p[1] ** 8 + 1).is_zero()
                 for p in v.points))
    genus = ci_genus(2, 2) == 1 and all(ci_genus(n, n) >= 2 for n in range(3, 50))
    gaps = sorted(g.exponents for g in gap_enumeration(12) if g.flagged) == [(8, 8, 8), (9, 8, 8), (9, 9, 8)]
    cover = shioda_cover_details("n").holds and all(shioda_cover_details(n).holds for n in range(2, 7))
    ok = fermat and a and b and genus and gaps and cover
    criterion(7, ok, f"fermat {fermat}, (a) {a}, (b) 8 points {b}, genus {genus}, gaps {gaps}, cover {cover}")
    assert ok


# 8 -------------------------------------------------------------------------

def test_criterion_08_decision_table(criterion, catalog):
    from fjl.solutions import check_solution
    from fjl.surfaces import _witness, threshold_verdict
    table = [((8, 8, 8), "meromorphic", "None"), ((9, 9, 9), "meromorphic", "None"),
             ((7, 7, 7), "meromorphic", "Open"), ((6, 6, 6), "entire", "None"),
             ((6, 6, 6), "meromorphic", "Exists"), ((5, 5, 5), "entire", "Exists")]
    wrong = [t for t, kind, want in table if getattr(threshold_verdict(*t, catalog=catalog), kind) != want]
    bad_low, bad_witness = [], []
    for n in range(1, 31):
        for m in range(1, n + 1):
            for l in range(1, m + 1):
                v = threshold_verdict(n, m, l, catalog=catalog)
                if Fraction(1, n) + Fraction(1, m) + Fraction(1, l) <= Fraction(3, 8) and v.meromorphic != "None":
                    bad_low.append((n, m, l))
                if v.entire == "Exists":
                    w = _witness((n, m, l), catalog)
                    if (w is None or not v.citations["entire"].startswith("CATALOG:")
                            or not w.ring.is_zero(check_solution(w))):
                        bad_witness.append((n, m, l))
    ok = not wrong and not bad_low and not bad_witness
    criterion(8, ok, f"table rows wrong {wrong}; sum<=3/8 not None {bad_low[:3]}; "
                     f"entire Exists without witness {bad_witness[:3]}")
    assert ok


# 9 -------------------------------------------------------------------------

def test_criterion_09_properties_and_mutations(criterion):
    from fjl.mutations import run_all as mutations
    from fjl.properties import run_all as properties
    props = properties(cases=1000, seed=2024)
    muts = mutations()
    failures = {k: len(v) for k, v in props.items() if v}
    missed = [k for k, (holds, rejected) in muts.items() if not (holds and rejected)]
    ok = not failures and len(muts) == 10 and not missed
    criterion(9, ok, f"{len(props)} suites x 1000 cases, failures {failures or 0}; "
                     f"{len(muts) - len(missed)}/{len(muts)} mutations detected")
    assert ok


# 10 ------------------------------------------------------------------------

def test_criterion_10_verify_paper(criterion):
    import json
    import subprocess
    import sys
    t0 = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "fjl", "verify-paper"], capture_output=True, text=True,
                         check=False)
    dt = time.perf_counter() - t0
    rep = json.loads(res.stdout)
    notes = [c for c in rep["checks"] if c["verdict"] == "pass-with-note"]
    ok = (res.returncode == 0 and dt < 120 and len(rep["paper_typo_flags"]) == 3 and len(notes) == 3
          and len(rep["checks"]) >= 25)
    criterion(10, ok, f"exit {res.returncode}, {len(rep['checks'])} checks, "
                      f"{len(rep['paper_typo_flags'])} typo flags, {dt:.1f} s")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
