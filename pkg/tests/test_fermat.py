import pytest

from fjl import exponents as ex
from fjl.exponents import Assumptions
from fjl.fermat import (build_phi, derive_relations, phi_expansion_check, phi_identity_checks,
                        phi_equals_det3_on_surface, pole_report, chart_swap_details, resolve_target)


@pytest.fixture(scope="module")
def formal():
    return build_phi(verify=False)


def test_formal_identities(formal):
    checks = phi_identity_checks(formal, derive_relations())
    assert checks and all(checks.values()), checks


@pytest.mark.parametrize("n", [2, 3, 7, 12])
def test_concrete_identities(n):
    rel = derive_relations((n, n, n))
    assert all(phi_identity_checks(build_phi(rel, (n, n, n), verify=False), rel).values())


def test_generalized_variant_identities():
    rel = derive_relations(("n", "m", "l"), variant="generalized")
    b = build_phi(rel, ("n", "m", "l"), variant="generalized", verify=False)
    assert all(phi_identity_checks(b, rel).values())
    assert not phi_equals_det3_on_surface(b)["applies"]


def test_surface_rewrite(formal):
    assert phi_equals_det3_on_surface(formal)["applies"]


def test_expansion(formal):
    assert phi_expansion_check(formal)
    assert phi_expansion_check(formal, assignment={"n": 7})
    assert not phi_expansion_check(formal, coefficient="n")


def test_pole_orders_formal():
    reps = {r.divisor: r for r in pole_report("xyzPhi")}
    w = reps["w=0"]
    assert ex.exponent_text(w.valuation) == "n-8"
    assert (w.holomorphy_threshold, w.vanishing_threshold) == (8, 9)
    inter = {k: ex.exponent_text(v) for k, v in w.intermediates.items()}
    assert inter["dy_d2z_minus_dz_d2y"] == "-3"
    assert inter["dy_dz_dlog_difference"] == "-4"
    assert inter["numerator"] == "-7"


@pytest.mark.parametrize("n,hol,van", [(6, False, False), (7, False, False), (8, True, False),
                                       (9, True, True), (12, True, True)])
def test_pole_orders_specialised(n, hol, van):
    w = {r.divisor: r for r in pole_report("xyzPhi", assignment={"n": n})}["w=0"]
    assert (w.holomorphic, w.vanishing) == (hol, van)


def test_pole_orders_under_assumption():
    w = {r.divisor: r for r in pole_report("xyzPhi", assumptions=Assumptions.parse("n>=9"))}["w=0"]
    assert w.vanishing is True
    w = {r.divisor: r for r in pole_report("xyzPhi", assumptions=Assumptions.parse("n>=2"))}["w=0"]
    assert w.holomorphic is None


def test_log_pole_target():
    reps = {r.divisor: r for r in pole_report("xy/zPhi")}
    assert reps["z=0"].log_pole is True
    assert ex.exponent_text(reps["w=0"].valuation) == "n-6"
    assert (reps["w=0"].holomorphy_threshold, reps["w=0"].vanishing_threshold) == (6, 7)


def test_target_aliases():
    assert resolve_target("xyz_phi") == "xyzPhi"
    with pytest.raises((KeyError, ValueError)):
        resolve_target("nonsense")


def test_chart_swap():
    c = chart_swap_details()
    assert c.corresponds
    assert not c.literal_equal
    assert c.factor == "-w^(n-6)"
