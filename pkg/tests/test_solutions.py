import pytest

from fjl.solutions import (RINGS, Catalog, DivisionByZeroElement, ExponentRelationMissing, SolutionEntry,
                           UnknownEntry, check_solution, classify, gundersen_tohge_candidates,
                           modified_green, permute, pullback, resolve_gundersen_tohge,
                           substitute_alpha, validate_radicals)
from fjl.parsing import ParseError


IN_SCOPE = ["case1", "case2", "lehmer", "gross", "green", "gundersen_tohge", "trivial"]


@pytest.mark.parametrize("name", IN_SCOPE)
def test_catalog_residuals(catalog, name):
    e = catalog.get(name)
    assert e.ring.is_zero(check_solution(e))


@pytest.mark.parametrize("N", range(2, 13))
def test_modified_green(N):
    e = modified_green(N)
    assert e.exponents == (4, 4, N)
    assert e.ring.is_zero(check_solution(e))


def test_aliases(catalog):
    assert catalog.get("green4").name == "green"
    assert catalog.get("modified_green_7").exponents == (4, 4, 7)
    with pytest.raises(UnknownEntry):
        catalog.get("nope")


def test_classification(catalog):
    assert classify(catalog.get("lehmer")) == "non-trivial"
    assert classify(catalog.get("trivial")) == "trivial"


def test_ring_parse_rules():
    with pytest.raises(ParseError):
        RINGS["laurent_exp"].parse("α + 1")
    trig = RINGS["trig"]
    assert trig.is_zero(trig.parse("sin(α)^2 + cos(α)^2 - 1"))
    lau = RINGS["laurent_exp"]
    assert lau.is_zero(lau.parse("exp(2*α)*exp(-2*α) - 1"))


def test_alpha_substitution_keeps_residual(catalog):
    e = substitute_alpha(catalog.get("lehmer"), "α^2 + 1")
    assert e.ring.is_zero(check_solution(e))


def test_permutation_keeps_residual(catalog):
    e = permute(catalog.get("gross"), (2, 0, 1))
    assert e.ring.is_zero(check_solution(e))


def test_mutated_entry_fails(tmp_path):
    text = open(Catalog().path, encoding="utf-8").read().replace("f = 9*α^4", "f = 8*α^4")
    p = tmp_path / "cat.ini"
    p.write_text(text, encoding="utf-8")
    e = Catalog(p).get("lehmer")
    assert not e.ring.is_zero(check_solution(e))


def test_radical_degree_must_match_exponent():
    ring = RINGS["free"]
    from fjl.solutions import _parse_radicals
    rads = _parse_radicals("r7: r7^7 = 2")
    e = SolutionEntry("bad", (3, 3, 3), ring, ring.parse("r7*f", rads), ring.parse("g", rads),
                      ring.parse("h", rads), radicals=rads)
    with pytest.raises(ExponentRelationMissing):
        validate_radicals(e)


def test_gundersen_tohge_bracketing():
    cands = gundersen_tohge_candidates()
    zero = [k for k, (_, r) in cands.items() if r.is_zero()]
    assert zero == ["imaginary_group"]
    assert resolve_gundersen_tohge() == "imaginary_group"


def test_pullbacks(catalog):
    from fjl.fermat import build_phi, target_expression
    t = catalog.get("trivial")
    assert t.ring.is_zero(pullback(build_phi(exponents=t.exponents, verify=False).minors["xyz"], t))
    gt = catalog.get("gundersen_tohge")
    assert not gt.ring.is_zero(pullback(target_expression("xyzPhi", gt.exponents), gt))


def test_pullback_through_zero_component():
    from fjl.jets import JetExpr
    ring = RINGS["poly"]
    e = SolutionEntry("flat", (2, 2, 2), ring, ring.parse("0"), ring.parse("1"), ring.parse("0"))
    with pytest.raises(DivisionByZeroElement):
        pullback(JetExpr.var("x").inverse(), e)
