import math

import numpy as np
import pytest

from fjl.nevanlinna import (ExpOfPoly, ExpRatio, PoleOnCircle, Rational, characteristic,
                            characteristic_profile, counting, entry_functions, exp_z,
                            fmt_deviation, logderiv_check, profile, proximity, proximity_details)


def test_proximity_of_exp():
    d = proximity_details(exp_z(), math.pi, samples=2 ** 14)
    assert abs(d.value - 1.0) < 1e-6


def test_polynomial_characteristic():
    z = Rational([1, 0], [1])
    assert abs(proximity(z, 10.0) - math.log(10)) < 1e-9
    assert counting(z, 10.0) == 0


def test_counting_simple_pole():
    f = Rational([1], [1, 0])
    assert abs(counting(f, 7.0) - math.log(7)) < 1e-12


def test_counting_matches_direct_sum():
    # 1/(e^z - 1) has poles at 2 pi i k
    f = ExpRatio({0: 1}, {1: 1, 0: -1}, 1.0)
    r = 20.0
    poles = [2 * math.pi * k for k in range(-4, 5)]
    inside = [abs(p) for p in poles if abs(p) < r]
    direct = sum(math.log(r / p) for p in inside if p > 0) + math.log(r)
    assert abs(counting(f, r) - direct) < 1e-9


def test_growth_of_exp_poly():
    f = ExpOfPoly([1, 0, 0])   # exp(z^2)
    assert abs(characteristic(f, 5.0) - 25 / math.pi) < 1e-3


def test_pole_on_circle():
    with pytest.raises(PoleOnCircle):
        proximity(Rational([1], [1, -2]), 2.0, samples=4096)


def test_profile_is_consistent():
    prof = profile(ExpRatio({1: 1, -1: 1}, {0: 1}, 1.0), [5, 10, 20], label="cosh")
    assert prof.consistent()
    assert prof.to_csv().splitlines()[0].startswith("label") or "," in prof.to_csv().splitlines()[0]


def test_green_profile(catalog):
    rep = characteristic_profile(catalog.get("green"), [5, 10, 20])
    assert rep.ratio_deviation(("f", "g"), 20) < 0.05
    assert rep.sandwich["holds"]
    T = {k: p.rows[-1].T for k, p in rep.profiles.items()}
    # T = 4r/pi and 2r/pi up to the bounded term log|c| of the leading constant
    assert abs(T["f"] - (80 / math.pi + math.log(8 ** -0.25))) < 1e-2
    assert abs(T["h"] - 40 / math.pi) < 1e-2


def test_fmt_on_lehmer(catalog):
    f = entry_functions(catalog.get("lehmer"))[0]
    dev = fmt_deviation(f, 0.3 + 0.2j, [5, 10, 20])
    assert max(abs(v) for v in dev) <= 1.0 + math.log(9) + 1


def test_logderiv_small(catalog):
    res = logderiv_check(entry_functions(catalog.get("green"))[0], [5, 10, 20, 40])
    assert res["flag"] is False
    assert all(np.isfinite(r["m_logderiv"]) and r["ratio"] < 1 for r in res["rows"])
