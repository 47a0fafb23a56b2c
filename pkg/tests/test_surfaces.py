import random
from fractions import Fraction

import pytest

from fjl.surfaces import (MonomialSurface, NonIntegerGenus, SurfaceError, ci_genus, fermat_plane_genus,
                          fermat_surface, gap_enumeration, shioda_cover_details, singular_delsarte,
                          singular_locus, smooth_delsarte, threshold_verdict)


@pytest.mark.parametrize("n", range(3, 11))
def test_fermat_smooth(n):
    assert singular_locus(fermat_surface(n)).status == "Smooth"


def test_delsarte_a():
    assert singular_locus(smooth_delsarte(9)).status == "Smooth"


def test_delsarte_b_points():
    v = singular_locus(singular_delsarte(9))
    assert v.status == "IsolatedSingular" and v.verified
    assert len(v.points) == 8
    vals = {complex(p[1].eval_numeric()) for p in v.points}
    assert len({(round(z.real, 9), round(z.imag, 9)) for z in vals}) == 8
    for p in v.points:
        assert p[0].is_zero() and p[3].is_zero() and p[2].is_one()
        assert (p[1] ** 8 + 1).is_zero()


def test_nodal_cubic_surface():
    # a cone over a plane cubic is singular exactly at its vertex
    v = singular_locus(MonomialSurface.parse("X^3 + Y^3 + Z^3 + 0*W^3"))
    assert v.status == "IsolatedSingular"
    assert v.point_texts() == ["[0:0:0:1]"]


def test_parse_with_equals():
    s = MonomialSurface.parse("X^4 + Y^4 + Z^4 = W^4")
    assert s.is_homogeneous() and s.is_delsarte() and s.degree == 4


def test_inhomogeneous_rejected():
    with pytest.raises(SurfaceError):
        singular_locus(MonomialSurface.parse("X^3 + Y^2 + Z^3 - W^3"))


def _hilbert_value(polys, t, p=10007, rng=random.Random(1)):
    """dim of degree-t part of k[X,Y,Z,W]/(polys) for random numeric coefficients mod p."""
    from itertools import combinations_with_replacement as cwr
    def monos(d):
        out = []
        for c in cwr(range(4), d):
            e = [0, 0, 0, 0]
            for j in c:
                e[j] += 1
            out.append(tuple(e))
        return out
    target = {m: j for j, m in enumerate(monos(t))}
    rows = []
    for f in polys:
        deg = sum(next(iter(f)))
        if deg > t:
            continue
        for m in monos(t - deg):
            rows.append({tuple(a + b for a, b in zip(m, k)): c for k, c in f.items()})
    # rank mod p by elimination
    mat = [[r.get(m, 0) % p for m in target] for r in rows]
    rank, col = 0, 0
    ncol = len(target)
    while rank < len(mat) and col < ncol:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return len(target) - rank


def _random_form(d, rng):
    from itertools import combinations_with_replacement as cwr
    out = {}
    for c in cwr(range(4), d):
        e = [0, 0, 0, 0]
        for j in c:
            e[j] += 1
        out[tuple(e)] = rng.randrange(1, 10007)
    return out


@pytest.mark.parametrize("d1,d2", [(2, 2), (2, 3), (3, 3)])
def test_ci_genus_matches_hilbert_polynomial(d1, d2):
    # H(t) = d1 d2 t + 1 - g for large t on a smooth complete intersection curve
    rng = random.Random(7)
    polys = [_random_form(d1, rng), _random_form(d2, rng)]
    t = d1 + d2 + 2
    H = _hilbert_value(polys, t)
    assert d1 * d2 * t + 1 - H == ci_genus(d1, d2)


def test_ci_genus_values():
    assert ci_genus(2, 2) == 1
    assert ci_genus(3, 3) == 10
    assert all(ci_genus(n, n) >= 2 for n in range(3, 40))


def test_plane_genus():
    assert fermat_plane_genus(3) == 1
    assert fermat_plane_genus(4) == 3


def test_gaps():
    flagged = sorted(g.exponents for g in gap_enumeration(12) if g.flagged)
    assert flagged == [(8, 8, 8), (9, 8, 8), (9, 9, 8)]
    assert all(Fraction(25, 72) <= g.total <= Fraction(3, 8) for g in gap_enumeration(12))
    with pytest.raises(SurfaceError):
        gap_enumeration(5)


def test_covering_identity():
    assert shioda_cover_details("n").holds
    for n in range(2, 7):
        r = shioda_cover_details(n)
        assert r.holds and not r.verbatim_holds
    assert not shioda_cover_details("n", phi2_power="n-2").holds


@pytest.mark.parametrize("triple,mero,entire", [
    ((8, 8, 8), "None", "None"), ((9, 9, 9), "None", "None"), ((7, 7, 7), "Open", "None"),
    ((6, 6, 6), "Exists", "None"), ((5, 5, 5), "Exists", "Exists"), ((3, 3, 3), "Exists", "Exists"),
    ((4, 4, 20), "Exists", "Exists"), ((20, 20, 20), "None", "None"),
])
def test_verdict_table(catalog, triple, mero, entire):
    v = threshold_verdict(*triple, catalog=catalog)
    assert (v.meromorphic, v.entire) == (mero, entire)
