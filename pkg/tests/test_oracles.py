"""Cross-checks against sympy, computed independently of the jet engine."""
import pytest

sp = pytest.importorskip("sympy")

z = sp.symbols("z")
f, g = sp.Function("f")(z), sp.Function("g")(z)


def _D2(u, n):
    return sp.diff(u, z, 2) + (n - 1) * sp.diff(u, z) ** 2 / u


@pytest.mark.parametrize("n", [6, 8])
def test_wronskian_factor_sympy(n):
    # with h^n = 1 - f^n - g^n the third column is -(first + second) plus a constant
    cols = [f ** n, g ** n, 1 - f ** n - g ** n]
    W = sp.Matrix([[sp.diff(c, z, k) for c in cols] for k in range(3)]).det()
    Q = f * g * (sp.diff(f, z) * _D2(g, n) - sp.diff(g, z) * _D2(f, n))
    assert sp.simplify(W - n ** 2 * Q * (f * g) ** (n - 2)) == 0


@pytest.mark.parametrize("n", [6, 8])
def test_p_identity_sympy(n):
    fp, gp = sp.diff(f, z), sp.diff(g, z)
    lhs = sp.diff(sp.log(gp / fp), z) + (n - 1) * sp.diff(sp.log(g / f), z)
    rhs = (fp * _D2(g, n) - gp * _D2(f, n)) / (fp * gp)
    assert sp.simplify(lhs - rhs) == 0


def test_lehmer_sympy():
    a = sp.symbols("a")
    F, G, H = 9 * a ** 4, -9 * a ** 4 + 3 * a, -9 * a ** 3 + 1
    assert sp.expand(F ** 3 + G ** 3 + H ** 3 - 1) == 0


def test_cofactor_determinant_sympy():
    from fjl.fermat import build_phi
    n = 4
    xs = sp.symbols("x y z")
    d1 = sp.symbols("dx dy dz")
    d2 = sp.symbols("ddx ddy ddz")
    D2 = [d2[i] + (n - 1) * d1[i] ** 2 / xs[i] for i in range(3)]
    M = sp.Matrix([list(xs), list(d1), D2])
    det = sp.together(M.det())
    bundle = build_phi(exponents=(n, n, n), verify=False)
    text = bundle.det3.to_text()
    for v, name in zip(xs, "xyz"):
        text = text.replace(f"d2({name})", f"dd{name}").replace(f"d({name})", f"d{name}")
    ours = sp.sympify(text.replace("^", "**"), locals={str(s): s for s in (*xs, *d1, *d2)})
    assert sp.simplify(ours - det) == 0
