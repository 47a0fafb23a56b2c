"""Every catalog solution of f^n + g^m + h^l = 1, its residual and a pullback.

Residuals are computed exactly in the ring the entry lives in (polynomials
in alpha, Laurent polynomials in exp(alpha/L), or sin/cos).  For n = m = l
the jet differentials xyz*Phi and M_xyz are pulled back along the curve.
"""
from fjl.fermat import build_phi, target_expression
from fjl.solutions import check_solution, classify, load_catalog, pullback

cat = load_catalog()
for e in cat.instantiate_all(range(2, 6)):
    r = check_solution(e)
    line = f"{e.name:20s} {str(e.exponents):12s} residual {'0' if e.ring.is_zero(r) else r.to_text()}"
    line += f"  [{classify(e)}]"
    print(line)

print()
for name in ("trivial", "gundersen_tohge"):
    e = cat.get(name)
    M = pullback(build_phi(exponents=e.exponents, verify=False).minors["xyz"], e)
    phi = pullback(target_expression("xyzPhi", e.exponents), e)
    print(f"{name}: M_xyz pulls back to {'0' if e.ring.is_zero(M) else 'a nonzero function'}, "
          f"xyz*Phi to {'0' if e.ring.is_zero(phi) else 'a nonzero function'}")
