"""Build the 2-jet differential Phi on the Fermat surface and watch its poles.

Phi is the common value of three 2x2 determinant ratios.  We check that
the three ratios agree on the differentiated surface equation, then push
xyz*Phi into the chart at infinity and read off its order along w = 0 as
a function of n.
"""
from fjl import exponents as ex
from fjl.fermat import build_phi, derive_relations, phi_identity_checks, pole_report

rel = derive_relations()          # exponents default to the symbol n
phi = build_phi(rel, verify=False)
print("identities with formal n:")
for name, ok in phi_identity_checks(phi, rel).items():
    print(f"  {name:24s} {ok}")

print()
print("Phi * x^(n-1) =")
print("  ", (phi.ratios[0] * phi.weights[0]).to_text())

w = {r.divisor: r for r in pole_report("xyzPhi")}["w=0"]
print()
print("along the divisor at infinity:")
for k, v in w.intermediates.items():
    print(f"  {k:24s} order {ex.exponent_text(v)}")
print(f"  xyz*Phi has order {ex.exponent_text(w.valuation)}: holomorphic from n = "
      f"{w.holomorphy_threshold}, vanishing from n = {w.vanishing_threshold}")

print()
for n in (6, 7, 8, 9):
    r = {r.divisor: r for r in pole_report("xyzPhi", assignment={"n": n})}["w=0"]
    kind = "log pole" if r.log_pole else ("holomorphic" if r.holomorphic else "pole")
    print(f"  n = {n}: order {ex.exponent_text(r.valuation):>3s}  {kind}"
          + ("  vanishing" if r.vanishing else ""))
