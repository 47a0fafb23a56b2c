"""From M_xy = 0 to the curves y^n = k1 x^n + k2, then the Wronskian factor.

The reduction is a chain of exact rewrites; each step prints whether it
holds with n, k1, k2 left symbolic.  The second half recovers the constant
relating W(f^n, g^n, h^n) to p (fgh)^(n-2) after h', h'' are eliminated
with the derivative of f^n + g^n + h^n = 1.
"""
from fjl.ode import p_identity_details, verify_reduction_chain, wronskian_details

chain = verify_reduction_chain()
for step in chain.steps:
    mark = "ok " if step.passed else "BAD"
    print(f"{mark} {step.name:22s} {step.statement}")
for flag in chain.flags:
    print("note:", flag)

print()
for n in (8, 6):
    p = p_identity_details(n)
    w = wronskian_details(n)
    print(f"n = {n}: log-derivative identity with coefficient {p.coefficient}: {p.identity}; "
          f"p = Q/h^{p.h_power}; W = {w.factor} * p * (fgh)^{n - 2}: {w.holds}")
