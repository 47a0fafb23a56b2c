"""Singularities of Delsarte surfaces and the existence table.

Singular points of a four-monomial surface are found exactly: each choice
of nonzero coordinates turns the gradient equations into binomials, which
are solved with radicals and roots of unity and then substituted back.
"""
from fjl.surfaces import gap_enumeration, singular_delsarte, singular_locus, smooth_delsarte, threshold_verdict
from fjl.solutions import load_catalog

for s in (smooth_delsarte(9), singular_delsarte(9)):
    v = singular_locus(s)
    print(s.to_text(), "->", v.status)
    for p in v.point_texts():
        print("   ", p)

print()
cat = load_catalog()
print(f"{'(n,m,l)':12s} {'meromorphic':34s} entire")
for t in [(3, 3, 3), (5, 5, 5), (6, 6, 6), (7, 7, 7), (8, 8, 8), (4, 4, 9), (12, 10, 9)]:
    v = threshold_verdict(*t, catalog=cat)
    print(f"{str(t):12s} {v.meromorphic:7s} {v.citations['meromorphic']:26s} "
          f"{v.entire:7s} {v.citations['entire']}")

print()
print("boundary triples left open:", [g.exponents for g in gap_enumeration(12) if g.flagged])
