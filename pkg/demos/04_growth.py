"""Nevanlinna characteristics of the exponential solutions.

T(r, f) = m(r, f) + N(r, f) is computed by circle quadrature plus an exact
pole count.  For Green's quartic solution f and g grow like 4r/pi and h
like 2r/pi, which the table makes visible.
"""
import math

from fjl.nevanlinna import characteristic_profile, entry_functions, fmt_deviation, random_fmt_targets
from fjl.solutions import load_catalog

cat = load_catalog()
rep = characteristic_profile(cat.get("green"), [5, 10, 20, 40])
print("   r      T_f      T_g      T_h    4r/pi")
for j, r in enumerate(rep.grid):
    T = [rep.profiles[k].rows[j].T for k in "fgh"]
    print(f"{r:4.0f} {T[0]:8.3f} {T[1]:8.3f} {T[2]:8.3f} {4 * r / math.pi:8.3f}")
print("sandwich T(F) <= T_f + T_g + T_h + C:", rep.sandwich["holds"])

print()
f = entry_functions(cat.get("gundersen_tohge"))[0]
for a in random_fmt_targets(f, 3, seed=1):
    dev = fmt_deviation(f, a, [5, 10, 20, 50])
    print(f"a = {a:.3f}: |T(r,1/(f-a)) - T(r,f)| <= {max(abs(d) for d in dev):.3f}")
