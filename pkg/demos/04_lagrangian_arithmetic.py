"""Diophantine admissibility of lagrangian surfaces in K3[2]-type fourfolds.

Run with:  python3 demos/04_lagrangian_arithmetic.py
"""

from llvlat import (
    InadmissibleError,
    arithmetic_search,
    hodge_relations,
    integral_lagrangian_class,
    lagrangian_data,
    make_space,
    segre_enumerate,
    untwisted_lift_check,
)
from llvlat.rational import fmt_q

sp = make_space("HilbK3", 2)

# ---------------------------------------------------------------------------
# A lagrangian surface Z with rank-one H^2 restriction has all of its
# invariants pinned down by the square of the cutting class and chi(Z).
# Three classical cases:

for q, chi_z, label in [
    (6, 27, "Fano surface of lines on a cubic threefold"),
    (-10, 3, "lagrangian plane"),
    (2, 192, "fixed surface of an anti-symplectic involution"),
]:
    d, (ch2, ch3, ch4) = lagrangian_data(sp, q, chi_z)
    print(f"(lam,lam) = {q:3d}, chi(Z) = {chi_z:3d}: c = {fmt_q(d.c):5s}"
          f" t = {fmt_q(d.t):4s} chi(O_Z) = {fmt_q(d.chiOZ):3s}  [{label}]")

# chi(Z)/3 must be a perfect square; otherwise the data is inadmissible.
try:
    lagrangian_data(sp, 6, 28)
except InadmissibleError as exc:
    print("chi(Z) = 28 rejected:", exc)

# Hodge numbers follow from chi(Z) and h^{1,0} when the square is positive.
h20, h11, flagged = hodge_relations(27, 5)
print(f"\nchi(Z) = 27, h10 = 5  ->  h20 = {h20}, h11 = {h11}")

# ---------------------------------------------------------------------------
# The admissibility search: which (square, c, t) pass all integral gates?
# Two large admissible cases appear alongside the worked geometric ones.

print("\nadmissible triples with (lam,lam) <= 60, c <= 700:")
seen = set()
for div in (1, 2):
    for h in arithmetic_search(60, 700, div):
        key = (h.lambda_sq, h.c, h.t)
        if key in seen:
            continue
        seen.add(key)
        print(f"  (lam,lam) = {h.lambda_sq:2d}  c = {fmt_q(h.c):7s}"
              f" t = {fmt_q(h.t):5s} chi(Z) = {h.chiZ}")

# ---------------------------------------------------------------------------
# Integral lagrangian classes: the primitive class proportional to
# 5 lam^2 - (lam,lam)/6 c2, with the divisibility-dependent denominator.

eta26 = sp.h2.vector((2, 2) + (0,) * 20 + (1,))  # square 6, divisibility 2
cls, den = integral_lagrangian_class(sp, eta26)
print(f"\nsquare 6, div 2: primitive class = (5 lam^2 - c2) / {fmt_q(den)}")

# ---------------------------------------------------------------------------
# When does the rank-4 transform deform to an untwisted bundle on another
# fourfold?  The congruence (beta,beta)/2 = (alpha,alpha)/2 mod 8 decides.

verdicts = untwisted_lift_check(4, 1, 2, 6, [(2, 22, 1), (2, 8, 1)])
print("rank 4, (alpha,alpha) = 6: candidates (beta,beta) = 22, 8 ->",
      verdicts)

# ---------------------------------------------------------------------------
# Ranks whose second Segre class is an integral lagrangian class.

print("Segre-lagrangian ranks up to r0 = 25:", segre_enumerate(sp, 25))
