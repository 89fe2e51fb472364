"""Tour of the lattice layer: presets, pairings, divisibility, the
extended LLV space and its integral lattice.

Run with:  python3 demos/01_lattices_and_llv_space.py
"""

from fractions import Fraction as Q

from llvlat import (
    LLVVector,
    div_in_lambda,
    in_integral_llv,
    make_lattice,
    make_space,
    orbit_invariants_equal,
)

# ---------------------------------------------------------------------------
# Preset lattices.  The hyperbolic plane U, the negative definite E8, the
# K3 lattice, and the H^2 lattices of the two standard families of
# hyper-Kahler manifolds.

for name, lat in [
    ("U", make_lattice("U")),
    ("E8(-1)", make_lattice("E8neg")),
    ("K3", make_lattice("K3")),
    ("HilbK3(2)", make_lattice("HilbK3", 2)),
    ("Kum(2)", make_lattice("Kum", 2)),
]:
    print(f"{name:12s} rank {lat.rank:2d}  signature {lat.signature()}")

# The exceptional class delta is always the last basis vector.  On the
# Hilbert square of a K3 it has square -2 and divisibility 2; on the n-th
# Hilbert scheme, square 2 - 2n and divisibility 2n - 2.
for n in (2, 3, 5):
    sp = make_space("HilbK3", n)
    d = sp.delta()
    print(f"n = {n}: (delta, delta) = {sp.h2.pair(d, d)},"
          f" div(delta) = {sp.h2.divisibility(d)}")

# ---------------------------------------------------------------------------
# The extended space adjoins two isotropic classes alpha, beta with
# (alpha, beta) = -1.  Vectors are (r, v, s) triples.

sp = make_space("HilbK3", 2)
print("\n(alpha, beta) =", sp.pair(sp.alpha(), sp.beta()))
print("signature of the extended space:", sp.signature())

# The Fujiki relation: the top self-intersection of a degree-2 class is a
# universal multiple of a power of its BBF square.
lam = (1, 3) + (0,) * 21  # a class of square 6
print("integral of lam^4 for (lam, lam) = 6:", sp.fujiki_integral(lam))
kum = make_space("Kum", 2)
print("Kummer fourfold, (lam, lam) = 2:",
      kum.fujiki_integral((1, 1, 0, 0, 0, 0, 0)))

# ---------------------------------------------------------------------------
# The integral LLV lattice: the B_{-delta/2} translate of the naive
# integral lattice.  It is derived-monodromy invariant, which is what makes
# membership and divisibility in it meaningful invariants of sheaves.

gamma0 = LLVVector.make(2, (0,) * 23, Q(5, 2))
print("\ngamma0 = 2 alpha + 5/2 beta:")
print("  square        ", sp.pair(gamma0, gamma0))
print("  member        ", in_integral_llv(sp, gamma0))
print("  divisibility  ", div_in_lambda(sp, gamma0))

print("beta is a member of divisibility", div_in_lambda(sp, sp.beta()))
print("alpha alone is a member:", in_integral_llv(sp, sp.alpha()))

# ---------------------------------------------------------------------------
# Monodromy orbits of primitive H^2 classes with divisibility 1 or 2 are
# classified by (square, divisibility).

lat = sp.h2
e1f1 = [1, 1] + [0] * 21
e2f2 = [0, 0, 1, 1] + [0] * 19
print("\ne1+f1 ~ e2+f2 :", orbit_invariants_equal(lat, e1f1, e2f2))
delta = [0] * 22 + [1]
e1mf1 = [1, -1] + [0] * 21
print("delta ~ e1-f1 :", orbit_invariants_equal(lat, delta, e1mf1),
      " (same square, different divisibility)")
