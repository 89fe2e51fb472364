"""The even cohomology ring of a K3[2]-type fourfold and the Chern data of
the two rank-positive modular families.

Run with:  python3 demos/03_k32_ring_and_chern_data.py
"""

from llvlat import (
    NotRealizableError,
    chern_isotropic_k32,
    chern_phiO,
    ell_phiO,
    kappa_for_phiO,
    kappa_quadric,
    kappa_tensor_check,
    make_space,
)
from llvlat import cohomology as coh
from llvlat.rational import fmt_q

sp = make_space("HilbK3", 2)

# ---------------------------------------------------------------------------
# The ring in its invariant presentation: c2 of the tangent bundle is an
# explicit symmetric tensor, so the classical intersection numbers are
# computed, not postulated.

c2 = coh.c2_class(sp)
print("int c2^2        =", fmt_q(coh.integrate(coh.cup(c2, c2))))
lam = coh.h2_class(sp, (1, 3) + (0,) * 21)  # square 6
lam2 = coh.cup(lam, lam)
print("int c2 lam^2    =", fmt_q(coh.integrate(coh.cup(c2, lam2))))
print("int lam^4       =", fmt_q(coh.integrate(coh.cup(lam2, lam2))))
from fractions import Fraction
print("lam^3 = (q/10) c2 lam:",
      coh.cup(lam2, lam) == Fraction(6, 10) * coh.cup(c2, lam))

td, sqrt_td, inv_sqrt = coh.todd_data(sp)
print("sqrt(td) = 1 + c2/24 + 25/32 [pt]; integral =",
      fmt_q(coh.integrate(sqrt_td)))
print("int td =", fmt_q(coh.integrate(td)), " (= chi(O))")

# ---------------------------------------------------------------------------
# Transforms of structure sheaves: rank r0^2, square -10 class of
# divisibility 2, congruence gates on (eta, eta), and the Euler
# characteristic table reproducing the classical fourfold values.

for (r0, eta) in [(1, (0,) * 23),
                  (2, (2, 2) + (0,) * 20 + (1,)),
                  (2, (2, 6) + (0,) * 20 + (1,))]:
    h = tuple((r0 if r0 % 2 else r0 // 2) * c for c in eta)
    line, gamma, rep = ell_phiO(sp, r0, h)
    *_, chi = chern_phiO(sp, r0, h)
    print(f"r0 = {r0}, (eta,eta) = {rep['eta_sq']}: rank {rep['rank']},"
          f" chi = {chi}, gamma^2 = {sp.pair(gamma, gamma)},"
          f" div = {rep['lambda_divisibility']}")

# The congruence gate rejects squares in the wrong class.
try:
    ell_phiO(sp, 2, (2, 4) + (0,) * 21)
except NotRealizableError as exc:
    print("rejected:", exc.condition)

# ---------------------------------------------------------------------------
# Transforms of sky-scraper sheaves: isotropic class, rank 2 r0^2, and a
# perfect-square Euler characteristic.

h = tuple(-c for c in sp.delta())
*_, chi = chern_isotropic_k32(sp, 1, h)
print("\nisotropic family with (h, h) = -2: chi =", chi)
h6 = (2, 2) + (0,) * 20 + (1,)
*_, chi = chern_isotropic_k32(sp, 1, h6)
print("isotropic family with (h, h) = 6:  chi =", chi)

# ---------------------------------------------------------------------------
# The rank-normalized class kappa = x + y c2 + z [pt] of a family that
# deforms in codimension one satisfies 450 y^2 + 3xy - xz = 0; tensor
# products of two such families stay deformable only when one factor has
# the trivial kappa.

for r0 in (1, 2, 3):
    x, y, z = kappa_for_phiO(r0)
    print(f"quadric at the rank {r0 ** 2} kappa triple:",
          fmt_q(kappa_quadric(x, y, z)))
print("O x F deforms:", kappa_tensor_check((1, 0, 0), kappa_for_phiO(2)))
print("F x F' deforms:", kappa_tensor_check(kappa_for_phiO(2),
                                            kappa_for_phiO(3)))
