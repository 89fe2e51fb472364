"""The harmonic symmetric calculus and the LLV lines it produces.

Run with:  python3 demos/02_harmonic_and_lines.py
"""

from fractions import Fraction as Q

from llvlat import (
    LLVVector,
    ell_lagrangian,
    ell_skyscraper,
    ell_structure_sheaf,
    make_space,
)
from llvlat.harmonic import (
    GeneratorContext,
    ReducedSymElement,
    delta_apply,
    project_harmonic,
    recover_line,
)
from llvlat.lines import ell_structure_sheaf_roundtrip
from llvlat.rational import fmt_q

sp = make_space("HilbK3", 2)

# ---------------------------------------------------------------------------
# The contraction operator Delta and the invariant class qt with
# Delta(qt) = 1.  Elements live in a reduced algebra over a finite list of
# generator vectors, with qt carried formally.

ctx = GeneratorContext(sp, (sp.alpha(), sp.beta()))
qt = ReducedSymElement.qtilde(ctx)
print("Delta(qt) =", fmt_q(delta_apply(qt).coeff(())))

ab = ReducedSymElement.monomial(ctx, (0, 1))  # alpha * beta
print("Delta(alpha beta) =", fmt_q(delta_apply(ab).coeff(())))

# Degree-2 projection onto ker(Delta): gamma^2 - (gamma, gamma) qt.
gamma = ReducedSymElement.monomial(ctx, (0,), 2) \
    + ReducedSymElement.monomial(ctx, (1,), Q(5, 2))
proj = project_harmonic(gamma * gamma)
print("Pi((2 alpha + 5/2 beta)^2) keys:", sorted(proj.terms.items()))

# ---------------------------------------------------------------------------
# Structure sheaf lines.  The closed formula gives 4 alpha + (n+3) beta on
# Hilbert schemes and 4 alpha + (n+1) beta on generalized Kummer type, and
# the harmonic round trip (project the n-th power, then invert) recovers
# the same line.

for n in (2, 3, 4):
    spn = make_space("HilbK3", n)
    line, t, s_int = ell_structure_sheaf(spn)
    rt = ell_structure_sheaf_roundtrip(spn)
    print(f"HilbK3({n}): ell(O) r={line.generator.r} s={line.generator.s}"
          f"  t^{n} = {fmt_q(t**n)} = n! * {fmt_q(s_int)}"
          f"  roundtrip ok: {rt.same_line(line)}")

kum = make_space("Kum", 2)
line, t, s_int = ell_structure_sheaf(kum)
print(f"Kum(2):     ell(O) r={line.generator.r} s={line.generator.s}")

# ---------------------------------------------------------------------------
# Sky-scraper sheaves sit on the beta line; lagrangian structure sheaves on
# lam - t (lam, lam)/2 beta.

print("\nskyscraper line:", ell_skyscraper(sp).generator.r,
      ell_skyscraper(sp).generator.s)

lam6 = sp.h2.vector((1, 3) + (0,) * 21)  # square 6
main, variant = ell_lagrangian(sp, lam6, 1)
print("lagrangian (square 6, t = 1):      s =", main.generator.s)
lam_m10 = sp.h2.vector((1, -5) + (0,) * 21)  # square -10: a lagrangian plane
main, variant = ell_lagrangian(sp, lam_m10, Q(3, 5))
print("lagrangian plane (square -10):     s =", main.generator.s)

# ---------------------------------------------------------------------------
# recover_line inverts the projected-power map for rank nonzero families.

ctx3 = GeneratorContext(make_space("HilbK3", 3),
                        (make_space("HilbK3", 3).alpha(),
                         make_space("HilbK3", 3).beta()))
lin = ReducedSymElement.monomial(ctx3, (0,)) \
    + ReducedSymElement.monomial(ctx3, (1,), Q(3, 2))
h = Q(1, 6) * project_harmonic(lin.power(3))
gamma = recover_line(h)
print("\nrecovered from Pi((alpha + 3/2 beta)^3):",
      gamma.r, gamma.s, " -> line of 4 alpha + 6 beta")
