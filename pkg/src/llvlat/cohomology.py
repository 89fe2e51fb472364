"""Even cohomology ring of a hyper-Kahler fourfold of K3[2] type.

The monodromy-invariant presentation keeps five graded pieces:

  a0          H^0, a scalar
  a2          H^2, a vector over the 23-dimensional BBF lattice
  a4          H^4 = Sym^2 H^2 (both have dimension 276), a symmetric matrix
  a6          H^6 = H^2 by duality, stored as the BBF-dual functional: the
              class with integral against y equal to (w, y)
  a8          a multiple of the point class

The second Chern class of the tangent bundle is not a formal symbol: it is
the explicit invariant tensor (6/5) times the inverse Gram matrix, which
makes every entry of the standard multiplication table a theorem of the
representation.  Degree-6 products reduce through
x1 x2 x3 = (x1,x2) x3 + (x1,x3) x2 + (x2,x3) x1 (as dual functionals), and
top products integrate through the quadruple formula.  Products that would
land above degree 8 raise instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _linalg
from .errors import DomainError
from .harmonic import (
    GeneratorContext,
    ReducedSymElement,
    full_context,
)
from .lattice import LLVSpace, LLVVector, make_space

Q = Fraction


def k32_space() -> LLVSpace:
    return make_space("HilbK3", 2)


def _require_k32(space: LLVSpace):
    if space.dtype != "Hilb" or space.n != 2:
        raise DomainError("the cohomology ring is implemented for K3[2] type "
                          "(higher n routes through the symmetric calculus)")


def _sym_outer(x, y):
    """Symmetric tensor (x y^T + y x^T) / 2 representing the product x.y."""
    k = len(x)
    return tuple(
        tuple((x[i] * y[j] + y[i] * x[j]) / 2 for j in range(k)) for i in range(k)
    )


@dataclass(frozen=True)
class CohClass:
    space: LLVSpace
    a0: Fraction
    a2: tuple[Fraction, ...]
    a4: tuple[tuple[Fraction, ...], ...]
    a6: tuple[Fraction, ...]
    a8: Fraction

    def pieces(self):
        return (self.a0, self.a2, self.a4, self.a6, self.a8)

    def is_zero_piece(self, d: int) -> bool:
        p = self.pieces()[d // 2]
        if d in (0, 8):
            return p == 0
        if d in (2, 6):
            return all(c == 0 for c in p)
        return all(c == 0 for row in p for c in row)

    def __add__(self, other: "CohClass") -> "CohClass":
        _same(self, other)
        return CohClass(
            self.space,
            self.a0 + other.a0,
            tuple(a + b for a, b in zip(self.a2, other.a2)),
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.a4, other.a4)
            ),
            tuple(a + b for a, b in zip(self.a6, other.a6)),
            self.a8 + other.a8,
        )

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-1) * other

    def __rmul__(self, c) -> "CohClass":
        c = Fraction(c)
        return CohClass(
            self.space,
            c * self.a0,
            tuple(c * x for x in self.a2),
            tuple(tuple(c * x for x in row) for row in self.a4),
            tuple(c * x for x in self.a6),
            c * self.a8,
        )

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return cup(self, other)
        return NotImplemented

    def to_dict(self) -> dict:
        from .rational import fmt_q

        k = len(self.a2)
        upper = [fmt_q(self.a4[i][j]) for i in range(k) for j in range(i, k)]
        return {
            "a0": fmt_q(self.a0),
            "a2": [fmt_q(x) for x in self.a2],
            "a4_upper": upper,
            "a6": [fmt_q(x) for x in self.a6],
            "a8": fmt_q(self.a8),
        }


def _same(x: CohClass, y: CohClass):
    if x.space != y.space:
        raise DomainError("classes on different spaces")


def zero_class(space: LLVSpace) -> CohClass:
    _require_k32(space)
    k = space.h2.rank
    z = Fraction(0)
    return CohClass(space, z, (z,) * k, tuple((z,) * k for _ in range(k)), (z,) * k, z)


def scalar_class(space: LLVSpace, c) -> CohClass:
    base = zero_class(space)
    return CohClass(space, Fraction(c), base.a2, base.a4, base.a6, base.a8)


def point_class(space: LLVSpace, c=1) -> CohClass:
    base = zero_class(space)
    return CohClass(space, base.a0, base.a2, base.a4, base.a6, Fraction(c))


def h2_class(space: LLVSpace, v) -> CohClass:
    base = zero_class(space)
    return CohClass(space, base.a0, space.h2.vector(v), base.a4, base.a6, base.a8)


def sym2_class(space: LLVSpace, m) -> CohClass:
    base = zero_class(space)
    a4 = tuple(tuple(Fraction(x) for x in row) for row in m)
    k = space.h2.rank
    if len(a4) != k or any(len(r) != k for r in a4):
        raise DomainError("Sym^2 matrix has wrong shape")
    for i in range(k):
        for j in range(k):
            if a4[i][j] != a4[j][i]:
                raise DomainError("Sym^2 matrix must be symmetric")
    return CohClass(space, base.a0, base.a2, a4, base.a6, base.a8)


def deg6_class(space: LLVSpace, w) -> CohClass:
    base = zero_class(space)
    return CohClass(space, base.a0, base.a2, base.a4, space.h2.vector(w), base.a8)


def deg6_from_triple(space: LLVSpace, x1, x2, x3) -> CohClass:
    """The product x1 x2 x3 in its dual-functional representation."""
    p = space.h2.pair
    x1, x2, x3 = (space.h2.vector(v) for v in (x1, x2, x3))
    w = tuple(
        p(x1, x2) * c3 + p(x1, x3) * c2 + p(x2, x3) * c1
        for c1, c2, c3 in zip(x1, x2, x3)
    )
    return deg6_class(space, w)


@lru_cache(maxsize=8)
def _ginv(space: LLVSpace):
    return _linalg.inverse(_linalg.mat(space.h2.gram))


def c2_class(space: LLVSpace) -> CohClass:
    """c2 of the tangent bundle as an explicit invariant Sym^2 tensor."""
    _require_k32(space)
    return sym2_class(space, _linalg.mat_scale(Fraction(6, 5), _ginv(space)))


def b_invariant_class(space: LLVSpace) -> CohClass:
    """The normalized invariant b with integral of b^2 equal to 25/23."""
    _require_k32(space)
    return sym2_class(space, _linalg.mat_scale(Fraction(1, 23), _ginv(space)))


def _contract_full(space, a4):
    """Full Gram contraction c(A) = trace(A G)."""
    g = space.h2.gram
    k = space.h2.rank
    return sum(a4[i][j] * g[j][i] for i in range(k) for j in range(k))


def _sharp(space, a4, x):
    """A-sharp of x: the vector A G x."""
    gx = _linalg.mat_vec(_linalg.mat(space.h2.gram), x)
    return _linalg.mat_vec(a4, gx)


def _sym2_inner(space, a4, b4):
    """Induced pairing on Sym^2: trace(A G B G)."""
    g = _linalg.mat(space.h2.gram)
    m = _linalg.mat_mul(_linalg.mat_mul(a4, g), _linalg.mat_mul(b4, g))
    return sum(m[i][i] for i in range(len(m)))


def cup(x: CohClass, y: CohClass) -> CohClass:
    _same(x, y)
    space = x.space
    out = zero_class(space)
    for dx in (0, 2, 4, 6, 8):
        if x.is_zero_piece(dx):
            continue
        for dy in (0, 2, 4, 6, 8):
            if y.is_zero_piece(dy):
                continue
            if dx + dy > 8:
                raise DomainError(
                    f"product of degrees {dx} and {dy} overflows degree 8"
                )
            out = out + _cup_pieces(x, dx, y, dy)
    return out


def _cup_pieces(x: CohClass, dx: int, y: CohClass, dy: int) -> CohClass:
    space = x.space
    if dx > dy:
        return _cup_pieces(y, dy, x, dx)
    if dx == 0:
        return x.a0 * _piece_class(y, dy)
    if dx == 2 and dy == 2:
        return sym2_class(space, _sym_outer(x.a2, y.a2))
    if dx == 2 and dy == 4:
        c = _contract_full(space, y.a4)
        sharp = _sharp(space, y.a4, x.a2)
        w = tuple(c * a + 2 * b for a, b in zip(x.a2, sharp))
        return deg6_class(space, w)
    if dx == 2 and dy == 6:
        return point_class(space, space.h2.pair(x.a2, y.a6))
    if dx == 4 and dy == 4:
        val = _contract_full(space, x.a4) * _contract_full(space, y.a4) \
            + 2 * _sym2_inner(space, x.a4, y.a4)
        return point_class(space, val)
    raise DomainError(f"product of degrees {dx} and {dy} overflows degree 8")


def _piece_class(x: CohClass, d: int) -> CohClass:
    space = x.space
    if d == 0:
        return scalar_class(space, x.a0)
    if d == 2:
        return h2_class(space, x.a2)
    if d == 4:
        return sym2_class(space, x.a4)
    if d == 6:
        return deg6_class(space, x.a6)
    return point_class(space, x.a8)


def cup_manifold(x: CohClass, y: CohClass) -> CohClass:
    """Product in the cohomology of the manifold itself.

    Pieces whose total degree exceeds the real dimension 8 are genuinely
    zero there, so they are dropped; use this for Chern-character algebra
    (Mukai vectors, Euler characteristics).  The strict ``cup`` treats such
    pieces as misuse instead.
    """
    _same(x, y)
    space = x.space
    out = zero_class(space)
    for dx in (0, 2, 4, 6, 8):
        if x.is_zero_piece(dx):
            continue
        for dy in (0, 2, 4, 6, 8):
            if y.is_zero_piece(dy) or dx + dy > 8:
                continue
            out = out + _cup_pieces(x, dx, y, dy)
    return out


def integrate(x: CohClass) -> Fraction:
    return x.a8


@lru_cache(maxsize=8)
def todd_data(space: LLVSpace) -> tuple[CohClass, CohClass, CohClass]:
    """(td, sqrt(td), 1/sqrt(td)) of the tangent bundle."""
    _require_k32(space)
    c2 = c2_class(space)
    sqrt_td = scalar_class(space, 1) + Fraction(1, 24) * c2 \
        + point_class(space, Fraction(25, 32))
    inv_sqrt = scalar_class(space, 1) - Fraction(1, 24) * c2 \
        + point_class(space, Fraction(21, 32))
    td = cup_manifold(sqrt_td, sqrt_td)
    if cup_manifold(sqrt_td, inv_sqrt) != scalar_class(space, 1):
        raise DomainError("square root of Todd class failed its self check")
    return td, sqrt_td, inv_sqrt


def mukai_vector(space: LLVSpace, rank, c1, ch2, ch3, ch4) -> CohClass:
    """ch * sqrt(td) for a class given by its Chern character pieces."""
    ch = scalar_class(space, rank) + h2_class(space, c1) + ch2 + ch3 \
        + point_class(space, ch4)
    _, sqrt_td, _ = todd_data(space)
    return cup_manifold(ch, sqrt_td)


def chi(space: LLVSpace, ch: CohClass) -> Fraction:
    """Euler characteristic: integral of ch * td."""
    td, _, _ = todd_data(space)
    return integrate(cup_manifold(ch, td))


def psi(x: CohClass, ctx: GeneratorContext | None = None) -> ReducedSymElement:
    """Embedding of the ring into Sym^2 of the extended space.

    1 -> alpha^2/2, H^2 classes -> x alpha, Sym^2 tensors -> themselves plus
    (full contraction) alpha beta, degree-6 duals -> w beta, points -> beta^2.
    Output is expressed over the standard full-basis generator context
    (alpha = index 0, h2 basis = 1..rank, beta = rank + 1), with no formal
    qt component.
    """
    space = x.space
    if ctx is None:
        ctx = full_context(space)
    k = space.h2.rank
    ia, ib = 0, k + 1
    out = ReducedSymElement.zero(ctx)
    if x.a0:
        out = out + ReducedSymElement.monomial(ctx, (ia, ia), x.a0 / 2)
    for i, c in enumerate(x.a2):
        if c:
            out = out + ReducedSymElement.monomial(ctx, (ia, 1 + i), c)
    if not x.is_zero_piece(4):
        for i in range(k):
            for j in range(i, k):
                c = x.a4[i][j] * (1 if i == j else 2)
                if c:
                    out = out + ReducedSymElement.monomial(ctx, (1 + i, 1 + j), c)
        out = out + ReducedSymElement.monomial(
            ctx, (ia, ib), _contract_full(space, x.a4)
        )
    for i, c in enumerate(x.a6):
        if c:
            out = out + ReducedSymElement.monomial(ctx, (1 + i, ib), c)
    if x.a8:
        out = out + ReducedSymElement.monomial(ctx, (ib, ib), x.a8)
    return out


def llv_vector_to_reduced(ctx: GeneratorContext, x: LLVVector) -> ReducedSymElement:
    """Degree-1 element of the full-basis context with the given coordinates."""
    out = ReducedSymElement.zero(ctx)
    for i, c in enumerate(x.coords()):
        if c:
            out = out + ReducedSymElement.monomial(ctx, (i,), c)
    return out
