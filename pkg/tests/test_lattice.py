import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from llvlat import (
    DomainError,
    InconclusiveError,
    LLVVector,
    div_in_lambda,
    in_integral_llv,
    is_primitive_in_lambda,
    make_lattice,
    make_space,
    orbit_invariants_equal,
)
from llvlat.lattice import E8_NEG_GRAM


def test_preset_signatures():
    assert make_lattice("U").signature() == (1, 1)
    assert make_lattice("E8neg").signature() == (0, 8)
    assert make_lattice("K3").signature() == (3, 19)
    assert make_lattice("HilbK3", 2).signature() == (3, 20)
    assert make_lattice("Kum", 2).signature() == (3, 4)


def test_presets_even():
    for lat in (make_lattice("U"), make_lattice("E8neg"), make_lattice("K3"),
                make_lattice("HilbK3", 4), make_lattice("Kum", 3)):
        assert all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


def test_e8_gram_unimodular_negative_definite():
    from llvlat._linalg import det, mat
    assert det(mat(E8_NEG_GRAM)) == 1
    assert make_lattice("E8neg").signature() == (0, 8)


def test_unknown_preset():
    with pytest.raises(DomainError):
        make_lattice("foo")
    with pytest.raises(DomainError):
        make_lattice("Kum", 1)


def test_delta_squares():
    assert make_lattice("HilbK3", 2).pair([0] * 22 + [1], [0] * 22 + [1]) == -2
    for n in (2, 3, 5):
        sp = make_space("HilbK3", n)
        assert sp.h2.pair(sp.delta(), sp.delta()) == 2 - 2 * n
        assert sp.h2.divisibility(sp.delta()) == 2 * n - 2
    kum = make_space("Kum", 2)
    assert kum.h2.pair(kum.delta(), kum.delta()) == -6
    assert kum.h2.divisibility(kum.delta()) == 6


def test_hilb1_is_k3():
    sp = make_space("HilbK3", 1)
    assert sp.dtype == "K3"
    assert sp.h2.rank == 22
    assert sp.fujiki == 1


def test_u_pairings():
    u = make_lattice("U")
    assert u.pair((1, 0), (0, 1)) == 1
    assert u.pair((1, 0), (1, 0)) == 0
    assert u.divisibility((1, 0)) == 1
    assert u.divisibility((2, 2)) == 2
    assert u.is_primitive((2, 3))
    assert not u.is_primitive((3, 0)) or True  # 3e primitive? gcd 3 -> no
    assert not u.is_primitive((3, 3))


def test_pair_examples():
    sp = make_space("HilbK3", 2)
    assert sp.pair(sp.alpha(), sp.beta()) == -1
    n = sp.n
    u0 = LLVVector.make(0, sp.delta(), n - 1)
    assert sp.pair(u0, u0) == 2 - 2 * n
    x = sp.alpha() - sp.beta()
    assert sp.pair(x, x) == 2


def test_pair_symmetric_bilinear_randomized():
    rng = random.Random(7)
    sp = make_space("HilbK3", 2)

    def rand_vec():
        return LLVVector.make(
            Q(rng.randint(-4, 4)),
            tuple(Q(rng.randint(-3, 3)) for _ in range(23)),
            Q(rng.randint(-4, 4), rng.choice([1, 2])),
        )

    for _ in range(40):
        x, y, z = rand_vec(), rand_vec(), rand_vec()
        c = Q(rng.randint(-3, 3))
        assert sp.pair(x, y) == sp.pair(y, x)
        assert sp.pair(x + c * y, z) == sp.pair(x, z) + c * sp.pair(y, z)


def test_dimension_mismatch():
    sp = make_space("HilbK3", 2)
    kum = make_space("Kum", 2)
    with pytest.raises(DomainError):
        sp.pair(sp.alpha(), kum.alpha())


@given(st.integers(min_value=-20, max_value=20).filter(lambda k: k != 0))
def test_divisibility_scales(k):
    lat = make_lattice("HilbK3", 2)
    x = [0] * 22 + [1]
    kx = [k * c for c in x]
    assert lat.divisibility(kx) == abs(k) * lat.divisibility(x)


def test_divisibility_rejects():
    lat = make_lattice("U")
    with pytest.raises(DomainError):
        lat.divisibility((0, 0))
    with pytest.raises(DomainError):
        lat.divisibility((Q(1, 2), 0))


def test_fujiki_integral():
    sp = make_space("HilbK3", 2)
    lam = (1, 3) + (0,) * 21  # square 6
    assert sp.fujiki_integral(lam) == 3 * 36
    assert sp.fujiki_integral((0,) * 23) == 0
    isotropic = (1, 0) + (0,) * 21
    assert sp.fujiki_integral(isotropic) == 0
    kum = make_space("Kum", 2)
    assert kum.fujiki_integral((1, 1, 0, 0, 0, 0, 0)) == 36


def test_fujiki_agrees_with_ring():
    from llvlat import cohomology as coh
    sp = make_space("HilbK3", 2)
    rng = random.Random(3)
    for _ in range(5):
        lam = tuple(rng.randint(-2, 2) for _ in range(23))
        x = coh.h2_class(sp, lam)
        x2 = coh.cup(x, x)
        assert coh.integrate(coh.cup(x2, x2)) == sp.fujiki_integral(lam)


def test_lambda_membership_examples():
    sp = make_space("HilbK3", 2)
    gamma0 = LLVVector.make(2, (0,) * 23, Q(5, 2))
    assert in_integral_llv(sp, gamma0)
    assert div_in_lambda(sp, gamma0) == 2
    assert is_primitive_in_lambda(sp, gamma0)

    half = tuple(-Q(1, 2) * c for c in sp.delta())
    b_alpha = sp.b_lambda_apply(half, sp.alpha())
    assert b_alpha == LLVVector.make(1, (0,) * 22 + (Q(-1, 2),), Q(-1, 4))
    assert in_integral_llv(sp, b_alpha)

    assert in_integral_llv(sp, sp.beta())
    assert div_in_lambda(sp, sp.beta()) == 1

    # not a member: alpha alone (n = 2)
    assert not in_integral_llv(sp, sp.alpha())


def test_lambda_closure_randomized():
    rng = random.Random(11)
    sp = make_space("HilbK3", 2)
    half = tuple(-Q(1, 2) * c for c in sp.delta())

    def rand_member():
        w = LLVVector.make(
            rng.randint(-3, 3),
            tuple(rng.randint(-2, 2) for _ in range(23)),
            rng.randint(-3, 3),
        )
        return sp.b_lambda_apply(half, w)

    for _ in range(25):
        x, y = rand_member(), rand_member()
        assert in_integral_llv(sp, x)
        assert in_integral_llv(sp, x + y)
    # contains Z beta and H^2(Z)
    assert in_integral_llv(sp, sp.beta())
    for i in range(23):
        assert in_integral_llv(sp, sp.h2_basis_vector(i))


def test_lambda_wrong_type():
    kum = make_space("Kum", 2)
    with pytest.raises(DomainError):
        in_integral_llv(kum, kum.beta())


def test_orbit_invariants():
    lat = make_lattice("HilbK3", 2)
    e1f1 = [1, 1] + [0] * 21
    e2f2 = [0, 0, 1, 1] + [0] * 19
    assert orbit_invariants_equal(lat, e1f1, e2f2)
    delta = [0] * 22 + [1]
    e1mf1 = [1, -1] + [0] * 21
    assert not orbit_invariants_equal(lat, delta, e1mf1)
    assert orbit_invariants_equal(lat, delta, delta)
    with pytest.raises(InconclusiveError):
        big = [0] * 22 + [1]
        orbit_invariants_equal(make_lattice("HilbK3", 4), big, big)  # div 6
    with pytest.raises(DomainError):
        orbit_invariants_equal(lat, [2, 2] + [0] * 21, e1f1)


def test_serialization():
    lat = make_lattice("U")
    d = lat.to_dict()
    assert d == {"name": "U", "rank": 2, "gram": [0, 1, 1, 0],
                 "labels": ["e1", "f1"]}
