import random

import pytest

from kmhecke.blalgebra import bl_algebra
from kmhecke.completed import (BOUNDED, EXACT, SummableFamily, assemble_Tw_theta, completed_mul,
                               decompose_Tw_theta, from_finite, random_finite, t_expand_window,
                               t_orbit_series, verify_central_window, z_orbit_series)
from kmhecke.errors import NotDominant
from kmhecke.weyl import weyl_group


@pytest.mark.parametrize("seed", range(4))
def test_completed_product_of_finite_elements(affine_alg, seed):
    rng = random.Random(seed)
    a, b = random_finite(affine_alg, rng), random_finite(affine_alg, rng)
    prod = completed_mul(from_finite(a), from_finite(b))
    direct = a * b
    for nu in direct.supp_Z() | a.supp_Z() | b.supp_Z():
        h, exact = prod.coeff_flagged(nu)
        assert exact
        assert h == direct.terms.get(nu, {})


def test_z_orbit_series(affine):
    z = z_orbit_series(affine, (0, 0, 1), 2)
    W = weyl_group(affine)
    orbit = W.orbit_upto((0, 0, 1), 4)
    for p in orbit:
        assert z.coeff(p) == 2
    assert not z.coeff_raw((0, 0, 2))
    pts, flag = z.class_support((0, 0, 1), 4)
    assert pts == frozenset(orbit) and flag == EXACT
    with pytest.raises(NotDominant):
        z_orbit_series(affine, (-1, 0, 1))


def test_linear_structure(affine):
    z = z_orbit_series(affine, (0, 0, 1))
    y = z_orbit_series(affine, (1, 1, 1))
    s = SummableFamily([z, y, z]).sum()
    assert s.coeff((0, 0, 1)) == 2
    assert s.coeff((1, 1, 1)) == 1
    assert (s - z - z).coeff((0, 0, 1)) == 0
    assert s.certificate.maxima == {(1, 1, 1)}


def test_central_window_finite(finite):
    rep = verify_central_window(finite, (1,), L=4, samples=3)
    assert rep["passed"]


def test_central_window_affine_small(affine):
    rep = verify_central_window(affine, (0, 0, 1), L=4, samples=2, depth=1, window_L=1)
    assert rep["passed"]


def test_non_central_element_detected(affine_alg):
    # Z^d alone is not central: it fails to commute with T_0
    alg = affine_alg
    z = from_finite(alg.Z([0, 0, 1]))
    t = from_finite(alg.T([0]))
    lhs, rhs = completed_mul(z, t), completed_mul(t, z)
    assert lhs.coeff((0, 0, 1)) != rhs.coeff((0, 0, 1))


def test_t_orbit_series_flags(affine):
    t = t_orbit_series(affine, (1, 1, 0), L=3)
    # (1, 1, 0) is W-fixed, so the orbit is exhausted
    assert t.coeff_flagged((1, 1, 0))[1]
    t2 = t_orbit_series(affine, (0, 0, 1), L=3)
    assert not t2.coeff_flagged((0, 0, 1))[1]
    assert t2.class_support((0, 0, 1), 2)[1] == BOUNDED


def test_t_expand_window_matches_finite_expansion(affine_alg):
    a = random_finite(affine_alg, random.Random(5), 2, 1, 1)
    exp = affine_alg.expand_in_T(a)
    got, _ = t_expand_window(from_finite(a), list(exp), 4)
    assert got == exp


def test_theta_decomposition(affine_alg):
    a = random_finite(affine_alg, random.Random(2))
    theta = decompose_Tw_theta(from_finite(a), a.supp_Z())
    assert assemble_Tw_theta(affine_alg, theta) == a
