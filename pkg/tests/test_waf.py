import itertools
import random

import pytest

from kmhecke.errors import NotDominant
from kmhecke.rootdata import bundled_datum, vadd
from kmhecke.waf import (Finite, Orbit, Ray, UnionFamily, WafCertificate, certificate_sum,
                         classify, counterexample_report, looijenga_coeff, maxima, monomial,
                         orbit_sum)
from kmhecke.weyl import weyl_group


@pytest.mark.parametrize("name", ["finite_a1", "affine_a1", "hyperbolic_2_3"])
def test_singletons_waf_iff_in_tits_cone(name):
    d = bundled_datum(name)
    W = weyl_group(d)
    for p in itertools.product(range(-3, 4), repeat=d.n):
        c = classify(d, Finite(frozenset({p})))
        assert c.af is True
        assert (c.waf == "yes") == W.in_tits_cone(p).inside


def test_affine_ray_is_af_not_waf(affine):
    c = classify(affine, Ray((0, 0, 1), 0))
    assert (c.af, c.waf) == (True, "no")
    heights = [int(r["ht"]) for r in c.witness if "ht" in r]
    assert heights == sorted(heights) and heights[-1] > heights[0]


def test_hyperbolic_ray_leaves_tits_cone(hyperbolic):
    c = classify(hyperbolic, Ray((-1, -1), 0))
    assert c.waf == "no"
    assert any(r["tag"] == "outside" for r in c.witness)


def test_orbit_and_union(affine):
    assert classify(affine, Orbit((0, 0, 1))).certificate.maxima == {(0, 0, 1)}
    with pytest.raises(NotDominant):
        classify(affine, Orbit((-1, 0, 1)))
    u = classify(affine, UnionFamily((Orbit((0, 0, 1)), Finite(frozenset({(1, 1, 1)})))))
    assert u.waf == "yes" and u.certificate.maxima == {(1, 1, 1)}
    bad = classify(affine, UnionFamily((Orbit((0, 0, 1)), Ray((0, 0, 1), 1))))
    assert bad.waf == "no"


def test_random_hyperbolic_families_are_waf(hyperbolic):
    rng = random.Random(1)
    W = weyl_group(hyperbolic)
    for _ in range(30):
        pts = set()
        while len(pts) < 5:
            p = (rng.randint(-9, 9), rng.randint(-9, 9))
            if W.in_tits_cone(p).inside:
                pts.add(p)
        c = classify(hyperbolic, Finite(frozenset(pts)))
        assert c.waf == "yes"
        assert all(c.certificate.covers(hyperbolic, p) for p in pts)


def test_certificate_sum_bounds_sums(affine):
    W = weyl_group(affine)
    c1 = WafCertificate(frozenset({(0, 0, 1)}))
    c2 = WafCertificate(frozenset({(1, 1, 1)}))
    s = certificate_sum(affine, c1, c2)
    for a in W.orbit_upto((0, 0, 1), 4):
        for b in W.orbit_upto((1, 1, 1), 4):
            assert s.covers(affine, vadd(a, b))


def test_maxima(affine):
    assert maxima(affine, [(0, 0, 1), (1, 1, 1), (-1, 0, 1)]) == {(1, 1, 1)}


def test_looijenga_products(finite):
    x = orbit_sum(finite, (1,))
    # (Z + Z^-1)^2 = Z^2 + 2 + Z^-2
    assert [looijenga_coeff(x, x, (k,)) for k in (-2, -1, 0, 1, 2)] == [1, 0, 2, 0, 1]
    one = monomial(finite, (0,))
    assert looijenga_coeff(x, one, (1,)) == 1


def test_counterexample_report(affine):
    rep = counterexample_report(affine, (0, 0, 1), 0, 4)
    assert all(row["holds"] for row in rep["u_bounded"])
    hts = [int(r["ht"]) for r in rep["increasing_maxima"]]
    assert len(hts) >= 3 and hts == sorted(hts)
