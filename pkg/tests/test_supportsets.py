import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmhecke.blalgebra import bl_algebra
from kmhecke.rootdata import bundled_datum
from kmhecke.supportsets import (VARIANTS, depth, m_lambda, reverse_tilde_T, script_S,
                                 script_T_of_elt, script_T_step, script_T_word)
from kmhecke.weyl import weyl_group


def pts(*xs):
    return frozenset((x,) for x in xs)


@pytest.mark.parametrize("variant, lam, expect", [
    ("plain", 3, pts(-3)),
    ("bar", 3, pts(-3, -2, -1, 0, 1, 2)),
    ("tilde", 3, pts(*range(-3, 4))),
    ("hat", 3, pts(*range(-3, 4))),
    ("plain", -2, pts(-2, 2)),
    ("bar", -2, pts(*range(-2, 3))),
    ("tilde", -2, pts(-1, 0, 1, 2)),
    ("hat", -2, pts(*range(-2, 3))),
    ("tilde", 0, pts(0)),
])
def test_steps_on_finite(finite, variant, lam, expect):
    assert script_T_step(finite, variant, 0, (lam,)) == expect


@given(st.tuples(*[st.integers(-4, 4)] * 3), st.sampled_from([0, 1]))
def test_step_containments(lam, i):
    d = bundled_datum("affine_a1")
    s = {v: script_T_step(d, v, i, lam) for v in VARIANTS}
    assert s["plain"] <= s["bar"] <= s["hat"]
    # tilde is open at lambda when alpha_i(lambda) < 0
    assert s["plain"] - {lam} <= s["tilde"] <= s["hat"]


def test_word_order(affine):
    # the last letter acts first
    d = affine
    lam = (0, 0, 1)
    first = script_T_step(d, "plain", 1, lam)
    expect = frozenset().union(*(script_T_step(d, "plain", 0, m) for m in first))
    assert script_T_word(d, "plain", (0, 1), [lam]) == expect


WORDS = [(), (0,), (1,), (0, 1), (1, 0), (0, 1, 0), (1, 0, 1, 0)]
LAMS = [(0, 0, 1), (-1, 0, 1), (2, -1, 1), (1, 1, 0), (-2, 2, 1), (1, -2, 2)]


@pytest.mark.parametrize("word", WORDS)
@pytest.mark.parametrize("lam", LAMS)
def test_supports_of_products(affine, word, lam):
    alg = bl_algebra(affine)
    w = alg.W.from_word(word)
    zt = (alg.Z(lam) * alg.T(w)).supp_Z()
    assert zt <= script_T_of_elt(affine, "tilde", w.inverse(), lam)
    zti = (alg.Z(lam) * alg.Tinv(w)).supp_Z()
    assert zti <= script_T_of_elt(affine, "bar", w, lam)
    assert script_T_of_elt(affine, "plain", w, lam) <= script_S(affine, w, lam) | {lam}


def test_reverse_tilde_by_brute_force(affine):
    d = affine
    W = weyl_group(d)
    m = (1, 1, 1)
    box = [p for p in itertools.product(range(-9, 10), range(-9, 10), [1])
           if W.in_tits_cone(p).inside and d.dominance_leq(W.dominant_rep(p)[0], m)]
    for word in [(0,), (0, 1), (1, 0, 1)]:
        w = W.from_word(word)
        for tau in [(0, 0, 1), (1, 0, 1), (0, 1, 1)]:
            got, exact = reverse_tilde_T(d, tau, w, m)
            assert exact
            brute = {lam for lam in box
                     if tau in script_T_of_elt(d, "tilde", w.inverse(), lam)}
            assert got == brute


def test_depth_and_m(affine):
    assert depth(affine, (0, 0, 1), (-1, 0, 1)) == 0
    assert depth(affine, (1, 1, 1), (0, 0, 1)) == 2
    assert m_lambda(affine, (0, 0, 1), 1) == math.inf
    # ]lambda, r_0 lambda[ with alpha_0 = 3 holds two points
    assert m_lambda(affine, (1, -1, 1), 0) >= 0
