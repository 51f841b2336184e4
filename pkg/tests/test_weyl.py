import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmhecke.errors import NotDominant, NotInTitsCone
from kmhecke.rootdata import bundled_datum
from kmhecke.weyl import weyl_group

words = st.lists(st.integers(0, 1), max_size=7)


def test_finite_group_has_two_elements(finite):
    W = weyl_group(finite)
    assert len(W.elements_upto(10)) == 2
    assert W.from_word([0, 0]).is_identity()


@pytest.mark.parametrize("name", ["affine_a1", "hyperbolic_2_3"])
def test_infinite_dihedral_counts(name):
    W = weyl_group(bundled_datum(name))
    for L in range(6):
        assert len(W.elements_upto(L)) == 2 * L + 1


@pytest.mark.parametrize("name", ["affine_a1", "hyperbolic_2_3"])
@given(words)
def test_reduced_word_is_alternating(name, word):
    W = weyl_group(bundled_datum(name))
    w = W.from_word(word)
    # cancel squares by hand
    red = []
    for i in word:
        if red and red[-1] == i:
            red.pop()
        else:
            red.append(i)
    assert w.length == len(red)
    assert w.word == tuple(red)
    assert W.all_reduced_words(w) == frozenset({tuple(red)})


@given(words, words)
def test_multiplication_and_action(u, v):
    d = bundled_datum("affine_a1")
    W = weyl_group(d)
    a, b = W.from_word(u), W.from_word(v)
    assert a * b == W.from_word(u + v)
    lam = (1, -2, 3)
    assert (a * b)(lam) == a(b(lam))
    assert (a * a.inverse()).is_identity()


def test_descents_and_lmul_rmul(affine):
    W = weyl_group(affine)
    w = W.from_word([0, 1, 0])
    assert W.left_descents(w) == [0]
    assert W.is_right_descent(w, 0) and not W.is_right_descent(w, 1)
    assert W.lmul(1, w).word == (1, 0, 1, 0)
    assert W.rmul(w, 0).word == (0, 1)


@given(words, words)
def test_bruhat_in_infinite_dihedral(u, w):
    # in the infinite dihedral group u <= w iff u = w or l(u) < l(w)
    W = weyl_group(bundled_datum("hyperbolic_2_3"))
    a, b = W.from_word(u), W.from_word(w)
    assert W.bruhat_leq(a, b) == (a == b or a.length < b.length)


def test_bruhat_interval_size(affine):
    W = weyl_group(affine)
    assert len(W.bruhat_lower_interval(W.from_word([0, 1, 0, 1]))) == 8


def _affine_inside(v):
    return v[2] > 0 or (v[2] == 0 and v[0] == v[1])


def _hyperbolic_inside(v):
    x, y = v
    return v == (0, 0) or (x * x - 3 * x * y + y * y < 0 and x + y < 0)


@given(st.tuples(*[st.integers(-6, 6)] * 3))
def test_affine_tits_cone(v):
    W = weyl_group(bundled_datum("affine_a1"))
    ans = W.in_tits_cone(v)
    assert ans.inside == _affine_inside(v)
    if ans.inside:
        assert W.datum.is_dominant(ans.dominant)
        assert W.act(ans.w, ans.dominant) == v


@given(st.tuples(*[st.integers(-40, 40)] * 2))
def test_hyperbolic_tits_cone(v):
    W = weyl_group(bundled_datum("hyperbolic_2_3"))
    ans = W.in_tits_cone(v)
    assert ans.tag != "unknown"
    assert ans.inside == _hyperbolic_inside(v)
    if ans.inside:
        assert W.act(ans.w, ans.dominant) == v


def test_dominant_rep_minimal(affine):
    W = weyl_group(affine)
    # (1, 1, 0) is fixed by W, so w_lambda is trivial
    dom, w = W.dominant_rep((1, 1, 0))
    assert dom == (1, 1, 0) and w.is_identity()
    with pytest.raises(NotInTitsCone):
        W.dominant_rep((1, 0, 0))


def test_orbit_upto(affine):
    W = weyl_group(affine)
    orb = W.orbit_upto((0, 0, 1), 3)
    assert len(orb) == 4
    assert orb[(-1, 0, 1)].word == (0,)
    assert all(W.act(w, (0, 0, 1)) == p for p, w in orb.items())
    with pytest.raises(NotDominant):
        W.orbit_upto((-1, 0, 1), 3)
