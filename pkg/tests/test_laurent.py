from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from kmhecke.errors import MixedN, NonIntegralExponent, NotAUnit
from kmhecke.laurent import LaurentT

t = sympy.Symbol("t")


def laurents(N=1):
    return st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=5).map(
        lambda d: LaurentT(d, N))


def to_sympy(x: LaurentT):
    return sum((c * t**e for e, c in x.terms.items()), sympy.Integer(0))


@given(laurents(), laurents())
def test_mul_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(laurents(), laurents())
def test_add_sub_match_sympy(a, b):
    assert sympy.expand(to_sympy(a + b) - to_sympy(a) - to_sympy(b)) == 0
    assert sympy.expand(to_sympy(a - b) - to_sympy(a) + to_sympy(b)) == 0


@given(laurents(), laurents(), laurents())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(laurents(3), st.integers(-5, 5))
def test_shift_is_mul_by_monomial(a, k):
    assert a.shift(k) == a * LaurentT.t(k, 3)


def test_int_coercion_and_zero_terms():
    x = LaurentT({0: 0, 2: 3})
    assert x.terms == {2: 3}
    assert 2 + x - 2 == x
    assert x * 0 == 0
    assert LaurentT.const(5) == 5


def test_q_and_fractional_powers():
    q = LaurentT.q(N=3)
    assert q.terms == {3: 1}
    assert str(q) == "q"
    assert str(LaurentT.t(1, 3)) == "t"
    assert (LaurentT.t(1, 3) ** 3) == q


def test_units():
    u = -LaurentT.q(2, 3)
    assert u.is_unit()
    assert u * u.invert_unit() == 1
    assert (u ** -2) * u**2 == 1
    with pytest.raises(NotAUnit):
        (LaurentT.q() + 1).invert_unit()


def test_mixed_N_rejected():
    with pytest.raises(MixedN):
        LaurentT.q(1) + LaurentT.q(2)


def test_is_in_Zq_and_evaluation():
    x = LaurentT({0: 1, 2: 3}, N=2)
    assert x.is_in_Zq()
    assert x.evaluate_q(2) == 7
    assert not LaurentT({1: 1}, N=2).is_in_Zq()
    assert not LaurentT({-2: 1}, N=2).is_in_Zq()
    with pytest.raises(NonIntegralExponent):
        LaurentT({1: 1}, N=2).evaluate_q(2)
    assert LaurentT({-1: 2}).evaluate(Fraction(1, 2)) == 4


def test_degrees():
    x = LaurentT({-2: 1, 5: -1}, N=2)
    assert (x.degree(), x.low_degree(), x.degree_q()) == (5, -2, Fraction(5, 2))


@given(laurents(2))
def test_json_round_trip(a):
    assert LaurentT.from_json(a.to_json(), 2) == a


def test_str():
    assert str(LaurentT({0: 1, 1: -2, -1: 3})) == "-2*q + 1 + 3*q^-1"
    assert str(LaurentT()) == "0"


def test_bad_N():
    with pytest.raises(ValueError):
        LaurentT({}, 0)
