import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmhecke.errors import AsymmetricZero, DiagonalNotTwo, InvalidDatum, PositiveOffDiagonal
from kmhecke.rootdata import bundled_datum, load_datum, validate_matrix


@pytest.mark.parametrize("entries, exc", [
    ([[2, -1], [-1, 3]], DiagonalNotTwo),
    ([[2, 1], [-1, 2]], PositiveOffDiagonal),
    ([[2, 0], [-1, 2]], AsymmetricZero),
])
def test_matrix_axioms(entries, exc):
    with pytest.raises(exc) as info:
        validate_matrix(entries)
    assert isinstance(info.value, ValueError)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        validate_matrix([[2, -1]])


def test_pairing_reproduces_matrix(datum):
    A = datum.matrix.entries
    for i, c in enumerate(datum.coroots):
        assert [datum.pair(j, c) for j in range(datum.rank)] == list(A[i])


def test_bad_datum_rejected():
    cfg = bundled_datum("affine_a1").to_config()
    cfg["roots"] = [[2, -2, 0], [-2, 2, 0]]
    with pytest.raises(InvalidDatum):
        load_datum(cfg)
    cfg = bundled_datum("affine_a1").to_config()
    cfg["ht_extension"] = ["2", "1", "0"]
    with pytest.raises(InvalidDatum):
        load_datum(cfg)


def test_config_round_trip(datum, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps(datum.to_config()))
    again = load_datum(path)
    assert again.to_config() == datum.to_config()
    assert load_datum(datum.name).to_config() == datum.to_config()


def test_fractional_height_sets_N(affine_third):
    assert affine_third.N == 3
    assert affine_third.ht((0, 0, 1)) == Fraction(1, 3)
    assert affine_third.ht_N((1, 1, 1)) == 7


def test_reflection_formula(affine):
    # r_0(d) = d - alpha_0(d) alpha_0^vee with alpha_0(d) = 1
    assert affine.reflect(0, (0, 0, 1)) == (-1, 0, 1)
    assert affine.reflect(1, (0, 0, 1)) == (0, 0, 1)


@given(st.tuples(*[st.integers(-5, 5)] * 3), st.sampled_from([0, 1]))
def test_reflection_is_involution(v, i):
    d = bundled_datum("affine_a1")
    assert d.reflect(i, d.reflect(i, v)) == v
    assert d.pair(i, d.reflect(i, v)) == -d.pair(i, v)


def test_delta_is_invariant(affine):
    assert affine.delta == (0, 0, 1)
    assert all(sum(a * c for a, c in zip(affine.delta, cor)) == 0 for cor in affine.coroots)


def test_dominance_and_box(affine):
    assert affine.dominance_leq((0, 0, 1), (1, 1, 1))
    assert not affine.dominance_leq((1, 1, 1), (0, 0, 1))
    assert not affine.dominance_leq((0, 0, 0), (0, 0, 1))
    assert len(affine.box_interval((0, 0, 1), (1, 2, 1))) == 6


def test_line_interval_modes(finite):
    # alpha(3) = 6, so the segment runs 3, 2, ..., -3
    assert finite.line_interval((3,), 0) == [(k,) for k in range(3, -4, -1)]
    assert finite.line_interval((3,), 0, "open") == [(k,) for k in range(2, -3, -1)]
    assert finite.line_interval((3,), 0, "open-left")[0] == (2,)
    assert finite.line_interval((3,), 0, "open-right")[-1] == (-2,)
    assert finite.line_interval((0,), 0, "open") == []
    with pytest.raises(ValueError):
        finite.line_interval((0,), 0, "half")


def test_rho_regular_dominant(datum):
    assert datum.is_regular_dominant(datum.rho)
