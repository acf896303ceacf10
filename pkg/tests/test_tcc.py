from fractions import Fraction

import pytest

from qinv.tcc import (
    AlexanderData,
    DTable,
    OhtsukiSeries,
    alexander_second_derivative,
    casson_walker_lens,
    casson_walker_surgery,
    connected_sum,
    dtable_unknot,
    presentation_lambda_series,
    sphere_series,
    tcc_lens,
    tcc_surgery,
)


def test_series_validation():
    OhtsukiSeries(3, (Fraction(1, 3), Fraction(5, 6)))
    with pytest.raises(ValueError):
        OhtsukiSeries(3, (Fraction(1, 2),))
    with pytest.raises(ValueError):
        OhtsukiSeries(3, (Fraction(1, 3), Fraction(1, 5)))
    with pytest.raises(ValueError):
        OhtsukiSeries(0, (Fraction(1),))


def test_sphere_series():
    s = sphere_series(5)
    assert s.h1 == 1
    assert s.lam == (1, 0, 0, 0, 0)


def test_lens_series_leading_terms():
    for p in (2, 3, -4, 5, -7):
        s = tcc_lens(p, 6)
        assert s.h1 == abs(p)
        assert s.lam[0] == Fraction(1, abs(p))
        assert s.lam[1] == 3 * casson_walker_lens(p) / abs(p)


def test_lens_rejects_zero():
    with pytest.raises(ValueError):
        tcc_lens(0)


def test_dtable_validation_and_json():
    d = DTable(1, -3, {(0, 0): Fraction(1), (1, 2): Fraction(-5, 2), (2, 0): 0})
    assert (2, 0) not in d.entries
    assert DTable.from_json(d.to_json()) == d
    with pytest.raises(ValueError):
        DTable(1, 2, {(-1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        DTable(1, 2, {(0, 0): Fraction(1, 3)})


def test_surgery_on_unknot_is_a_lens_space():
    for p in range(-9, 10):
        if p == 0:
            continue
        assert tcc_surgery(dtable_unknot(p), 9).lam == tcc_lens(-p, 9).lam


def test_surgery_rejects_zero_self_linking():
    with pytest.raises(ValueError):
        tcc_surgery(dtable_unknot(0))


def test_connected_sum_multiplies():
    a = tcc_lens(2, 6)
    b = tcc_lens(-3, 6)
    s = connected_sum(a, b)
    assert s.h1 == 6
    assert s.lam[0] == Fraction(1, 6)
    assert s.series().coeffs == (a.series() * b.series()).coeffs


def test_presentation_series():
    s = presentation_lambda_series((-2, -3), 5)
    byhand = connected_sum(tcc_lens(2, 5), tcc_lens(3, 5))
    assert s.lam == byhand.lam
    assert presentation_lambda_series((), 4).lam == sphere_series(4).lam


def test_alexander_second_derivative():
    assert alexander_second_derivative(AlexanderData(1, ())) == 0
    assert alexander_second_derivative(AlexanderData(1, (3, 7))) == 6


def test_casson_walker_sphere():
    assert casson_walker_lens(1) == 0
    assert casson_walker_lens(-1) == 0
    with pytest.raises(ValueError):
        casson_walker_surgery(0, 1, 0, 0)


def test_casson_walker_orientation_antisymmetry():
    # Reversing orientation swaps L(p,1) and L(-p,1) and negates the invariant.
    for p in range(2, 12):
        assert casson_walker_lens(p) == -casson_walker_lens(-p)


def test_casson_walker_alexander_contribution():
    # Surgery on a knot with nontrivial Alexander data shifts the invariant
    # by -delta''/(p h1M).
    base = casson_walker_surgery(0, 1, 0, 3)
    shifted = casson_walker_surgery(0, 1, 6, 3)
    assert shifted - base == -Fraction(6, 3)


def test_json_export():
    s = tcc_lens(3, 4)
    data = s.to_json()
    assert data["h1"] == 3
    assert data["lambda"][0] == "1/3"
