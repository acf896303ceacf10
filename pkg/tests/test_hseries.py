import random
from fractions import Fraction

import pytest

from qinv.cyclotomic import congruent_to_order, qpow
from qinv.hseries import (
    HSeries,
    QPowExpr,
    binomial_frac,
    default_trunc,
    qpow_series,
    quantum_integer_series,
    wedge,
    wedge_rational,
)
from qinv.invariants import quantum_integer
from qinv.numtheory import mod_inverse


def test_binomial_frac_matches_integer_binomials():
    from math import comb

    for n in range(8):
        for k in range(n + 1):
            assert binomial_frac(Fraction(n), k) == comb(n, k)
        assert binomial_frac(Fraction(n), n + 1) == 0
    assert binomial_frac(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_series_ring_axioms():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randrange(2, 8)
        a = HSeries([Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(n)])
        b = HSeries([Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(n)])
        c = HSeries([Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(n)])
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_truncation_to_min_order():
    a = qpow_series(Fraction(1, 2), 6)
    b = qpow_series(Fraction(1, 3), 4)
    assert (a * b).order == 4
    assert (a + b).order == 4


def test_qpow_series_is_multiplicative():
    rng = random.Random(6)
    for _ in range(60):
        r = Fraction(rng.randrange(-12, 13), rng.randrange(1, 9))
        s = Fraction(rng.randrange(-12, 13), rng.randrange(1, 9))
        assert qpow_series(r, 8) * qpow_series(s, 8) == qpow_series(r + s, 8)


def test_qpow_series_integer_case():
    assert qpow_series(2, 4).coeffs == (1, 2, 1, 0)
    assert qpow_series(0, 3) == HSeries.constant(1, 3)


def test_inverse_and_division():
    a = qpow_series(Fraction(3, 7), 9)
    assert a * a.inverse() == HSeries.constant(1, 9)
    b = qpow_series(Fraction(-2, 5), 9)
    assert (a / b) * b == a
    with pytest.raises(ZeroDivisionError):
        HSeries.zero(3).inverse()


def test_shift_down_and_mul_h_power():
    a = qpow_series(Fraction(1, 2), 6)
    lifted = a.mul_h_power(2)
    assert lifted.coeffs[:2] == (0, 0)
    assert lifted.shift_down(2) == a.truncate(4)
    with pytest.raises(ZeroDivisionError):
        a.shift_down(1)


def test_eval_at_matches_float_power():
    for r in (Fraction(1, 2), Fraction(-3, 4), Fraction(5, 3)):
        s = qpow_series(r, 30)
        for h in (0.01, -0.02, 0.05):
            assert abs(s.eval_at(h) - (1 + h) ** float(r)) < 1e-12


def test_qpow_expr_expands():
    e = QPowExpr(Fraction(1, 3))
    assert e.expand(5) == qpow_series(Fraction(1, 3), 5)


def test_wedge_on_integer_powers():
    # Integer exponents reproduce the exact monomial: on the nose when the
    # binomial expansion fits below the truncation, K-adically otherwise.
    for K in (5, 7, 11):
        for e in range(0, K - 1):
            w = wedge(qpow_series(e, K), K, K - 2)
            assert w == qpow(e, K)
        for e in range(-4, K + 3):
            w = wedge(qpow_series(e, K), K, K - 2)
            assert congruent_to_order(w, qpow(e, K), K - 1)


def test_wedge_on_rational_powers():
    for K in (5, 7, 11, 13):
        for n in (2, 3, 4):
            if n % K == 0:
                continue
            for m in (-3, 1, 5):
                target = qpow(m * mod_inverse(n, K), K)
                for N in (1, 2, 3):
                    w = wedge(qpow_series(Fraction(m, n), N + 1), K, N)
                    assert congruent_to_order(w, target, N + 1)


def test_wedge_rational_constant():
    K = 7
    w = wedge_rational(Fraction(1, 2), K, 1)
    half = mod_inverse(2, K**2)
    assert w.coeffs[0] == half


def test_quantum_integer_series_vs_exact():
    for K in (5, 7, 11):
        for beta in (1, 3, 5):
            exact = quantum_integer(beta, K)
            w = wedge(quantum_integer_series(beta, K), K, K - 2)
            assert congruent_to_order(exact, w, K - 1)


def test_default_trunc_env(monkeypatch):
    monkeypatch.delenv("QINV_TRUNC", raising=False)
    assert default_trunc() == 16
    monkeypatch.setenv("QINV_TRUNC", "9")
    assert default_trunc() == 9
