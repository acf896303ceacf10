import math
import random
from fractions import Fraction

import pytest

from qinv.gauss import (
    binom_row,
    check_Y_correspondence,
    gauss_integral_X,
    gauss_integral_Y,
    gauss_sum_X,
    gauss_sum_X_closed,
    gauss_sum_Y,
    gauss_sum_Y_direct,
)
from qinv.hseries import qpow_series


def test_binom_row_numeric_identity():
    # sum_n a[n] (x^n + x^(-n)) must equal (x^(1/2) - x^(-1/2))^(2m+2).
    for m in range(6):
        row = binom_row(m)
        for x in (0.7, 1.3, 2.1):
            lhs = sum(a * (x**n + x**-n) for n, a in enumerate(row.a))
            rhs = (math.sqrt(x) - 1 / math.sqrt(x)) ** (2 * m + 2)
            assert abs(lhs - rhs) < 1e-9 * (1 + abs(rhs))


def test_binom_row_coefficients_sum_to_zero():
    # Evaluation at x = 1 kills the bracket, so twice the row sums to zero.
    for m in range(8):
        row = binom_row(m)
        assert 2 * sum(row.a) == 0
    with pytest.raises(ValueError):
        binom_row(-1)


def test_X_closed_form_small():
    for K in (3, 5, 7, 11, 13):
        for p in (-5, -2, -1, 1, 2, 3, 5):
            if p % K == 0:
                continue
            for m in range(4):
                assert gauss_sum_X(p, m, K) == gauss_sum_X_closed(p, m, K)


def test_X_rejects_divisible_p():
    with pytest.raises(ValueError):
        gauss_sum_X(7, 0, 7)


def test_Y_two_code_paths_agree():
    rng = random.Random(17)
    for _ in range(40):
        K = rng.choice((5, 7, 11, 13))
        p = rng.choice([x for x in range(-6, 7) if x and x % K])
        m = rng.randrange(0, 4)
        assert gauss_sum_Y(p, m, K) == gauss_sum_Y_direct(p, m, K)


def test_Y_smallness():
    for K in (5, 7, 11, 13):
        for p in (-3, 2, 5):
            if p % K == 0:
                continue
            for m in range(4):
                assert gauss_sum_Y(p, m, K).h_valuation() >= m


def test_Y_correspondence():
    for K in (5, 7, 11):
        for p in (-4, -1, 2, 3):
            for m in range(3):
                assert check_Y_correspondence(p, m, K, m + 3)


def test_integral_X_is_a_q_power():
    assert gauss_integral_X(3, 2, 6) == qpow_series(Fraction(-4, 3), 6)
    with pytest.raises(ValueError):
        gauss_integral_X(0, 1, 4)


def test_integral_Y_vanishing_order():
    for p in (-5, -2, 1, 3, 7):
        for m in range(5):
            assert gauss_integral_Y(p, m, 10).h_order() >= m


def _simpson(f, a, b, n):
    if n % 2:
        n += 1
    step = (b - a) / n
    total = f(a) + f(b)
    for i in range(1, n):
        total += f(a + i * step) * (4 if i % 2 else 2)
    return total * step / 3


def test_integral_Y_against_quadrature():
    # Quadrature oracle at a real point 0 < q < 1 and positive p: the
    # Gaussian integral of q^(p b^2 / 4) (q^(n b) + q^(-n b)) over the line
    # is proportional to q^(-n^2/p), with an n-independent constant.
    q = 0.95
    h = q - 1.0
    lnq = math.log(q)
    for p in (2, 3, 5):
        aa = -p * lnq / 4
        L = 40 / math.sqrt(aa)
        for m in range(3):
            row = binom_row(m)
            quad = 0.0
            for n, a in enumerate(row.a):
                f = lambda b: math.exp(-aa * b * b) * (q ** (n * b) + q ** (-n * b))
                quad += a * _simpson(f, -L, L, 4000) / 2
            norm = _simpson(lambda b: math.exp(-aa * b * b), -L, L, 4000)
            series_val = h * gauss_integral_Y(p, m, 60).eval_at(h).real
            assert abs(series_val - quad / norm) < 1e-8 * (1 + abs(series_val))
