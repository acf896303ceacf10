"""Gaussian sums over odd colors and their power-series counterparts.

The cyclotomic sums X and Y run over odd colors 0 < b < K with a half-weight
term at b = K; dividing by the Gauss element G_p keeps everything inside
Z[q] and removes the sqrt(K) and eighth-root phases.  Their asymptotic
counterparts are exact h-series built from rational powers of q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cyclotomic import (
    CycInt,
    GaussElement,
    _reduce,
    congruent_to_order,
    divide_by_gauss,
    divide_by_h,
    gauss_element,
    qpow,
    qpow_half,
)
from .numtheory import legendre, mod_inverse, require_odd_prime


@dataclass(frozen=True)
class ZBinomialRow:
    """Integer coefficients a[0..m+1] with
    sum_n a[n] (x^n + x^(-n)) = (x^(1/2) - x^(-1/2))^(2m+2)."""

    m: int
    a: tuple[int, ...]


def binom_row(m: int) -> ZBinomialRow:
    """Row of signed binomial coefficients for the even power 2m+2.

    a[n] = (-1)^(m+1-n) C(2m+2, m+1-n) for n >= 1; a[0] is half the central
    term (the n = 0 term is counted twice in the symmetric sum).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    central = comb(2 * m + 2, m + 1)
    assert central % 2 == 0
    sign0 = -1 if (m + 1) % 2 else 1
    a = [sign0 * central // 2]
    for n in range(1, m + 2):
        s = -1 if (m + 1 - n) % 2 else 1
        a.append(s * comb(2 * m + 2, m + 1 - n))
    return ZBinomialRow(m, tuple(a))


def _extended_pair_sum(p: int, m: int, K: int) -> CycInt:
    """Extended odd-color sum of q^(4* p b^2) (q^(m b) + q^(-m b)),
    including the half-weight b = K term (which contributes 1)."""
    i4p = mod_inverse(4, K) * p
    arr = [0] * K
    for b in range(1, K, 2):
        e = i4p * b * b
        arr[(e + m * b) % K] += 1
        arr[(e - m * b) % K] += 1
    arr[0] += 1  # half of the b = K term, q^(4* p K^2) * 2 = 2
    return CycInt(K, _reduce(K, arr))


def gauss_sum_X(p: int, m: int, K: int) -> CycInt:
    """Normalized odd-color Gauss sum; equals legendre(|p|) q^(-m^2 p*).

    Computed by direct summation and exact division by the Gauss element;
    the closed form is the test oracle, not the code path.
    """
    require_odd_prime(K)
    if p % K == 0:
        raise ValueError(f"p = {p} divisible by K = {K}")
    s = _extended_pair_sum(p, m, K)
    return legendre(abs(p), K) * divide_by_gauss(s, gauss_element(p, K))


def gauss_sum_X_closed(p: int, m: int, K: int) -> CycInt:
    """Closed form legendre(|p|) q^(-m^2 p*), used as an oracle."""
    if p % K == 0:
        raise ValueError(f"p = {p} divisible by K = {K}")
    return legendre(abs(p), K) * qpow(-m * m * mod_inverse(p, K), K)


def gauss_sum_Y(p: int, m: int, K: int) -> CycInt:
    """Normalized odd-color sum against (q^(b/2) - q^(-b/2))^(2m+2), with
    the leading 1/h resolved exactly; divisible by (q-1)^m."""
    require_odd_prime(K)
    if p % K == 0:
        raise ValueError(f"p = {p} divisible by K = {K}")
    row = binom_row(m)
    lp = legendre(abs(p), K)
    ps = mod_inverse(p, K)
    acc = CycInt.zero(K)
    for n, a in enumerate(row.a):
        acc = acc + a * qpow(-n * n * ps, K)
    return divide_by_h(lp * acc)


def gauss_sum_Y_direct(p: int, m: int, K: int) -> CycInt:
    """Independent code path for gauss_sum_Y: literal summation over odd
    colors, half-weight term included and asserted to vanish."""
    require_odd_prime(K)
    if p % K == 0:
        raise ValueError(f"p = {p} divisible by K = {K}")
    i4p = mod_inverse(4, K) * p
    acc = CycInt.zero(K)
    for b in range(1, K, 2):
        z = qpow_half(b, K) - qpow_half(-b, K)
        acc = acc + qpow(i4p * b * b, K) * z ** (2 * m + 2)
    # b = K term of the extended sum: (q^(K/2) - q^(-K/2)) = 0.
    assert (qpow_half(K, K) - qpow_half(-K, K)).is_zero()
    normalized = legendre(abs(p), K) * divide_by_gauss(acc, gauss_element(p, K))
    return divide_by_h(normalized)


def gauss_integral_X(p: int, m: int, order: int):
    """Series counterpart of the X sum: q^(-m^2/p)."""
    from .hseries import qpow_series

    if p == 0:
        raise ValueError("p must be nonzero")
    return qpow_series(Fraction(-m * m, p), order)


def gauss_integral_Y(p: int, m: int, order: int):
    """Series counterpart of the Y sum: h^(-1) sum_n a[m,n] q^(-n^2/p).

    The bracket vanishes at h = 0, so the Laurent prefactor cancels; the
    result vanishes to order >= m.
    """
    from .hseries import HSeries, qpow_series

    if p == 0:
        raise ValueError("p must be nonzero")
    row = binom_row(m)
    acc = HSeries.zero(order + 1)
    for n, a in enumerate(row.a):
        acc = acc + a * qpow_series(Fraction(-n * n, p), order + 1)
    return acc.shift_down(1)


def check_Y_correspondence(p: int, m: int, K: int, depth: int) -> bool:
    """Cyclotomic Y agrees with legendre(|p|) times the wedge image of the
    asymptotic Y, to order depth + 1 in q - 1."""
    from .hseries import wedge

    y_cycl = gauss_sum_Y(p, m, K)
    y_asym = gauss_integral_Y(p, m, depth + 1)
    target = legendre(abs(p), K) * wedge(y_asym, K, depth)
    return congruent_to_order(y_cycl, target, depth + 1)
