"""Truncated formal power series in h = q - 1 with exact rational
coefficients, rational powers of q via generalized binomials, and the
reduction map into Z[q] truncations (the wedge map).

A series of order N stores the coefficients of h^0 .. h^(N-1); arithmetic
truncates to the minimum order of the operands, so every stored coefficient
is exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycInt, h_element, qpow
from .numtheory import remainder_mod

DEFAULT_TRUNC = 16


def default_trunc() -> int:
    """Series order used by high-level drivers; QINV_TRUNC overrides."""
    return int(os.environ.get("QINV_TRUNC", DEFAULT_TRUNC))


def binomial_frac(r: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient C(r, k) = r(r-1)...(r-k+1)/k!."""
    num = Fraction(1)
    for j in range(k):
        num *= r - j
    for j in range(2, k + 1):
        num /= j
    return num


@dataclass(frozen=True)
class HSeries:
    """Power series in h, exact rational coefficients, truncated at len(coeffs)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> Fraction:
        if n >= self.order:
            raise IndexError(f"coefficient h^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    @classmethod
    def constant(cls, c, order: int) -> "HSeries":
        return cls((Fraction(c),) + (Fraction(0),) * (order - 1))

    @classmethod
    def zero(cls, order: int) -> "HSeries":
        return cls((Fraction(0),) * order)

    def __add__(self, other) -> "HSeries":
        if isinstance(other, (int, Fraction)):
            other = HSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return HSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    __radd__ = __add__

    def __neg__(self) -> "HSeries":
        return HSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "HSeries":
        return self + (-other if isinstance(other, HSeries) else -Fraction(other))

    def __rsub__(self, other) -> "HSeries":
        return (-self) + other

    def __mul__(self, other) -> "HSeries":
        if isinstance(other, (int, Fraction)):
            return HSeries(tuple(Fraction(other) * a for a in self.coeffs))
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j in range(n - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return HSeries(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "HSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        out = [Fraction(0)] * n
        out[0] = 1 / c0
        for k in range(1, n):
            s = sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -s / c0
        return HSeries(tuple(out))

    def __truediv__(self, other) -> "HSeries":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        n = min(self.order, other.order)
        return HSeries(self.coeffs[:n]) * HSeries(other.coeffs[:n]).inverse()

    def shift_down(self, k: int) -> "HSeries":
        """Exact division by h^k; the first k coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ZeroDivisionError(f"series is not divisible by h^{k}")
        return HSeries(self.coeffs[k:])

    def mul_h_power(self, k: int) -> "HSeries":
        """Multiply by h^k, keeping the truncation order."""
        n = self.order
        return HSeries((Fraction(0),) * min(k, n) + self.coeffs[: n - k])

    def h_order(self) -> int:
        """Index of the first nonzero coefficient (= order if all vanish)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.order

    def truncate(self, order: int) -> "HSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return HSeries(self.coeffs[:order])

    def eval_at(self, h: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * h + complex(c)
        return acc

    def to_json(self) -> dict:
        return {"trunc": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        return f"HSeries({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class QPowExpr:
    """The symbol q^r for an exact rational exponent r."""

    exponent: Fraction

    def expand(self, order: int) -> HSeries:
        return qpow_series(self.exponent, order)


def qpow_series(r: Fraction | int, order: int) -> HSeries:
    """(1 + h)^r as a truncated series with generalized binomial coefficients."""
    r = Fraction(r)
    coeffs = []
    c = Fraction(1)
    for k in range(order):
        coeffs.append(c)
        c = c * (r - k) / (k + 1)
    return HSeries(tuple(coeffs))


def wedge(s: HSeries, K: int, depth: int) -> CycInt:
    """Order-(depth+1) truncation of the image of s in the K-adic completion
    of Z[q]: sum of integer lifts of the coefficients mod K^(depth+1) times
    powers of q - 1.

    Coefficient denominators must be coprime to K; s must carry at least
    depth + 1 coefficients.
    """
    if s.order < depth + 1:
        raise ValueError(f"series order {s.order} too small for depth {depth}")
    h = h_element(K)
    acc = CycInt.zero(K)
    hp = CycInt.one(K)
    for n in range(depth + 1):
        lift = remainder_mod(s.coeffs[n], K, depth)
        acc = acc + lift * hp
        hp = hp * h
    return acc


def wedge_rational(x: Fraction | int, K: int, depth: int) -> CycInt:
    """Wedge image of a constant, as a CycInt integer lift."""
    return remainder_mod(Fraction(x), K, depth) * CycInt.one(K)


def quantum_integer_series(beta: int, order: int) -> HSeries:
    """(q^(b/2) - q^(-b/2)) / (q^(1/2) - q^(-1/2)) for odd b > 0, expanded
    in h; a Laurent-free sum of integer powers of q."""
    if beta % 2 == 0 or beta <= 0:
        raise ValueError("quantum integer series needs a positive odd color")
    acc = HSeries.zero(order)
    for j in range(beta):
        acc = acc + qpow_series((beta - 1) // 2 - j, order)
    return acc


__all__ = [
    "DEFAULT_TRUNC",
    "default_trunc",
    "binomial_frac",
    "HSeries",
    "QPowExpr",
    "qpow_series",
    "wedge",
    "wedge_rational",
    "quantum_integer_series",
]
