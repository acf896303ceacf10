"""Exact arithmetic in the cyclotomic ring Z[q] for q a primitive K-th root
of unity, K an odd prime.

Elements are stored as integer coefficient vectors of length K-1 reduced
modulo 1 + q + ... + q^(K-1) = 0, which makes the representation unique and
the (q-1)-basis expansion well defined.  The element h = q - 1 generates
the unique prime ideal above K, with K = unit * h^(K-1); the h-adic
valuation and exact division below implement that dictionary.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import comb, inf

from .numtheory import mod_inverse, require_odd_prime


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the quotient leaves the ring."""


def _reduce(K: int, arr: list[int]) -> tuple[int, ...]:
    """Reduce a raw coefficient list (any length) to the canonical K-1 vector."""
    folded = [0] * K
    for e, c in enumerate(arr):
        folded[e % K] += c
    top = folded[K - 1]
    return tuple(folded[i] - top for i in range(K - 1))


class CycInt:
    """An element of Z[q], q = exp(2*pi*i/K), K an odd prime."""

    __slots__ = ("K", "coeffs")

    def __init__(self, K: int, coeffs) -> None:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != K - 1:
            raise ValueError(f"need {K - 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def zero(cls, K: int) -> "CycInt":
        return cls(K, (0,) * (K - 1))

    @classmethod
    def from_int(cls, K: int, n: int) -> "CycInt":
        return cls(K, (n,) + (0,) * (K - 2))

    @classmethod
    def one(cls, K: int) -> "CycInt":
        return cls.from_int(K, 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "CycInt") -> None:
        if self.K != other.K:
            raise ValueError(f"mixed roots of unity: K={self.K} vs K={other.K}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.K, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.K == other.K and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.K, self.coeffs))

    def __add__(self, other) -> "CycInt":
        if isinstance(other, int):
            other = CycInt.from_int(self.K, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt(self.K, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.K, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycInt":
        return self + (-other if isinstance(other, CycInt) else -int(other))

    def __rsub__(self, other) -> "CycInt":
        return (-self) + other

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.K, tuple(other * a for a in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        n = self.K - 1
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycInt(self.K, _reduce(self.K, prod))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise ValueError("use divide_exact for inverses")
        result = CycInt.one(self.K)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "CycInt":
        """Ring conjugation q -> q^(-1)."""
        arr = [0] * self.K
        for i, c in enumerate(self.coeffs):
            arr[(-i) % self.K] += c
        return CycInt(self.K, _reduce(self.K, arr))

    def to_h_basis(self) -> tuple[int, ...]:
        """Integer coefficients a_n with self = sum a_n (q-1)^n, n < K-1."""
        return tuple(
            sum(c * comb(i, n) for i, c in enumerate(self.coeffs))
            for n in range(self.K - 1)
        )

    def h_valuation(self) -> int | float:
        """Largest j with (q-1)^j dividing self; inf for zero."""
        if self.is_zero():
            return inf
        v = 0
        cur = self
        while True:
            try:
                cur = divide_by_h(cur)
            except NotDivisibleError:
                return v
            v += 1

    def to_complex(self) -> complex:
        """Floating-point evaluation at q = exp(2*pi*i/K)."""
        w = cmath.exp(2j * cmath.pi / self.K)
        return sum(c * w**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"K": self.K, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        return f"CycInt(K={self.K}, coeffs={self.coeffs})"


def qpow(e: int, K: int) -> CycInt:
    """The monomial q^(e mod K)."""
    arr = [0] * K
    arr[e % K] = 1
    return CycInt(K, _reduce(K, arr))


def h_element(K: int) -> CycInt:
    """h = q - 1."""
    return qpow(1, K) - 1


def from_h_basis(K: int, coeffs) -> CycInt:
    """Inverse of CycInt.to_h_basis: sum coeffs[n] * (q-1)^n."""
    # Horner evaluation over plain integer polynomials; degree stays < K-1.
    poly = [0]
    for b in reversed(list(coeffs)):
        # poly := poly * (x - 1) + b
        shifted = [0] + poly
        poly = [s - p for s, p in zip(shifted, poly + [0])]
        poly[0] += b
    poly += [0] * (K - 1 - len(poly))
    return CycInt(K, _reduce(K, poly))


def half_power(K: int) -> CycInt:
    """The canonical square root of q: q^(1/2) = -q^(2*), (q^(1/2))^2 = q."""
    return -qpow(mod_inverse(2, K), K)


def qpow_half(e: int, K: int) -> CycInt:
    """q^(e/2) for an odd integer e, via (q^(1/2))^e = -q^(2* e)."""
    if e % 2 == 0:
        return qpow(e // 2, K)
    return -qpow(mod_inverse(2, K) * e, K)


def quarter_power(e: int, K: int) -> CycInt:
    """q^(e/4) with integer result exponent 4* e mod K."""
    return qpow(mod_inverse(4, K) * e, K)


def divide_by_h(a: CycInt) -> CycInt:
    """Exact division by h = q - 1.

    a is divisible iff its coefficient sum vanishes mod K (evaluation at
    q = 1 lands in Z/K since the cyclotomic polynomial evaluates to K).
    """
    K = a.K
    s = sum(a.coeffs)
    if s % K != 0:
        raise NotDivisibleError("element is not divisible by q - 1")
    t = s // K
    # Subtract t * (1 + q + ... + q^(K-1)), then divide the lift by (x - 1).
    b = [c - t for c in a.coeffs] + [-t]
    quot = [0] * (K - 1)
    acc = 0
    for d in range(K - 1, 0, -1):
        acc += b[d]
        quot[d - 1] = acc
    return CycInt(K, tuple(quot))


def divide_exact(a: CycInt, b: CycInt) -> CycInt:
    """Exact quotient a / b in Z[q], or NotDivisibleError.

    Solves the linear system over the rationals (multiplication by b is a
    square integer matrix) and verifies the solution is integral.
    """
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero in Z[q]")
    K = a.K
    n = K - 1
    cols = [(b * qpow(j, K)).coeffs for j in range(n)]
    # Augmented matrix rows over Fraction: M[i][j] = cols[j][i].
    rows = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(a.coeffs[i])]
            for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise NotDivisibleError("singular multiplication matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    sol = [rows[i][n] for i in range(n)]
    if any(x.denominator != 1 for x in sol):
        raise NotDivisibleError("quotient exists only in Q(q)")
    c = CycInt(K, tuple(x.numerator for x in sol))
    if b * c != a:
        raise NotDivisibleError("verification of exact quotient failed")
    return c


def congruent_to_order(a: CycInt, b: CycInt, j: int) -> bool:
    """True iff a - b lies in the ideal (q-1)^j."""
    return (a - b).h_valuation() >= j


@dataclass(frozen=True)
class GaussElement:
    """The sum G_p = sum_{g=1..K} q^(p g^2), an exact stand-in for
    sqrt(K) times an eighth-root phase.  Satisfies G_p * conj(G_p) = K."""

    p: int
    K: int
    value: CycInt

    def conj_value(self) -> CycInt:
        return self.value.conj()


def gauss_element(p: int, K: int) -> GaussElement:
    require_odd_prime(K)
    if p % K == 0:
        raise ValueError(f"p = {p} is divisible by K = {K}")
    arr = [0] * K
    for g in range(1, K + 1):
        arr[p * g * g % K] += 1
    return GaussElement(p, K, CycInt(K, _reduce(K, arr)))


def divide_by_gauss(a: CycInt, g: GaussElement) -> CycInt:
    """Exact a / G_p, using G_p * conj(G_p) = K."""
    num = a * g.value.conj()
    if any(c % g.K != 0 for c in num.coeffs):
        raise NotDivisibleError("element is not divisible by the Gauss element")
    return CycInt(g.K, tuple(c // g.K for c in num.coeffs))
