"""Elementary modular arithmetic over an odd prime K.

Legendre symbols, canonical modular inverses, the sign kappa(K), integer
lifts of rationals modulo K^(N+1) and K-adic valuations.  Everything works
on arbitrary-precision integers and exact fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class NotCoprimeError(ArithmeticError):
    """A modular inverse was requested for a non-invertible residue."""


def is_odd_prime(k: int) -> bool:
    """Trial-division primality check, restricted to odd primes >= 3."""
    if k < 3 or k % 2 == 0:
        return False
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(k: int) -> int:
    if not is_odd_prime(k):
        raise ValueError(f"expected an odd prime, got {k}")
    return k


def legendre(x: int, k: int) -> int:
    """Legendre symbol (x / k) for an odd prime k.

    Returns 0 when k divides x, +1 for nonzero quadratic residues,
    -1 otherwise.
    """
    r = pow(x % k, (k - 1) // 2, k)
    return r - k if r > 1 else r


def mod_inverse(n: int, m: int) -> int:
    """Inverse of n modulo m, canonical representative in [0, m)."""
    try:
        return pow(n, -1, m)
    except ValueError:
        raise NotCoprimeError(f"{n} is not invertible modulo {m}") from None


def kappa(k: int) -> int:
    """+1 if k = 1 (mod 4), -1 if k = 3 (mod 4); k must be odd."""
    if k % 2 == 0:
        raise ValueError("kappa is defined for odd k only")
    return 1 if k % 4 == 1 else -1


def remainder_mod(x: Fraction | int, k: int, n: int) -> int:
    """Integer lift of the rational x modulo k^(n+1).

    The denominator of x must be coprime to k; the result r satisfies
    r * den(x) = num(x) (mod k^(n+1)) and lies in [0, k^(n+1)).
    """
    x = Fraction(x)
    if gcd(x.denominator, k) != 1:
        raise NotCoprimeError(f"denominator of {x} is divisible by {k}")
    m = k ** (n + 1)
    return x.numerator * mod_inverse(x.denominator, m) % m


def padic_valuation(x: Fraction | int, k: int) -> int:
    """Exponent v with x = k^v * u, u a k-adic unit.  x must be nonzero."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero is +infinity; handle separately")

    def _vp(n: int) -> int:
        v = 0
        while n % k == 0:
            n //= k
            v += 1
        return v

    return _vp(x.numerator) - _vp(x.denominator)
