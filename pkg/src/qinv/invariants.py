"""Quantum invariants of manifolds given by surgery on algebraically split
framed unknots, with optional embedded colored unknots.

The SO(3) invariant is computed exactly in Z[q] by iterating the one-knot
surgery step: sum the colored Jones values over odd colors, then resolve
the sqrt(K)-and-phase normalization by exact division with a Gauss element.
The full SU(2) invariant is numeric only (it lives outside Z[q]) and is
normalized so that any surgery presentation of S^3 evaluates to 1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import gcd, prod

from .cyclotomic import (
    CycInt,
    divide_by_gauss,
    divide_exact,
    gauss_element,
    qpow,
    qpow_half,
)
from .numtheory import kappa, legendre, mod_inverse, require_odd_prime


class HypothesisError(ArithmeticError):
    """The odd prime divides the order of first homology (or a framing);
    the congruence theorems make no claim, so checks should be skipped."""


@dataclass(frozen=True)
class SurgeryPresentation:
    """Split framed unknots to be surgered, plus embedded colored unknots.

    framings are the nonzero self-linking numbers; embedded holds odd
    colors of split 0-framed unknots left in the resulting manifold.
    """

    framings: tuple[int, ...] = ()
    embedded: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "framings", tuple(int(p) for p in self.framings))
        object.__setattr__(self, "embedded", tuple(int(a) for a in self.embedded))
        if any(p == 0 for p in self.framings):
            raise ValueError("framing 0 does not yield a rational homology sphere")
        if any(a <= 0 or a % 2 == 0 for a in self.embedded):
            raise ValueError("embedded unknot colors must be odd and positive")

    @property
    def h1(self) -> int:
        return prod(abs(p) for p in self.framings)

    @property
    def signature(self) -> int:
        return sum(1 if p > 0 else -1 for p in self.framings)

    @classmethod
    def from_json(cls, data: dict) -> "SurgeryPresentation":
        return cls(
            tuple(data["surgery_unknot_framings"]),
            tuple(data.get("embedded_unknot_colors", ())),
        )

    def to_json(self) -> dict:
        out = {"surgery_unknot_framings": list(self.framings)}
        if self.embedded:
            out["embedded_unknot_colors"] = list(self.embedded)
        return out


def quantum_integer(beta: int, K: int) -> CycInt:
    """[beta] = q^((b-1)/2) + q^((b-3)/2) + ... + q^(-(b-1)/2), odd beta."""
    if beta % 2 == 0:
        raise ValueError("exact quantum integers need odd colors")
    acc = CycInt.zero(K)
    for j in range(beta):
        acc = acc + qpow((beta - 1) // 2 - j, K)
    return acc


def jones_framed_unknot(beta: int, p: int, K: int) -> CycInt:
    """Colored Jones value of a framed unknot: q^(p (b^2-1)/4) [b].

    The framing exponent is an integer because 8 divides b^2 - 1 for odd b.
    """
    if not 0 < beta < K:
        raise ValueError(f"color must satisfy 0 < beta < K, got {beta}")
    if beta % 2 == 0:
        raise ValueError("the exact path accepts odd colors only")
    return qpow(p * (beta * beta - 1) // 4, K) * quantum_integer(beta, K)


def jones_split_union(components, K: int) -> CycInt:
    """Product of framed-unknot values over a split union; empty -> 1."""
    acc = CycInt.one(K)
    for beta, p in components:
        acc = acc * jones_framed_unknot(beta, p, K)
    return acc


def color_measure(beta: int, K: int) -> CycInt:
    """q^(b/2) - q^(-b/2) as an exact element, odd beta."""
    return qpow_half(beta, K) - qpow_half(-beta, K)


def lens_zprime_closed(p: int, K: int) -> CycInt:
    """Closed form of the SO(3) invariant of the lens space L(p, 1)."""
    require_odd_prime(K)
    if p % K == 0:
        raise HypothesisError(f"K = {K} divides p = {p}")
    s = 1 if p > 0 else -1
    i2 = mod_inverse(2, K)
    i4 = mod_inverse(4, K)
    ps = mod_inverse(p, K)
    num = qpow(i2 * ps, K) - qpow(-i2 * ps, K)
    den = qpow(i2, K) - qpow(-i2, K)
    ratio = divide_exact(num, den)
    return legendre(abs(p), K) * s * qpow(i4 * (p + 2 * ps - 3 * s), K) * ratio


def _surgery_step_factor(f: int, K: int) -> CycInt:
    """Exact contribution of one surgered framed unknot.

    Sums the colored Jones values against the color measure over odd colors,
    divides by the Gauss element (replacing K^(1/2) and its phase), and
    applies the sign, Legendre and quarter-power normalization.  The global
    power of q is pinned by the lens-space closed form.
    """
    if f % K == 0:
        raise HypothesisError(f"K = {K} divides framing {f}")
    s = 1 if f > 0 else -1
    total = CycInt.zero(K)
    for beta in range(1, K, 2):
        total = total + color_measure(beta, K) * jones_framed_unknot(beta, f, K)
    t = divide_by_gauss(total, gauss_element(f, K))
    return legendre(abs(f), K) * s * qpow(3 * mod_inverse(4, K) * s, K) * t


def so3_Zprime(pres: SurgeryPresentation, K: int) -> CycInt:
    """Exact SO(3) invariant of the presented manifold (and embedded link).

    K must be an odd prime not dividing the order of first homology.
    """
    require_odd_prime(K)
    if gcd(pres.h1, K) != 1:
        raise HypothesisError(f"K = {K} divides h1 = {pres.h1}")
    acc = CycInt.one(K)
    for f in pres.framings:
        acc = acc * _surgery_step_factor(f, K)
    for alpha in pres.embedded:
        acc = acc * quantum_integer(alpha, K)
    return acc


def extract_a_n(z: CycInt) -> tuple[int, ...]:
    """Integer coefficients of the (q-1)-basis expansion of an invariant."""
    return z.to_h_basis()


# --- numeric SU(2) side -----------------------------------------------------

def _jones_unknot_numeric(beta: int, p: int, K: int) -> complex:
    q_quarter = cmath.exp(cmath.pi * 0.5j / K)
    qint = cmath.sin(cmath.pi * beta / K).real / cmath.sin(cmath.pi / K).real
    return q_quarter ** (p * (beta * beta - 1)) * qint


def _color_measure_numeric(beta: int, K: int) -> complex:
    return 2j * cmath.sin(cmath.pi * beta / K)


def _component_sum_numeric(f: int, K: int) -> complex:
    return sum(
        _color_measure_numeric(b, K) * _jones_unknot_numeric(b, f, K)
        for b in range(1, K)
    )


def wrt_Z_numeric(pres: SurgeryPresentation, K: int) -> complex:
    """Full SU(2) invariant, floating point, normalized so Z(S^3) = 1.

    Each surgered component is normalized by the corresponding +1- or
    -1-framed unknot sum, which is the standard way to cancel the overall
    Gaussian prefactors for a diagonal linking matrix.  K only needs to be
    odd >= 3 here.
    """
    if K < 3 or K % 2 == 0:
        raise ValueError("K must be an odd integer >= 3")
    norm = {1: _component_sum_numeric(1, K), -1: _component_sum_numeric(-1, K)}
    z = 1 + 0j
    for f in pres.framings:
        z *= _component_sum_numeric(f, K) / norm[1 if f > 0 else -1]
    for alpha in pres.embedded:
        z *= cmath.sin(cmath.pi * alpha / K) / cmath.sin(cmath.pi / K)
    return z


def su2_bridge_gap(pres: SurgeryPresentation, K: int) -> float:
    """|Z - Z(M;3) Z'| (or the conjugate branch for K = 1 mod 4).

    The K = 3 factor is the empty-link invariant of the same surgery
    diagram; embedded colors enter only on the K side.
    """
    require_odd_prime(K)
    z_full = wrt_Z_numeric(pres, K)
    z3 = wrt_Z_numeric(SurgeryPresentation(pres.framings), 3)
    if kappa(K) == 1:
        z3 = z3.conjugate()
    zp = so3_Zprime(pres, K).to_complex()
    return abs(z_full - z3 * zp)


def symmetry_principle_check(beta: int, p: int, K: int, tol: float = 1e-9) -> bool:
    """Numeric check of the color-reversal symmetry for a framed unknot:
    J_(K-beta) = i^(kappa p) (-1)^(p beta) J_beta."""
    if not 0 < beta < K:
        raise ValueError("color out of range")
    lhs = _jones_unknot_numeric(K - beta, p, K)
    phase = (1j ** (kappa(K) * p)) * (-1) ** (p * beta)
    rhs = phase * _jones_unknot_numeric(beta, p, K)
    return abs(lhs - rhs) < tol
