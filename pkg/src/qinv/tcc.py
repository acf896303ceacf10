"""The trivial-connection side: Ohtsuki lambda-series via the stationary
phase surgery formula, the lens-space closed form, knot expansion tables,
Alexander polynomial data and the Casson-Walker surgery recursion.

All series carry exact rational coefficients; the lambda-series of a
manifold of homology order h1 is the series h1^(1/2) Z^tr with lambda_0 =
1/h1, and its coefficient denominators only involve 2 and h1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .hseries import HSeries, default_trunc, qpow_series
from .gauss import gauss_integral_Y


def _denominator_supported(den: int, h1: int) -> bool:
    """True iff every prime factor of den divides 2 * h1."""
    m = 2 * h1
    while den != 1:
        g = gcd(den, m)
        if g == 1:
            return False
        while den % g == 0:
            den //= g
    return True


@dataclass(frozen=True)
class OhtsukiSeries:
    """Truncated lambda-series of a rational homology sphere."""

    h1: int
    lam: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(Fraction(c) for c in self.lam))
        if self.h1 <= 0:
            raise ValueError("h1 must be a positive integer")
        if self.lam and self.lam[0] != Fraction(1, self.h1):
            raise ValueError(
                f"lambda_0 = {self.lam[0]} but 1/h1 = 1/{self.h1}"
            )
        for c in self.lam:
            if not _denominator_supported(c.denominator, self.h1):
                raise ValueError(
                    f"coefficient {c} has denominator outside Z[1/2, 1/{self.h1}]"
                )

    @property
    def order(self) -> int:
        return len(self.lam)

    def series(self) -> HSeries:
        return HSeries(self.lam)

    def to_json(self) -> dict:
        return {"h1": self.h1, "lambda": [str(c) for c in self.lam]}


@dataclass(frozen=True)
class DTable:
    """Finitely supported coefficients d[m; n] describing the expansion of a
    homologically trivial framed knot in a rational homology sphere, in
    powers of (q^(b/2) - q^(-b/2)) and h."""

    h1M: int
    self_linking: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        fixed = {}
        for (m, n), d in self.entries.items():
            d = Fraction(d)
            if d == 0:
                continue
            if m < 0 or n < 0:
                raise ValueError("table indices must be nonnegative")
            if not _denominator_supported(d.denominator, self.h1M):
                raise ValueError(f"entry {d} has denominator outside Z[1/2, 1/{self.h1M}]")
            fixed[(int(m), int(n))] = d
        object.__setattr__(self, "entries", fixed)
        if self.h1M <= 0:
            raise ValueError("h1M must be positive")

    @classmethod
    def from_json(cls, data: dict) -> "DTable":
        entries = {
            (e["m"], e["n"]): Fraction(e["d"]) for e in data.get("entries", ())
        }
        return cls(data["h1M"], data["self_linking"], entries)

    def to_json(self) -> dict:
        return {
            "h1M": self.h1M,
            "self_linking": self.self_linking,
            "entries": [
                {"m": m, "n": n, "d": str(d)}
                for (m, n), d in sorted(self.entries.items())
            ],
        }


@dataclass(frozen=True)
class AlexanderData:
    """Alexander polynomial of a knot in a QHS, normalized symmetrically:
    constant term h1M, higher data as coefficients of (t^(1/2)-t^(-1/2))^(2m)."""

    h1M: int
    a: tuple[int, ...] = ()


def dtable_unknot(self_linking: int = 0) -> DTable:
    """Expansion table of the unknot in S^3: the single entry d[0; 0] = 1."""
    return DTable(1, self_linking, {(0, 0): Fraction(1)})


def tcc_lens(p: int, trunc: int | None = None) -> OhtsukiSeries:
    """Lambda-series of the lens space L(p, 1) from its closed form:
    sign(p) q^((p + 2/p - 3 sign(p))/4) (q^(1/2p) - q^(-1/2p))/(q^(1/2) - q^(-1/2))."""
    if p == 0:
        raise ValueError("p must be nonzero")
    if trunc is None:
        trunc = default_trunc()
    s = 1 if p > 0 else -1
    work = trunc + 1
    num = qpow_series(Fraction(1, 2 * p), work) - qpow_series(Fraction(-1, 2 * p), work)
    den = qpow_series(Fraction(1, 2), work) - qpow_series(Fraction(-1, 2), work)
    ratio = num.shift_down(1) / den.shift_down(1)
    pref = qpow_series(Fraction(p, 4) + Fraction(2, 4 * p) - Fraction(3 * s, 4), work)
    lam = (s * pref * ratio).truncate(trunc)
    return OhtsukiSeries(abs(p), lam.coeffs)


def tcc_surgery(d: DTable, trunc: int | None = None) -> OhtsukiSeries:
    """Lambda-series of the manifold obtained by surgery on the knot
    described by the table, via the stationary-phase formula.

    Every emitted coefficient is exact: entries with m + n beyond the
    truncation only contribute at dropped orders because the normalized
    Gaussian bracket vanishes to order >= m.
    """
    p = d.self_linking
    if p == 0:
        raise ValueError("self-linking 0 does not produce a rational homology sphere")
    if trunc is None:
        trunc = default_trunc()
    s = 1 if p > 0 else -1
    acc = HSeries.zero(trunc)
    y_cache: dict[int, HSeries] = {}
    for (m, n), coeff in sorted(d.entries.items()):
        if n >= trunc:
            continue
        if m not in y_cache:
            y_cache[m] = gauss_integral_Y(p, m, trunc)
        acc = acc + (coeff * y_cache[m]).mul_h_power(n)
    pref = qpow_series(Fraction(2 - p + 3 * s, 4), trunc)
    lam = -s * pref * acc
    return OhtsukiSeries(abs(p) * d.h1M, lam.coeffs)


def connected_sum(s1: OhtsukiSeries, s2: OhtsukiSeries) -> OhtsukiSeries:
    """Lambda-series multiply and homology orders multiply."""
    prod = s1.series() * s2.series()
    return OhtsukiSeries(s1.h1 * s2.h1, prod.coeffs)


def sphere_series(trunc: int | None = None) -> OhtsukiSeries:
    if trunc is None:
        trunc = default_trunc()
    return OhtsukiSeries(1, (Fraction(1),) + (Fraction(0),) * (trunc - 1))


def presentation_lambda_series(framings, trunc: int | None = None) -> OhtsukiSeries:
    """Lambda-series of surgery on split framed unknots: a connected sum of
    lens spaces L(-f, 1), one per framing f."""
    if trunc is None:
        trunc = default_trunc()
    acc = sphere_series(trunc)
    for f in framings:
        acc = connected_sum(acc, tcc_lens(-f, trunc))
    return acc


def alexander_second_derivative(a: AlexanderData) -> Fraction:
    """Second derivative of the Alexander polynomial at t = 1; only the
    (t^(1/2) - t^(-1/2))^2 term survives."""
    return Fraction(2 * a.a[0]) if a.a else Fraction(0)


def casson_walker_surgery(
    lam_cw_ambient: Fraction | int,
    h1M: int,
    delta_pp: Fraction | int,
    p: int,
) -> Fraction:
    """Casson-Walker invariant after surgery on a homologically trivial
    knot with self-linking p, from the ambient invariant and the second
    derivative of the knot's Alexander polynomial at 1."""
    if p == 0:
        raise ValueError("p must be nonzero")
    s = 1 if p > 0 else -1
    return (
        Fraction(s, 4)
        - Fraction(p, 12)
        - Fraction(1, 6 * p)
        - Fraction(1, p) * Fraction(delta_pp) / h1M
        + Fraction(lam_cw_ambient)
    )


def casson_walker_lens(p: int) -> Fraction:
    """Casson-Walker invariant of L(p, 1): surgery on the unknot in S^3
    with self-linking -p."""
    return casson_walker_surgery(0, 1, 0, -p)
