"""Acceptance sweeps shared by the test suite and the command line.

Each criterion function runs one complete sweep and returns a list of
failure descriptions; an empty list means the criterion passes.  The
sweeps are exact unless a tolerance is stated in the description.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import congruent_to_order, qpow
from .gauss import check_Y_correspondence, gauss_sum_X, gauss_sum_X_closed, gauss_sum_Y
from .hseries import qpow_series, wedge
from .invariants import (
    SurgeryPresentation,
    lens_zprime_closed,
    so3_Zprime,
    su2_bridge_gap,
    symmetry_principle_check,
)
from .numtheory import legendre, mod_inverse, remainder_mod
from .tcc import (
    casson_walker_lens,
    casson_walker_surgery,
    dtable_unknot,
    presentation_lambda_series,
    tcc_lens,
    tcc_surgery,
)
from .verify import check_lawrence, check_ohtsuki

ODD_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)


def criterion_1_gauss_closed_form() -> list[str]:
    """Direct odd-color Gauss sums equal their closed form, exactly,
    for all odd primes K <= 61, |p| <= 8 coprime to K, m <= 6."""
    fails = []
    for K in ODD_PRIMES:
        for p in range(-8, 9):
            if p == 0 or p % K == 0:
                continue
            for m in range(7):
                if gauss_sum_X(p, m, K) != gauss_sum_X_closed(p, m, K):
                    fails.append(f"X sum mismatch at K={K} p={p} m={m}")
    return fails


def criterion_2_Y_smallness_and_correspondence() -> list[str]:
    """Y sums vanish to order >= m in q - 1 and match their series
    counterparts to order m + 4, for K in {3..17}, |p| <= 6, m <= 4."""
    fails = []
    for K in (3, 5, 7, 11, 13, 17):
        for p in range(-6, 7):
            if p == 0 or p % K == 0:
                continue
            for m in range(5):
                if gauss_sum_Y(p, m, K).h_valuation() < m:
                    fails.append(f"Y valuation < {m} at K={K} p={p}")
                if not check_Y_correspondence(p, m, K, m + 3):
                    fails.append(f"Y correspondence fails at K={K} p={p} m={m}")
    return fails


def criterion_3_wedge_of_rational_powers() -> list[str]:
    """wedge(q^(m/n)) agrees with q^(m n*) to order N + 1 for K <= 31,
    |m|, |n| <= 10 with n coprime to K, N <= 4."""
    fails = []
    for K in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        for n in range(1, 11):
            if n % K == 0:
                continue
            ns = mod_inverse(n, K)
            for m in range(-10, 11):
                target = qpow(m * ns, K)
                for N in range(5):
                    w = wedge(qpow_series(Fraction(m, n), N + 1), K, N)
                    if not congruent_to_order(w, target, N + 1):
                        fails.append(f"wedge q^({m}/{n}) fails at K={K} N={N}")
                        break
    return fails


def criterion_4_lens_exactness() -> list[str]:
    """Surgery-sum invariant of L(p, 1) equals the closed form exactly
    for K in {3,5,7,11,13}, |p| <= 12 coprime to K."""
    fails = []
    for K in (3, 5, 7, 11, 13):
        for p in range(-12, 13):
            if p == 0 or p % K == 0:
                continue
            surgered = so3_Zprime(SurgeryPresentation((-p,)), K)
            if surgered != lens_zprime_closed(p, K):
                fails.append(f"lens mismatch at K={K} p={p}")
    return fails


def _two_component_presentations():
    for p1 in (2, 3, 5):
        for p2 in (2, 3, 5):
            yield SurgeryPresentation((-p1, -p2))


def criterion_5_lawrence() -> list[str]:
    """Deep congruence at depth K - 2 for lens spaces and depth
    (K - 3) / 2 for the nine two-component connected sums."""
    fails = []
    for K in (3, 5, 7, 11, 13):
        for p in range(-12, 13):
            if p == 0 or p % K == 0:
                continue
            if not check_lawrence(SurgeryPresentation((-p,)), K, K - 2):
                fails.append(f"lens congruence fails at K={K} p={p}")
    for K in (7, 11, 13):
        for pres in _two_component_presentations():
            if not check_lawrence(pres, K, (K - 3) // 2):
                fails.append(f"congruence fails at K={K} framings={pres.framings}")
    return fails


def criterion_6_ohtsuki_low_coefficients() -> list[str]:
    """Per-coefficient congruence, plus the closed forms of a_0 and a_1
    via the homology order and the Casson-Walker recursion."""
    fails = []
    families = []
    for K in (3, 5, 7, 11, 13):
        for p in range(-12, 13):
            if p != 0 and p % K:
                families.append((K, SurgeryPresentation((-p,)), casson_walker_lens(p)))
    for K in (7, 11, 13):
        for pres in _two_component_presentations():
            cw = sum(casson_walker_lens(-f) for f in pres.framings)
            families.append((K, pres, cw))
    for K, pres, cw in families:
        if not check_ohtsuki(pres, K):
            fails.append(f"coefficient congruence fails at K={K} {pres.framings}")
        z = so3_Zprime(pres, K)
        a = z.to_h_basis()
        lh = legendre(pres.h1, K)
        if (a[0] - lh * mod_inverse(pres.h1, K)) % K:
            fails.append(f"a_0 fails at K={K} {pres.framings}")
        lam1 = 3 * cw / pres.h1
        if (a[1] - lh * remainder_mod(lam1, K, 0)) % K:
            fails.append(f"a_1 fails at K={K} {pres.framings}")
    return fails


def criterion_7_tcc_consistency() -> list[str]:
    """Surgery-formula lambda-series of the unknot equals the lens
    closed-form series through h^8 for |p| <= 9, exactly."""
    fails = []
    for p in range(-9, 10):
        if p == 0:
            continue
        via_surgery = tcc_surgery(dtable_unknot(p), 9)
        closed = tcc_lens(-p, 9)
        if via_surgery.lam != closed.lam:
            fails.append(f"lambda-series mismatch at p={p}")
    return fails


def criterion_8_casson_walker() -> list[str]:
    """The surgery recursion gives 0 on S^3 presentations and a first
    Ohtsuki coefficient lambda_1 = 3 lambda_CW / h1."""
    fails = []
    for p in (1, -1):
        if casson_walker_lens(p) != 0:
            fails.append(f"lambda_CW(L({p},1)) != 0")
    if casson_walker_surgery(0, 1, 0, 1) + casson_walker_surgery(0, 1, 0, -1) != 0:
        fails.append("p = +1 and p = -1 recursions do not cancel")
    for framings in [(-p,) for p in range(2, 10)] + [(-2, -3), (-3, -5), (-2, -2)]:
        pres = SurgeryPresentation(framings)
        series = presentation_lambda_series(pres.framings, 4)
        cw = sum(casson_walker_lens(-f) for f in framings)
        if series.lam[1] != 3 * cw / pres.h1:
            fails.append(f"lambda_1 mismatch for framings {framings}")
    return fails


def criterion_9_numeric_bridge_and_symmetry() -> list[str]:
    """Full numeric invariant factors through the K = 3 value and the
    exact odd-color invariant (tolerance 1e-9); color-reversal symmetry
    of framed unknot values (tolerance 1e-9)."""
    fails = []
    for K in (5, 7, 11, 13):
        for p in range(-12, 13):
            if p == 0 or p % K == 0:
                continue
            gap = su2_bridge_gap(SurgeryPresentation((-p,)), K)
            if gap >= 1e-9:
                fails.append(f"bridge gap {gap:.2e} at K={K} p={p}")
    for K in (3, 5, 7, 11, 13):
        for p in range(-3, 4):
            for beta in range(1, K):
                if not symmetry_principle_check(beta, p, K):
                    fails.append(f"symmetry fails at K={K} p={p} beta={beta}")
    return fails


CRITERIA = (
    ("gauss closed form, K <= 61", criterion_1_gauss_closed_form),
    ("Y smallness and correspondence", criterion_2_Y_smallness_and_correspondence),
    ("wedge of rational q-powers", criterion_3_wedge_of_rational_powers),
    ("lens space exactness", criterion_4_lens_exactness),
    ("deep congruence sweep", criterion_5_lawrence),
    ("coefficient congruences a_0, a_1", criterion_6_ohtsuki_low_coefficients),
    ("lambda-series surgery consistency", criterion_7_tcc_consistency),
    ("Casson-Walker recursion", criterion_8_casson_walker),
    ("numeric bridge and symmetry, tol 1e-9", criterion_9_numeric_bridge_and_symmetry),
)


def run_all(report=print) -> bool:
    """Run every criterion, emit one pass/fail line each, return overall."""
    ok = True
    for i, (label, fn) in enumerate(CRITERIA, start=1):
        fails = fn()
        status = "PASS" if not fails else "FAIL"
        report(f"criterion {i} [{label}]: {status}")
        for msg in fails[:5]:
            report(f"  - {msg}")
        if len(fails) > 5:
            report(f"  ... and {len(fails) - 5} more")
        ok = ok and not fails
    return ok
