"""Casson-Walker invariants from the surgery recursion, cross-checked
against the first lambda coefficient of the same manifolds.

Run: python3 demos/casson_walker.py
"""

from qinv import (
    casson_walker_lens,
    presentation_lambda_series,
    SurgeryPresentation,
)

print("lens spaces L(p,1):")
for p in range(-6, 7):
    if p == 0:
        continue
    cw = casson_walker_lens(p)
    # Independent cross-check: lambda_1 of the stationary-phase series is
    # 3 lambda_CW / h1.
    series = presentation_lambda_series((-p,), 3)
    assert series.lam[1] == 3 * cw / abs(p)
    print(f"  p = {p:>3}: lambda_CW = {cw}")

print()
print("connected sums (invariant is additive):")
for framings in [(-2, -3), (-2, -5), (-3, -3, -5)]:
    pres = SurgeryPresentation(framings)
    cw = sum(casson_walker_lens(-f) for f in framings)
    series = presentation_lambda_series(framings, 3)
    assert series.lam[1] == 3 * cw / pres.h1
    print(f"  framings {framings}: lambda_CW = {cw}")
