"""Lens space walkthrough: compute the exact SO(3) invariant of L(p, 1)
two independent ways and compare with its lambda-series.

Run: python3 demos/lens_spaces.py
"""

from qinv import (
    SurgeryPresentation,
    extract_a_n,
    lens_zprime_closed,
    so3_Zprime,
    tcc_lens,
)

K = 7
p = 3

print(f"L({p},1) at the prime K = {K}")
print()

# Path one: closed form, a ratio of quantum integers times a phase.
closed = lens_zprime_closed(p, K)
print("closed form coefficients of 1, q, ..., q^(K-2):")
print(" ", closed.coeffs)

# Path two: sum the colored Jones values of a (-p)-framed unknot over odd
# colors and divide by a Gauss element.  Same element of Z[q], exactly.
surgered = so3_Zprime(SurgeryPresentation((-p,)), K)
print("surgery sum coefficients:")
print(" ", surgered.coeffs)
assert closed == surgered

# The same invariant written in the basis of powers of q - 1: these are
# the integers a_n that the congruence theorems talk about.
print()
print("coefficients over powers of q - 1:")
print(" ", extract_a_n(closed))

# The trivial connection contribution knows the same numbers through its
# rational coefficients: lambda_0 is 1/p and lambda_1 is three times the
# Casson-Walker invariant over p.
series = tcc_lens(p, 6)
print()
print("lambda-series of the same manifold:")
for n, c in enumerate(series.lam):
    print(f"  lambda_{n} = {c}")
