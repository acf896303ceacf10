"""Gauss sum playground: the odd-color sums X and Y, their closed forms,
and the way Y vanishes to high order in q - 1.

Run: python3 demos/gauss_sums.py
"""

from qinv import (
    gauss_element,
    gauss_sum_X,
    gauss_sum_X_closed,
    gauss_sum_Y,
    gauss_integral_Y,
)

K = 13
p = 3

# The Gauss element is an exact stand-in for sqrt(K) times a phase; its
# product with its conjugate is the prime itself.
g = gauss_element(p, K)
print(f"G_{p} * conj(G_{p}) = {(g.value * g.value.conj()).coeffs[0]} (= K = {K})")
print(f"|G_{p}| = {abs(g.value.to_complex()):.6f} (= sqrt({K}) = {K**0.5:.6f})")
print()

# X sums collapse to a single power of q once the Gauss element is divided
# out.  The direct summation and the closed form agree exactly.
for m in range(4):
    x = gauss_sum_X(p, m, K)
    assert x == gauss_sum_X_closed(p, m, K)
    print(f"X(p={p}, m={m}): coefficients {x.coeffs}")
print()

# Y sums are small K-adically: the one with parameter m is divisible by
# (q-1)^m.  Their h-series counterparts vanish to the same order.
for m in range(5):
    y = gauss_sum_Y(p, m, K)
    series = gauss_integral_Y(p, m, 8)
    print(f"Y(p={p}, m={m}): valuation {y.h_valuation()} (>= {m}), "
          f"series starts at h^{series.h_order()}")
