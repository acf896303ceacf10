"""Congruence sweep: verify, for a family of surgered manifolds and a list
of odd primes, that the exact invariant matches the lambda-series through
a deep power of q - 1.

Run: python3 demos/congruence_sweep.py
"""

from qinv import SurgeryPresentation, verify_presentation

manifolds = [
    SurgeryPresentation((-2,)),
    SurgeryPresentation((-5,)),
    SurgeryPresentation((-2, -3)),
    SurgeryPresentation((-3, -5)),
    SurgeryPresentation((-2, -7), (3,)),
]
primes = (5, 7, 11, 13)

for pres in manifolds:
    label = f"framings {pres.framings}"
    if pres.embedded:
        label += f", colors {pres.embedded}"
    print(label)
    for K in primes:
        rep = verify_presentation(pres, K)
        if rep.skipped:
            print(f"  K = {K:>2}: skipped ({rep.skip_reason})")
            continue
        print(f"  K = {K:>2}: depth {rep.lawrence_depth_checked}, "
              f"deep congruence {'ok' if rep.lawrence_pass else 'BROKEN'}, "
              f"coefficient congruences {'ok' if rep.ohtsuki_pass else 'BROKEN'}")
    print()
