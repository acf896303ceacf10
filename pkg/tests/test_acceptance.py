"""Acceptance gate: every sweep from the package selftest, one printed
pass/fail line per criterion.  Run with pytest -s to see the lines."""

import pytest

from qinv.selftest import CRITERIA


@pytest.mark.parametrize(
    "number,label,criterion",
    [(i, label, fn) for i, (label, fn) in enumerate(CRITERIA, start=1)],
    ids=[f"criterion_{i}" for i in range(1, len(CRITERIA) + 1)],
)
def test_acceptance_criterion(number, label, criterion):
    fails = criterion()
    print(f"criterion {number} [{label}]: {'PASS' if not fails else 'FAIL'}")
    assert not fails, fails[:10]
