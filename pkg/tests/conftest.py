"""Shared independent oracles for the test suite.

These deliberately avoid the library's own sieve/Miller-Rabin paths: trial
division is the reference for primality and window contents, so the fast
implementations are always checked against something slower but obvious.
"""

import math

import pytest


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def trial_primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi) if trial_is_prime(n)]


@pytest.fixture(scope="session")
def fixture_rows():
    from gapforge import load_record_table

    return load_record_table()
