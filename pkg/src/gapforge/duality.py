"""Asymptotic maps between the n-th prime and the n-th zeta-zero ordinate.

The two sequences are linked through the factor (ln n)^2 / 2pi: dividing a
zero ordinate's growth law into the n-th prime's growth law leaves exactly
that ratio. The maps here keep only the main term (no effective error bound
exists for the little-o parts), so every comparison against reality is
emitted as a diagnostic with its relative deviation, never asserted.

n = 1 is excluded throughout: ln 1 = 0 makes the inverse map divide by zero.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Sequence

from .zeros import ZetaZero

TWO_PI = 2 * math.pi


class MissingZeroError(LookupError):
    """A requested ordinal is absent from the supplied zero table."""


class DualityRow(NamedTuple):
    n: int
    p_n: int
    gamma_n: float
    ratio: float  # p_n / gamma_n
    predicted_ratio: float  # (ln n)^2 / 2pi
    rel_dev: float  # |ratio - predicted_ratio| / predicted_ratio


def predicted_prime(gamma_n: float, n: int) -> float:
    """Main-term estimate of p_n from the n-th zero ordinate."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if gamma_n <= 0:
        raise ValueError("gamma_n must be positive")
    ln = math.log(n)
    return gamma_n * ln * ln / TWO_PI


def predicted_zero(p_n: int | float, n: int) -> float:
    """Main-term estimate of gamma_n from the n-th prime; exact inverse of
    predicted_prime by construction."""
    if n < 2:
        raise ValueError("n must be >= 2")
    ln = math.log(n)
    return TWO_PI * p_n / (ln * ln)


def duality_table(
    n_values: Sequence[int],
    zeros: Sequence[ZetaZero],
    *,
    prime_at: Callable[[int], int] | None = None,
) -> list[DualityRow]:
    """One diagnostic row per requested n.

    gamma_n is looked up in the supplied zero table (MissingZeroError if
    absent). Primes come from the sieve unless prime_at is given.
    """
    if prime_at is None:
        from .sieve import nth_prime as prime_at  # noqa: F811 - deliberate default

    by_ordinal = {z.ordinal: z.gamma for z in zeros}
    rows = []
    for n in n_values:
        if n < 2:
            raise ValueError("n values must be >= 2")
        if n not in by_ordinal:
            raise MissingZeroError(f"no zero with ordinal {n} in the supplied table")
        p = int(prime_at(n))
        gamma = by_ordinal[n]
        ratio = p / gamma
        predicted = math.log(n) ** 2 / TWO_PI
        rows.append(DualityRow(n, p, gamma, ratio, predicted, abs(ratio - predicted) / predicted))
    return rows


def gap_spacing_residual(
    n: int,
    k: int,
    prime_at: Callable[[int], int],
    zero_at: Callable[[int], float],
) -> float:
    """Zero-spacing minus the prime-gap image under the duality map:

        (gamma_{n+k} - gamma_n) - (p_{n+k} - p_n) * 2pi / (ln n)^2

    Identically zero at k = 0; otherwise a diagnostic of how far the
    main-term correspondence is from exact at finite n.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 0.0
    dgamma = zero_at(n + k) - zero_at(n)
    dprime = prime_at(n + k) - prime_at(n)
    ln = math.log(n)
    return dgamma - dprime * TWO_PI / (ln * ln)
