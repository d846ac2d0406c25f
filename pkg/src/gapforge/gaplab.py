"""Constructive large-gap runs and the Poisson model for gap statistics.

factorial_run builds the classical guaranteed-composite stretch after m!+1:
each m!+k for 2 <= k <= m is divisible by k, so a gap of at least m opens
wherever m!+1 is prime. The Poisson side compares the empirical distribution
of normalized prime gaps against the partial Poisson sum that models them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .sieve import _iter_segment_primes

FACTORIAL_CEILING = 5000  # desk-scale cap for arbitrary-precision runs


@dataclass(frozen=True)
class CompositeRun:
    start: int  # first guaranteed composite (arbitrary precision)
    length: int
    construction: str  # "factorial"
    witness_divisors: tuple[int, ...]  # witness_divisors[i] divides start + i


class GapBoundCheck(NamedTuple):
    gap_lower: int  # guaranteed run length m
    paper_bound: float  # ln p / ln ln p at p ~ m!+1
    satisfied: bool


class DistributionRow(NamedTuple):
    lam: float
    empirical: float
    poisson_model: float


def factorial_run(m: int) -> CompositeRun:
    """The composite stretch m!+2 ... m!+m (length m-1, witnesses 2..m)."""
    if not 2 <= m <= FACTORIAL_CEILING:
        raise ValueError(f"m must be in [2, {FACTORIAL_CEILING}]")
    start = math.factorial(m) + 2
    return CompositeRun(start, m - 1, "factorial", tuple(range(2, m + 1)))


def verify_run(run: CompositeRun) -> bool:
    """Exact-division check of every witness (no primality tests involved)."""
    return all((run.start + i) % w == 0 for i, w in enumerate(run.witness_divisors))


def factorial_gap_bound_check(m: int) -> GapBoundCheck:
    """Does the guaranteed gap m clear ln p / ln ln p at p = m! + 1?

    ln(m!+1) is lgamma(m+1) up to a correction that only matters for tiny m
    (and decides the m = 3 case, where the bound sits just above 3).
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if m <= 20:
        log_p = math.log(math.factorial(m) + 1)
    else:
        log_p = math.lgamma(m + 1)
    bound = log_p / math.log(log_p)
    return GapBoundCheck(m, bound, m >= bound)


def poisson_tail(lam: float, m: int) -> float:
    """Partial Poisson CDF sum_{k<=m} lam^k e^-lam / k!, by stable recurrence."""
    if lam < 0 or not math.isfinite(lam):
        raise ValueError("lambda must be finite and >= 0")
    if m < 0:
        raise ValueError("m must be >= 0")
    term = math.exp(-lam)
    total = term
    for k in range(m):
        term *= lam / (k + 1)
        total += term
    return min(total, 1.0)


def empirical_gap_distribution(
    limit: int,
    m: int,
    lambda_grid: Sequence[float],
    *,
    bits: int | None = None,
    threads: int = 1,
) -> list[DistributionRow]:
    """Observed tail of normalized gaps vs the Poisson model, per lambda.

    For each index n with p_{n+m} <= limit, the interval after p_n of length
    lambda * ln p_n contains at most m primes exactly when
    (p_{n+m+1} - p_n) / ln p_n > lambda; the fraction of such n (out of
    pi(limit) - m) is paired with the model tail sum_{k<=m} lam^k e^-lam/k!.
    """
    if limit < 10**4:
        raise ValueError("limit must be >= 10^4")
    if m < 0:
        raise ValueError("m must be >= 0")
    grid = np.asarray(sorted(lambda_grid), dtype=float)
    if grid.size == 0:
        return []

    look = m + 1
    bound = np.uint64(limit)
    counts = np.zeros(grid.size, dtype=np.int64)
    pi_limit = 0
    carry = np.empty(0, dtype=np.uint64)
    done = False
    # one prime beyond limit closes the last qualifying gap
    for _, _, primes in _iter_segment_primes(0, limit + 2**21, bits, threads):
        if primes.size == 0:
            continue
        pi_limit += int((primes <= bound).sum())
        arr = np.concatenate([carry, primes]) if carry.size else primes
        if arr.size > look:
            lowers = arr[:-look]
            uppers = arr[look:]
            qual = arr[m : m + lowers.size] <= bound  # p_{n+m} <= limit
            if not bool(qual.all()):
                done = True
                lowers, uppers = lowers[qual], uppers[qual]
            if lowers.size:
                ratios = (uppers - lowers).astype(float) / np.log(lowers.astype(float))
                counts += (ratios[:, None] > grid[None, :]).sum(axis=0)
        carry = arr[-look:] if arr.size >= look else arr
        if done or int(primes[-1]) > limit:
            break

    denom = pi_limit - m
    return [
        DistributionRow(float(lam), float(c) / denom, poisson_tail(float(lam), m))
        for lam, c in zip(grid, counts)
    ]
