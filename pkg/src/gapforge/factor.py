"""Exact factorization of 64-bit integers.

Trial division by primes below 10^5 strips small factors; whatever remains
is split recursively by Brent's cycle variant of Pollard rho with batched
gcds, using the deterministic Miller-Rabin test to recognize prime cofactors.
Rho parameters are drawn from a generator seeded by the input, so outputs
are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .sieve import _simple_sieve, is_prime

_TRIAL_LIMIT = 10**5
_trial_primes: list[int] | None = None


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return f"{self.n} = 1"
        parts = [f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors]
        return f"{self.n} = " + " * ".join(parts)


def _trial_division(n: int) -> tuple[dict[int, int], int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = [int(p) for p in _simple_sieve(_TRIAL_LIMIT)]
    found: dict[int, int] = {}
    for p in _trial_primes:
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    return found, n


def _brent_rho(n: int, rng: random.Random) -> int:
    """One Brent-rho attempt: a nontrivial factor of odd composite n, or n."""
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128  # gcd batch size
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        # batched product collapsed; redo the last block one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, out, rng)
        _split(root, out, rng)
        return
    d = n
    while d == n:
        d = _brent_rho(n, rng)
    _split(d, out, rng)
    _split(n // d, out, rng)


def factorize(n: int) -> Factorization:
    """Complete prime-power decomposition of n >= 1 (empty for n = 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Factorization(1, ())
    found, rest = _trial_division(n)
    if rest > 1:
        _split(rest, found, random.Random(n))
    return Factorization(n, tuple(sorted(found.items())))
