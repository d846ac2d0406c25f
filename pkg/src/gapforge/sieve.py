"""Prime generation, primality testing, counting, and the maximal-gap record scan.

Everything here works on 64-bit ranges. The workhorse is an odd-only
segmented sieve of Eratosthenes over numpy bitsets; segment boundaries lie
on a fixed global grid so that a scan can be checkpointed at any boundary
and resumed bit-identically.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

# Hard ceiling for any scan position (guards wheel/start-index arithmetic
# near the top of the 64-bit range).
SCAN_LIMIT = 2**64 - 2**33

# Default segment size: 2^22 odd-only bitset entries (covers 2^23 integers),
# sized for L2-cache residency. Override per call or via environment.
DEFAULT_SEGMENT_BITS = 22
SEGMENT_BITS_ENV = "GAPFORGE_SEGMENT_BITS"

CHECKPOINT_VERSION = "v1"


class RangeTooLargeError(ValueError):
    """Requested window exceeds the configured segment memory budget."""


class CheckpointMismatchError(ValueError):
    """Checkpoint is inconsistent with the requested scan."""


class ScanLimitError(OverflowError):
    """A sieve range estimate exceeds the 64-bit scan limit."""


@dataclass(frozen=True)
class GapRecord:
    """A first-occurrence maximal prime gap: gap = next_prime - lower_prime."""

    index: int
    gap: int
    lower_prime: int


@dataclass(frozen=True)
class ScanCheckpoint:
    """Resumable scan state, valid at a segment boundary.

    ``records`` holds every record found below ``position`` regardless of any
    scan limit, so a checkpoint can be resumed toward a larger limit.
    """

    position: int
    last_prime: int
    records: tuple[GapRecord, ...] = field(default_factory=tuple)


def segment_bits() -> int:
    """Configured odd-entry segment exponent (env override wins)."""
    raw = os.environ.get(SEGMENT_BITS_ENV)
    if raw is not None:
        bits = int(raw)
        if not 14 <= bits <= 28:
            raise ValueError(f"{SEGMENT_BITS_ENV} must be in [14, 28], got {bits}")
        return bits
    return DEFAULT_SEGMENT_BITS


def _span(bits: int | None) -> int:
    return 2 ** ((segment_bits() if bits is None else bits) + 1)


# --- base primes ------------------------------------------------------------

_base_cache: dict[str, np.ndarray] = {}


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit by a plain bool-array sieve (int64 output)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _base_primes(limit: int) -> np.ndarray:
    """Primes <= limit, cached and grown monotonically."""
    cached = _base_cache.get("primes")
    if cached is None or _base_cache["limit"] < limit:
        cached = _simple_sieve(max(limit, 1 << 10))
        _base_cache["primes"] = cached
        _base_cache["limit"] = int(max(limit, 1 << 10))
    hi = int(np.searchsorted(cached, limit, side="right"))
    return cached[:hi]


# --- single-segment sieve ---------------------------------------------------


def _odd_segment_mask(lo: int, hi: int, odd_base: np.ndarray) -> tuple[int, np.ndarray]:
    """Compositeness mask for odd numbers in [lo, hi).

    Returns (first_odd, mask) where mask[i] is True iff first_odd + 2i is
    prime-candidate (survives the odd base primes).
    """
    first = max(lo, 3)
    if first % 2 == 0:
        first += 1
    count = max(0, (hi - first + 1) // 2)
    mask = np.ones(count, dtype=bool)
    if count == 0:
        return first, mask
    for p in odd_base:
        p = int(p)
        start = p * p
        if start >= hi:
            break
        if start < first:
            start = ((first + p - 1) // p) * p
            if start % 2 == 0:
                start += p
            if start >= hi:
                continue
        mask[(start - first) // 2 :: p] = False
    return first, mask


def _segment_primes(lo: int, hi: int, odd_base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi) as a uint64 array, given odd base primes."""
    first, mask = _odd_segment_mask(lo, hi, odd_base)
    idx = np.flatnonzero(mask).astype(np.uint64)
    primes = np.uint64(first) + np.uint64(2) * idx
    if lo <= 2 < hi:
        primes = np.concatenate(([np.uint64(2)], primes))
    return primes


def sieve_segment(lo: int, hi: int, *, bits: int | None = None) -> np.ndarray:
    """Exactly the primes p with lo <= p < hi, ascending (uint64 array).

    Base primes up to sqrt(hi) are computed internally. The window must fit
    the configured segment budget; chunk larger ranges via the scan APIs.
    """
    if not 0 <= lo < hi:
        raise ValueError(f"need 0 <= lo < hi, got ({lo}, {hi})")
    if hi > SCAN_LIMIT:
        raise ValueError(f"hi exceeds the 64-bit scan limit {SCAN_LIMIT}")
    if hi - lo > _span(bits):
        raise RangeTooLargeError(
            f"window of {hi - lo} exceeds segment budget {_span(bits)}; chunk the range"
        )
    base = _base_primes(math.isqrt(hi - 1))
    return _segment_primes(lo, hi, base[1:] if base.size else base)


def _segment_starts(start: int, stop: int, bits: int | None):
    """Global-grid segment boundaries covering [start, stop)."""
    span = _span(bits)
    lo = (start // span) * span
    while lo < stop:
        yield max(lo, start), min(lo + span, stop)
        lo += span


def _iter_segment_primes(start: int, stop: int, bits: int | None, threads: int = 1):
    """Yield (lo, hi, primes) per grid segment of [start, stop), in order.

    With threads > 1, segments are sieved concurrently but always yielded in
    ascending order, so downstream results are thread-count invariant.
    """
    base = _base_primes(math.isqrt(max(stop - 1, 0)))
    odd_base = base[1:] if base.size else base
    segs = list(_segment_starts(start, stop, bits))
    if threads <= 1 or len(segs) <= 1:
        for lo, hi in segs:
            yield lo, hi, _segment_primes(lo, hi, odd_base)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        window = threads + 2
        futures = {
            i: pool.submit(_segment_primes, *segs[i], odd_base)
            for i in range(min(window, len(segs)))
        }
        for i in range(len(segs)):
            primes = futures.pop(i).result()
            nxt = i + window
            if nxt < len(segs):
                futures[nxt] = pool.submit(_segment_primes, *segs[nxt], odd_base)
            yield segs[i][0], segs[i][1], primes


# --- primality --------------------------------------------------------------

# Deterministic Miller-Rabin witness set: the first 12 primes, proven
# complete for every input below 3317044064679887385961981 > 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = tuple(int(p) for p in _simple_sieve(100))
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 64-bit (and somewhat larger) inputs."""
    if n < 2:
        return False
    if n in _SMALL_PRIME_SET:
        return True
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# --- counting and the n-th prime --------------------------------------------


def prime_count(x: int, *, bits: int | None = None, threads: int = 1) -> int:
    """Exact pi(x): number of primes <= x, by segmented sieving."""
    if x < 2:
        return 0
    total = 0
    for _, _, primes in _iter_segment_primes(0, x + 1, bits, threads):
        total += int(primes.size)
    return total


def nth_prime(n: int, *, bits: int | None = None) -> int:
    """The n-th prime (1-based): p_1 = 2, p_25 = 97.

    The sieve range is sized from the n log n growth law and extended until
    the count is reached, so no particular bracket constant is relied upon.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= len(_SMALL_PRIMES):
        return _SMALL_PRIMES[n - 1]
    ln = math.log(n)
    hi = int(1.3 * n * (ln + math.log(ln))) + 100
    start = 0
    count = 0
    while True:
        if hi > SCAN_LIMIT:
            raise ScanLimitError(f"range estimate for nth_prime({n}) exceeds {SCAN_LIMIT}")
        for _, _, primes in _iter_segment_primes(start, hi, bits):
            if count + primes.size >= n:
                return int(primes[n - count - 1])
            count += int(primes.size)
        start = hi
        hi += max(hi // 4, 1 << 16)


# --- maximal-gap record scan -------------------------------------------------


def max_gap_scan(
    limit: int,
    checkpoint: ScanCheckpoint | None = None,
    *,
    bits: int | None = None,
    threads: int = 1,
) -> tuple[list[GapRecord], ScanCheckpoint]:
    """All first-occurrence record gaps with lower_prime <= limit, ascending.

    Returns the filtered record list together with the final checkpoint
    (which keeps unfiltered records so it can seed a later, larger scan).
    Deterministic for any segmentation, thread count, or resume point.
    """
    if limit < 3:
        raise ValueError("limit must be >= 3")
    if limit > SCAN_LIMIT:
        raise ScanLimitError(f"limit exceeds the 64-bit scan limit {SCAN_LIMIT}")
    if checkpoint is not None:
        if checkpoint.position > limit:
            raise CheckpointMismatchError(
                f"checkpoint position {checkpoint.position} is beyond limit {limit}"
            )
        if checkpoint.last_prime >= checkpoint.position:
            raise CheckpointMismatchError("checkpoint last_prime must be below position")
        start = checkpoint.position
        last = checkpoint.last_prime
        records = list(checkpoint.records)
    else:
        start = 0
        last = 0
        records = []
    best = records[-1].gap if records else 0

    # The scan stops inside the segment holding the first prime beyond limit;
    # two spare grid segments are margin enough for any 64-bit gap, and keep
    # every checkpoint position on the global segment grid.
    span = _span(bits)
    stop = min((limit // span + 3) * span, SCAN_LIMIT)
    position = start
    for lo, hi, primes in _iter_segment_primes(start, stop, bits, threads):
        if primes.size:
            if last:
                gaps = np.diff(np.concatenate(([np.uint64(last)], primes)))
                lowers = np.concatenate(([np.uint64(last)], primes[:-1]))
            else:
                gaps = np.diff(primes)
                lowers = primes[:-1]
            for i in np.flatnonzero(gaps > best):
                g = int(gaps[i])
                if g > best:
                    best = g
                    records.append(GapRecord(len(records) + 1, g, int(lowers[i])))
            last = int(primes[-1])
        position = hi
        if last > limit:
            break

    final = ScanCheckpoint(position=position, last_prime=last, records=tuple(records))
    visible = [r for r in records if r.lower_prime <= limit]
    return visible, final


# --- checkpoint persistence ---------------------------------------------------


def save_checkpoint(cp: ScanCheckpoint, path: str) -> None:
    """Write `v1,<position>,<last_prime>` plus one `<gap>,<lower_prime>` per record."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{CHECKPOINT_VERSION},{cp.position},{cp.last_prime}\n")
        for rec in cp.records:
            fh.write(f"{rec.gap},{rec.lower_prime}\n")


def load_checkpoint(path: str) -> ScanCheckpoint:
    """Parse a checkpoint file written by save_checkpoint."""
    with open(path, encoding="ascii") as fh:
        header = fh.readline().strip()
        parts = header.split(",")
        if len(parts) != 3 or parts[0] != CHECKPOINT_VERSION:
            raise CheckpointMismatchError(f"bad checkpoint header: {header!r}")
        position, last_prime = int(parts[1]), int(parts[2])
        records = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            gap_s, lower_s = line.split(",")
            records.append(GapRecord(len(records) + 1, int(gap_s), int(lower_s)))
    return ScanCheckpoint(position=position, last_prime=last_prime, records=tuple(records))
