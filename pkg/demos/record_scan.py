"""Maximal prime-gap records: scan, checkpoint, and compare to the bundled table.

A gap is a record when it is strictly larger than every gap between smaller
consecutive primes. The scan streams sieve segments, tracks the running
maximum, and can be checkpointed at any segment boundary.
"""

from gapforge import load_record_table, max_gap_scan, save_checkpoint

LIMIT = 10**7

records, checkpoint = max_gap_scan(LIMIT, threads=2)
print(f"record gaps with lower prime <= {LIMIT:,}:")
print(f"{'idx':>4} {'gap':>5} {'lower prime':>12}")
for r in records:
    print(f"{r.index:>4} {r.gap:>5} {r.lower_prime:>12,}")

# the bundled table lists the first 75 records; our scan must be its prefix
table = load_record_table()
expected = [(t.gap, t.lower_prime) for t in table if t.lower_prime <= LIMIT]
assert [(r.gap, r.lower_prime) for r in records] == expected
print(f"\nmatches the first {len(expected)} rows of the bundled record table")

# the final checkpoint could seed a later, deeper scan
save_checkpoint(checkpoint, "/tmp/gapforge_scan.cp")
print(f"checkpoint saved: frontier at {checkpoint.position:,}, "
      f"{len(checkpoint.records)} records held")
