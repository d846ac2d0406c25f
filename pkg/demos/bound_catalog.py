"""Tour of the gap-bound catalog.

Upper-bound models cap how large a gap after p can be, lower-bound models
witness how large gaps provably get infinitely often. Everything is a
function of ln p, so a prime of 86853 digits is evaluated by passing its
log directly.
"""

import math

from gapforge import CATALOG, check_records, evaluate_bound, fixture_records, get_model

PRIMES = [113, 9551, 1425172824437699411]

print(f"{'model':<20}" + "".join(f"{p:>24,}" for p in PRIMES))
for name, model in CATALOG.items():
    row = []
    for p in PRIMES:
        bv = evaluate_bound(model, p)
        row.append(f"{bv.value:>23,.1f}{'*' if bv.flagged else ' '}")
    print(f"{name:<20}" + "".join(row))
print("(* = outside the model's log-domain floor, value computed literally)\n")

# the refined Cramer-style estimate clears every known record gap from p=3 on
checks = check_records(fixture_records(), get_model("PAPER_RH"))
violations = [c for c in checks if c.violated and c.index > 1]
print(f"refined estimate vs all 75 record gaps: {len(violations)} violations beyond p=2")
worst = max(c.ratio for c in checks[1:])
print(f"closest approach: gap / estimate = {worst:.3f}\n")

# a 86853-digit probable prime enters through its natural log
log_p = 199958.4
bv = evaluate_bound(get_model("PAPER_RH"), log_p=log_p)
print(f"86853-digit prime (ln p = {log_p}): estimated maximal gap {bv.value:,.1f}")
print(f"observed gap there: 2,254,930 -> ratio {2254930 / bv.value:.2e}")

# plain Cramer (ln p)^2 fails at tiny primes; the 2pi/lnln factor repairs it
cramer = check_records(fixture_records(), get_model("CRAMER"))
early = [(c.index, c.gap, round(c.bound_value, 2)) for c in cramer if c.violated]
print(f"\nplain (ln p)^2 violations at the smallest primes: {early}")
assert all(not c.violated for c in cramer if c.index > 3)

print("\nfirst-occurrence machinery:")
from gapforge import first_occurrence_interval, shanks_estimate

for d in (36, 112, 1476):
    iv = first_occurrence_interval(d)
    est = shanks_estimate(d)
    print(f"  gap {d}: bracket [{iv.lo:.3g}, {iv.hi:.3g}], "
          f"refined estimate {est.refined:.3g}")
