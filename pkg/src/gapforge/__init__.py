"""gapforge: a computational laboratory for prime gaps and zeta-zero spacings.

Subpackages cover segmented prime sieving and maximal-gap record scans,
a catalog of gap-bound models with the bundled 75-row record table,
critical-line zeta zeros via the Riemann-Siegel formula, prime/zero duality
diagnostics, constructive large-gap runs with Poisson gap statistics, and
exact 64-bit factorization. The `gapforge` command exposes all of it.
"""

from .bounds import (
    CATALOG,
    BoundModel,
    BoundValue,
    GapInterval,
    RecordCheck,
    ShanksEstimate,
    check_records,
    evaluate_bound,
    first_occurrence_interval,
    fixture_records,
    get_model,
    load_record_table,
    shanks_estimate,
)
from .duality import (
    DualityRow,
    MissingZeroError,
    duality_table,
    gap_spacing_residual,
    predicted_prime,
    predicted_zero,
)
from .factor import Factorization, factorize
from .gaplab import (
    CompositeRun,
    DistributionRow,
    GapBoundCheck,
    empirical_gap_distribution,
    factorial_gap_bound_check,
    factorial_run,
    poisson_tail,
    verify_run,
)
from .sieve import (
    CheckpointMismatchError,
    GapRecord,
    RangeTooLargeError,
    ScanCheckpoint,
    ScanLimitError,
    is_prime,
    load_checkpoint,
    max_gap_scan,
    nth_prime,
    prime_count,
    save_checkpoint,
    sieve_segment,
)
from .zeros import (
    BandSummary,
    MissedZeroError,
    ReducedPrecisionWarning,
    SpacingRow,
    ZeroCount,
    ZetaZero,
    count_zeros,
    find_zeros,
    load_zeros_csv,
    rs_theta,
    rs_z,
    save_zeros_csv,
    spacing_report,
    violation_bands,
    zero_count_main_term,
    zeros_through_ordinal,
)

__version__ = "0.1.0"
