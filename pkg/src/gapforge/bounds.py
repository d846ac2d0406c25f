"""Catalog and evaluation of prime-gap bound formulas.

Every model is a function of L = ln p alone, so primes far beyond 64 bits
can be evaluated by supplying ln p directly. All logarithms are natural.

Upper-bound models::

    CRAMER        (ln p)^2
    PAPER_RH      2*pi*(ln p)^2 / ln ln p
    RH_CLASSIC    sqrt(p) * ln p
    VONKOCH       sqrt(p) * (ln p)^2
    HUXLEY        p^(7/12)
    BHP           p^0.525
    THM2_II       p^(theta+eps), theta = 0.1559458 by default

Lower-bound models::

    WESTZYNTHIUS_LOWER   c * ln p * ln3 p / ln4 p    (iterated logs, as printed)
    PINTZ_LOWER          c * ln p * ln2 p * ln4 p / (ln3 p)^2, c = 2*e^gamma
    FACTORIAL_LOWER      ln p / ln ln p

WESTZYNTHIUS_LOWER omits the ln2 factor that PINTZ_LOWER carries; the two
sources disagree and both are kept literally as printed.

Evaluations below a model's domain floor are still computed literally but
come back flagged: an iterated log has gone non-positive (or the value
itself has), which is how e.g. PAPER_RH at p = 2 legitimately yields -8.2.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

from .sieve import GapRecord

_E = math.e
_EE = math.exp(math.e)  # ln ln p > 0 above this
_EEE = math.exp(_EE)  # ln3 p > 0 above this


@dataclass(frozen=True)
class BoundModel:
    name: str
    kind: str  # "upper" | "lower"
    params: dict[str, float]
    p_min: float  # smallest p with all inner logs positive and a positive value


class BoundValue(NamedTuple):
    value: float
    flagged: bool


class RecordCheck(NamedTuple):
    index: int
    gap: int
    bound_value: float
    ratio: float
    violated: bool
    flagged: bool


class GapInterval(NamedTuple):
    lo: float
    hi: float
    log_lo: float
    log_hi: float


class ShanksEstimate(NamedTuple):
    refined: float
    crude: float
    log_refined: float
    log_crude: float


THETA_DEFAULT = 0.1559458
THETA_LITERAL = 1.559458  # the printed exponent, selectable but presumed a typo

CATALOG: dict[str, BoundModel] = {
    "CRAMER": BoundModel("CRAMER", "upper", {}, 1.0),
    "PAPER_RH": BoundModel("PAPER_RH", "upper", {"c": 2 * math.pi}, _E),
    "RH_CLASSIC": BoundModel("RH_CLASSIC", "upper", {}, 1.0),
    "VONKOCH": BoundModel("VONKOCH", "upper", {}, 1.0),
    "HUXLEY": BoundModel("HUXLEY", "upper", {"alpha": 7 / 12}, 1.0),
    "BHP": BoundModel("BHP", "upper", {"alpha": 0.525}, 1.0),
    "THM2_II": BoundModel("THM2_II", "upper", {"theta": THETA_DEFAULT, "eps": 0.0}, 1.0),
    "WESTZYNTHIUS_LOWER": BoundModel("WESTZYNTHIUS_LOWER", "lower", {"c": 1.0}, _EEE),
    "PINTZ_LOWER": BoundModel(
        "PINTZ_LOWER", "lower", {"c": 2 * math.exp(0.5772156649015329)}, _EEE
    ),
    "FACTORIAL_LOWER": BoundModel("FACTORIAL_LOWER", "lower", {}, _E),
}


def get_model(name: str, *, theta: float | None = None, eps: float | None = None) -> BoundModel:
    """Look up a catalog model, optionally overriding THM2_II's exponent."""
    model = CATALOG[name.upper()]
    if theta is not None or eps is not None:
        params = dict(model.params)
        if theta is not None:
            params["theta"] = theta
        if eps is not None:
            params["eps"] = eps
        model = BoundModel(model.name, model.kind, params, model.p_min)
    return model


def _iterated_logs(log_p: float, depth: int) -> tuple[list[float], bool]:
    """[ln p, ln2 p, ...] up to depth, flagging once an argument is <= 0.

    After a non-positive value the chain cannot continue; remaining entries
    are NaN and the flag is set.
    """
    vals = [log_p]
    flagged = log_p <= 0
    for _ in range(depth - 1):
        prev = vals[-1]
        if prev <= 0 or math.isnan(prev):
            vals.append(math.nan)
            flagged = True
        else:
            nxt = math.log(prev)
            vals.append(nxt)
            flagged = flagged or nxt <= 0
    return vals, flagged


def evaluate_bound(
    model: BoundModel, p: int | float | None = None, *, log_p: float | None = None
) -> BoundValue:
    """Value of the model at p (or at a directly supplied ln p).

    The value is computed literally wherever it is real; the flag reports a
    domain excursion (inner log <= 0, or a negative/NaN result).
    """
    if (p is None) == (log_p is None):
        raise ValueError("supply exactly one of p or log_p")
    if log_p is None:
        if p < 2:
            raise ValueError("p must be >= 2")
        L = math.log(p)
    else:
        L = float(log_p)

    name = model.name
    flagged = False
    if name == "CRAMER":
        value = L * L
    elif name == "PAPER_RH":
        logs, flagged = _iterated_logs(L, 2)
        value = model.params["c"] * L * L / logs[1] if not math.isnan(logs[1]) else math.nan
    elif name == "RH_CLASSIC":
        value = math.exp(L / 2) * L
    elif name == "VONKOCH":
        value = math.exp(L / 2) * L * L
    elif name in ("HUXLEY", "BHP"):
        value = math.exp(model.params["alpha"] * L)
    elif name == "THM2_II":
        value = math.exp((model.params["theta"] + model.params["eps"]) * L)
    elif name == "WESTZYNTHIUS_LOWER":
        logs, flagged = _iterated_logs(L, 4)
        value = model.params["c"] * L * logs[2] / logs[3]
    elif name == "PINTZ_LOWER":
        logs, flagged = _iterated_logs(L, 4)
        value = model.params["c"] * L * logs[1] * logs[3] / (logs[2] * logs[2])
    elif name == "FACTORIAL_LOWER":
        logs, flagged = _iterated_logs(L, 2)
        value = L / logs[1] if not math.isnan(logs[1]) else math.nan
    else:
        raise KeyError(f"unknown bound model {name!r}")

    if math.isnan(value) or value < 0:
        flagged = True
    return BoundValue(value, flagged)


def check_records(records: list[GapRecord], model: BoundModel) -> list[RecordCheck]:
    """Compare each record gap against the model; mark violations.

    A violation is gap > bound for an upper model, gap < bound for a lower
    one. Domain-flagged evaluations are still compared literally.
    """
    out = []
    for rec in records:
        bv = evaluate_bound(model, rec.lower_prime)
        ratio = rec.gap / bv.value if bv.value and not math.isnan(bv.value) else math.nan
        if model.kind == "upper":
            violated = rec.gap > bv.value if not math.isnan(bv.value) else True
        else:
            violated = rec.gap < bv.value if not math.isnan(bv.value) else True
        out.append(RecordCheck(rec.index, rec.gap, bv.value, ratio, violated, bv.flagged))
    return out


def first_occurrence_interval(d: int) -> GapInterval:
    """Conjectured bracket on the prime opening the first gap of size d.

    (0.122985 * sqrt(d) * e^sqrt(d),  2.096 * d * e^sqrt(d)); both bounds are
    also returned in log space since they overflow doubles for d beyond
    roughly 500000.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    rd = math.sqrt(d)
    log_lo = math.log(0.122985) + 0.5 * math.log(d) + rd
    log_hi = math.log(2.096) + math.log(d) + rd
    lo = math.exp(log_lo) if log_lo < 709 else math.inf
    hi = math.exp(log_hi) if log_hi < 709 else math.inf
    return GapInterval(lo, hi, log_lo, log_hi)


def shanks_estimate(d: int) -> ShanksEstimate:
    """Magnitude estimate for the prime where gap d first appears.

    refined = sqrt(d) * e^(0.5*sqrt(ln^2 d + 4d)); crude is the e^sqrt(d)
    growth law it sharpens.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    ld = math.log(d)
    log_refined = 0.5 * ld + 0.5 * math.sqrt(ld * ld + 4 * d)
    log_crude = math.sqrt(d)
    refined = math.exp(log_refined) if log_refined < 709 else math.inf
    crude = math.exp(log_crude) if log_crude < 709 else math.inf
    return ShanksEstimate(refined, crude, log_refined, log_crude)


# --- bundled record table ------------------------------------------------------


class FixtureRow(NamedTuple):
    index: int
    gap: int
    lower_prime: int
    u_paper: float


def load_record_table() -> list[FixtureRow]:
    """The bundled 75-row maximal-gap record table with its published
    gap-estimate column (one decimal place)."""
    text = resources.files("gapforge.data").joinpath("table_s4.csv").read_text()
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        rows.append(
            FixtureRow(
                int(rec["index"]),
                int(rec["gap"]),
                int(rec["lower_prime"]),
                float(rec["u_paper"]),
            )
        )
    return rows


def fixture_records(rows: list[FixtureRow] | None = None) -> list[GapRecord]:
    """Fixture rows as GapRecord values (for check_records and friends)."""
    if rows is None:
        rows = load_record_table()
    return [GapRecord(r.index, r.gap, r.lower_prime) for r in rows]
