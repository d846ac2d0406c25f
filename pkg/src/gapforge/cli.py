"""Command-line front end: scans, table verification, zeros, diagnostics.

Every command emits one flat table in CSV (default) or JSON, to stdout or
--out. Exit codes: 0 success, 1 verification failure, 2 usage/precondition
error. Outputs are deterministic and independent of --threads.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Any

from . import bounds, duality, factor, gaplab, sieve, zeros

U_TOLERANCE = 0.05  # one printed decimal, so half a unit in the last place


@dataclass
class RunConfig:
    command: str
    fmt: str
    out: str | None
    threads: int
    args: argparse.Namespace


def _emit(cfg: RunConfig, fieldnames: list[str], rows: list[dict[str, Any]], one_decimal=()):
    """Write rows as CSV or JSON. one_decimal lists fields printed at table
    precision in CSV; JSON always carries full precision."""
    if cfg.fmt == "json":
        text = json.dumps(rows, indent=2, default=str) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(fieldnames)
        for row in rows:
            line = []
            for f in fieldnames:
                v = row[f]
                if v is None:
                    line.append("")
                elif f in one_decimal and isinstance(v, float):
                    line.append(f"{v:.1f}")
                elif isinstance(v, float):
                    line.append(repr(v))
                else:
                    line.append(str(v))
            w.writerow(line)
        text = buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_int_list(raw: list[str]) -> list[int]:
    out = []
    for chunk in raw:
        out.extend(int(x) for x in chunk.split(",") if x)
    return out


# --- commands ---------------------------------------------------------------


def cmd_scan(cfg: RunConfig) -> int:
    a = cfg.args
    checkpoint = None
    if a.checkpoint:
        try:
            checkpoint = sieve.load_checkpoint(a.checkpoint)
        except FileNotFoundError:
            checkpoint = None
    records, final = sieve.max_gap_scan(a.limit, checkpoint, threads=cfg.threads)
    if a.checkpoint:
        sieve.save_checkpoint(final, a.checkpoint)
    rows = [{"index": r.index, "gap": r.gap, "lower_prime": r.lower_prime} for r in records]
    _emit(cfg, ["index", "gap", "lower_prime"], rows)
    return 0


def cmd_verify_table(cfg: RunConfig) -> int:
    a = cfg.args
    if a.fixture:
        with open(a.fixture, encoding="utf-8") as fh:
            table = [
                bounds.FixtureRow(
                    int(r["index"]), int(r["gap"]), int(r["lower_prime"]), float(r["u_paper"])
                )
                for r in csv.DictReader(fh)
            ]
    else:
        table = bounds.load_record_table()
    model = bounds.get_model(a.model)
    u_model = bounds.get_model("PAPER_RH")
    checks = bounds.check_records(bounds.fixture_records(table), model)
    rows = []
    ok = True
    for fix, chk in zip(table, checks):
        u = bounds.evaluate_bound(u_model, fix.lower_prime)
        u_delta = u.value - fix.u_paper
        if abs(u_delta) > U_TOLERANCE:
            ok = False
        if chk.violated and fix.lower_prime >= 3:
            ok = False
        rows.append(
            {
                "index": fix.index,
                "gap": fix.gap,
                "lower_prime": fix.lower_prime,
                "u_paper": fix.u_paper,
                "u_recomputed": u.value,
                "u_delta": u_delta,
                "bound_value": chk.bound_value,
                "ratio": chk.ratio,
                "violated": chk.violated,
                "flagged": chk.flagged,
            }
        )
    _emit(
        cfg,
        ["index", "gap", "lower_prime", "u_paper", "u_recomputed", "u_delta",
         "bound_value", "ratio", "violated", "flagged"],
        rows,
        one_decimal=("u_recomputed",),
    )
    return 0 if ok else 1


def cmd_zeta(cfg: RunConfig) -> int:
    a = cfg.args
    zs = zeros.find_zeros(a.T, tol=a.tol)
    if a.report == "zeros":
        rows = [{"ordinal": z.ordinal, "gamma": z.gamma, "tol": z.tol} for z in zs]
        _emit(cfg, ["ordinal", "gamma", "tol"], rows)
        cnt = zeros.ZeroCount(a.T, len(zs), zeros.zero_count_main_term(a.T), 0.0)
        print(
            f"# {cnt.exact} zeros below T={a.T}; main term {cnt.main_term:.3f}",
            file=sys.stderr,
        )
    elif a.report == "count":
        main = zeros.zero_count_main_term(a.T)
        rows = [{"t": a.T, "exact": len(zs), "main_term": main, "s_of_t": len(zs) - main}]
        _emit(cfg, ["t", "exact", "main_term", "s_of_t"], rows)
    else:
        report = zeros.spacing_report(zs)
        if a.report == "spacing":
            rows = [r._asdict() for r in report]
            _emit(
                cfg,
                ["n", "gamma", "delta", "rh_bound", "power_bound", "avg_spacing",
                 "exceeds_rh_bound"],
                rows,
            )
        else:  # bands
            rows = [b._asdict() for b in zeros.violation_bands(report)]
            _emit(cfg, ["t_lo", "t_hi", "pairs", "exceed", "fraction"], rows)
    return 0


def cmd_duality(cfg: RunConfig) -> int:
    a = cfg.args
    n_values = _parse_int_list(a.n)
    if not n_values:
        raise ValueError("supply at least one n")
    if a.zeros:
        table = zeros.load_zeros_csv(a.zeros)
    else:
        table = zeros.zeros_through_ordinal(max(n_values))
    rows = [r._asdict() for r in duality.duality_table(n_values, table)]
    _emit(
        cfg,
        ["n", "p_n", "gamma_n", "ratio", "predicted_ratio", "rel_dev"],
        rows,
    )
    return 0


def cmd_construct(cfg: RunConfig) -> int:
    a = cfg.args
    run = gaplab.factorial_run(a.m)
    row: dict[str, Any] = {
        "m": a.m,
        "start": run.start,
        "length": run.length,
        "construction": run.construction,
        "witnesses_ok": gaplab.verify_run(run),
    }
    if a.m >= 3:
        chk = gaplab.factorial_gap_bound_check(a.m)
        row.update(gap_lower=chk.gap_lower, paper_bound=chk.paper_bound, satisfied=chk.satisfied)
    else:
        row.update(gap_lower=None, paper_bound=None, satisfied=None)
    _emit(
        cfg,
        ["m", "start", "length", "construction", "witnesses_ok", "gap_lower",
         "paper_bound", "satisfied"],
        [row],
    )
    return 0


def cmd_factor(cfg: RunConfig) -> int:
    rows = []
    for n in cfg.args.n:
        f = factor.factorize(n)
        rows.append({"n": n, "factorization": str(f), "factors": list(map(list, f.factors))})
    if cfg.fmt == "json":
        _emit(cfg, [], rows)
    else:
        _emit(cfg, ["n", "factorization"], [{k: r[k] for k in ("n", "factorization")} for r in rows])
    return 0


def cmd_stats(cfg: RunConfig) -> int:
    a = cfg.args
    grid = [float(x) for chunk in a.lambda_grid for x in chunk.split(",") if x]
    dist = gaplab.empirical_gap_distribution(a.limit, a.m, grid, threads=cfg.threads)
    rows = [{"lambda": r.lam, "empirical": r.empirical, "poisson_model": r.poisson_model}
            for r in dist]
    _emit(cfg, ["lambda", "empirical", "poisson_model"], rows)
    return 0


def cmd_bound(cfg: RunConfig) -> int:
    a = cfg.args
    model = bounds.get_model(a.model, theta=a.theta, eps=a.eps)
    if (a.p is None) == (a.log_p is None):
        raise ValueError("supply exactly one of P or --log-p")
    bv = bounds.evaluate_bound(model, a.p, log_p=a.log_p)
    row = {
        "model": model.name,
        "p": a.p,
        "log_p": a.log_p if a.log_p is not None else (math.log(a.p) if a.p else None),
        "value": bv.value,
        "flagged": bv.flagged,
    }
    one_dec = ("value",) if model.name == "PAPER_RH" else ()
    _emit(cfg, ["model", "p", "log_p", "value", "flagged"], [row], one_decimal=one_dec)
    return 0


def cmd_interval(cfg: RunConfig) -> int:
    a = cfg.args
    iv = bounds.first_occurrence_interval(a.d)
    sh = bounds.shanks_estimate(a.d)
    row = {
        "d": a.d,
        "lo": iv.lo,
        "hi": iv.hi,
        "log_lo": iv.log_lo,
        "log_hi": iv.log_hi,
        "shanks_refined": sh.refined,
        "shanks_crude": sh.crude,
    }
    _emit(
        cfg,
        ["d", "lo", "hi", "log_lo", "log_hi", "shanks_refined", "shanks_crude"],
        [row],
    )
    return 0


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gapforge", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="write output here instead of stdout")
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("scan", help="maximal prime-gap record scan")
    sp.add_argument("--limit", type=int, required=True)
    sp.add_argument("--checkpoint", default=None, help="resume from / save to this file")
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify-table", help="recompute the bundled record table")
    sp.add_argument("--fixture", default=None, help="alternative fixture CSV")
    sp.add_argument("--model", default="PAPER_RH")
    common(sp)
    sp.set_defaults(func=cmd_verify_table)

    sp = sub.add_parser("zeta", help="critical-line zeros up to height T")
    sp.add_argument("--T", type=float, required=True)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--report", choices=("zeros", "count", "spacing", "bands"), default="zeros")
    common(sp)
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("duality", help="prime/zero correspondence diagnostics")
    sp.add_argument("--n", action="append", required=True, help="ordinals, comma-separated")
    sp.add_argument("--zeros", default=None, help="zero table CSV (ordinal,gamma,tol)")
    common(sp)
    sp.set_defaults(func=cmd_duality)

    sp = sub.add_parser("construct", help="guaranteed composite run after m!+1")
    sp.add_argument("--m", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("factor", help="factor 64-bit integers")
    sp.add_argument("n", type=int, nargs="+")
    common(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("stats", help="empirical gap distribution vs Poisson model")
    sp.add_argument("--limit", type=int, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--lambda-grid", action="append", required=True,
                    help="lambda values, comma-separated")
    common(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("bound", help="evaluate a gap-bound model")
    sp.add_argument("model")
    sp.add_argument("p", type=int, nargs="?", default=None)
    sp.add_argument("--log-p", type=float, default=None, help="supply ln p directly")
    sp.add_argument("--theta", type=float, default=None, help="THM2_II exponent override")
    sp.add_argument("--eps", type=float, default=None)
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("interval", help="first-occurrence bracket for a gap size")
    sp.add_argument("--d", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_interval)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.command, args.format, args.out, max(1, args.threads), args)
    try:
        return args.func(cfg)
    except (ValueError, KeyError, LookupError, OverflowError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except zeros.MissedZeroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
