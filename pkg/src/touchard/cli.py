"""Command line: ``touchard seq|verify|period|falsify``.

Exit codes: 0 when every requested check passes, 1 on any failure (or an
undetermined result), 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .congruences import (
    CANONICAL_GRIDS,
    CheckKind,
    GridError,
    Mutation,
    counterexample_probe,
    expand_grid,
    run_check,
)
from .exact_core import StirlingKind, derangement, rbell, rstirling
from .modular import PrimeModulus, residue_seq
from .periods import (
    DEFAULT_BUDGET,
    EXHAUSTIVE_PRIMES,
    compute_np,
    digit_sum_falsifier,
    hall_recovery_links,
    minimal_period,
    shift_offset,
    verify_shift_corollary,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SEQUENCES = ("bell", "rbell", "vn", "derangement", "rstirling1", "rstirling2", "bellmod")

DEFAULT_PERIODS = {
    "minimal": [2, 3, 5, 7],
    "digit_sum": [2, 3, 5],
    "shift": {"p": [2, 3, 5], "r": [-4, 4]},
    "hall": [2, 3, 5, 7],
}


class ConfigError(ValueError):
    pass


@dataclass
class GridConfig:
    checks: list
    grids: dict
    mutation: Mutation | None = None
    periods: dict = field(default_factory=dict)
    budget: int = DEFAULT_BUDGET
    format: str = "json"

    def echo(self) -> dict:
        return {
            "checks": [k.value for k in self.checks],
            "grids": {k.value: {name: list(v) for name, v in self.grids[k].items()} for k in self.checks},
            "mutation": None if self.mutation is None else self.mutation.value,
            "periods": self.periods,
            "budget": self.budget,
        }


_CONFIG_KEYS = {"checks", "grids", "mutation", "periods", "budget", "format"}
_PERIOD_KEYS = {"minimal", "digit_sum", "shift", "hall"}


def _prime_list(values, where: str) -> list:
    if not isinstance(values, list):
        raise ConfigError(f"{where} must be a list of primes")
    try:
        return [PrimeModulus(int(v)).p for v in values]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_config(data: dict | None) -> GridConfig:
    """Build a GridConfig from parsed JSON; missing fields take canonical defaults."""
    data = {} if data is None else data
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    try:
        checks = [CheckKind(k) for k in data.get("checks", [k.value for k in CheckKind])]
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if not checks and "periods" not in data:
        raise ConfigError("nothing to run: empty check list")
    overrides = data.get("grids", {})
    if not isinstance(overrides, dict):
        raise ConfigError("grids must map check kinds to parameter ranges")
    grids = {}
    for kind in checks:
        grid = dict(CANONICAL_GRIDS[kind])
        extra = overrides.get(kind.value, {})
        if not isinstance(extra, dict):
            raise ConfigError(f"grid for {kind.value} must be an object")
        grid.update(extra)
        try:
            expand_grid(kind, grid)
        except GridError as exc:
            raise ConfigError(str(exc)) from None
        grids[kind] = grid
    for name in overrides:
        if name not in {k.value for k in checks}:
            raise ConfigError(f"grid given for {name}, which is not among the checks")
    mutation = data.get("mutation")
    try:
        mutation = None if mutation is None else Mutation(mutation)
    except ValueError:
        raise ConfigError(f"unknown mutation {mutation!r}") from None
    periods = data.get("periods", DEFAULT_PERIODS)
    if not isinstance(periods, dict) or set(periods) - _PERIOD_KEYS:
        raise ConfigError(f"periods must be an object with keys among {sorted(_PERIOD_KEYS)}")
    periods = dict(periods)
    for key in ("minimal", "digit_sum", "hall"):
        if key in periods:
            periods[key] = _prime_list(periods[key], f"periods.{key}")
    if "shift" in periods:
        shift = periods["shift"]
        if not isinstance(shift, dict) or set(shift) != {"p", "r"}:
            raise ConfigError("periods.shift needs exactly p (list) and r ([lo, hi])")
        r = shift["r"]
        if not (isinstance(r, list) and len(r) == 2 and r[0] <= r[1]):
            raise ConfigError("periods.shift.r must be an inclusive [lo, hi] range")
        periods["shift"] = {"p": _prime_list(shift["p"], "periods.shift.p"), "r": [int(r[0]), int(r[1])]}
    bad = [p for p in periods.get("digit_sum", []) if p not in EXHAUSTIVE_PRIMES]
    if bad:
        raise ConfigError(f"periods.digit_sum supports p in {EXHAUSTIVE_PRIMES}, got {bad}")
    budget = data.get("budget", DEFAULT_BUDGET)
    if not isinstance(budget, int) or budget <= 0:
        raise ConfigError("budget must be a positive integer")
    fmt = data.get("format", "json")
    if fmt not in ("json", "csv"):
        raise ConfigError(f"format must be json or csv, got {fmt!r}")
    return GridConfig(checks, grids, mutation, periods, budget, fmt)


def load_config(path: str | None) -> GridConfig:
    if path is None:
        return parse_config(None)
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from None
    return parse_config(data)


# --- period entries -------------------------------------------------------------


def _minimal_entry(p: int, budget: int) -> dict:
    analysis = minimal_period(p, budget)
    if analysis.minimal_period is None:
        status = "UNKNOWN"
    else:
        status = "PASS" if analysis.n_p % analysis.minimal_period == 0 else "FAIL"
    return {"kind": "PERIOD_MINIMAL", "p": p, "analysis": analysis.to_dict(), "status": status}


def _digit_sum_entry(p: int, budget: int) -> dict:
    report = digit_sum_falsifier(p, budget=budget)
    return {"kind": "PERIOD_DIGIT_SUM", **report.to_dict()}


def _shift_entry(p: int, r: int, horizon: int | None = None) -> dict:
    horizon = 3 * compute_np(p) if horizon is None else horizon
    K = shift_offset(p, r)
    if horizon <= K:
        horizon = K + 3 * compute_np(p)
    ok = verify_shift_corollary(p, r, horizon)
    return {"kind": "PERIOD_SHIFT", "p": p, "r": r, "K": str(K), "horizon": horizon, "status": "PASS" if ok else "FAIL"}


def _hall_entry(p: int, horizon: int | None = None) -> dict:
    n_p = compute_np(p)
    horizon = 2 * n_p + 50 if horizon is None else horizon
    links = hall_recovery_links(p, horizon)
    return {
        "kind": "PERIOD_HALL",
        "p": p,
        "horizon": horizon,
        "links": links,
        "status": "PASS" if all(links.values()) else "FAIL",
    }


# --- report assembly --------------------------------------------------------------


def overall_status(entries) -> str:
    statuses = [e["status"] for e in entries]
    if any(s == "FAIL" for s in statuses):
        return "FAIL"
    if all(s == "PASS" for s in statuses):
        return "PASS"
    return "INCOMPLETE"


def _exit_code(status: str) -> int:
    return EXIT_PASS if status == "PASS" else EXIT_FAIL


def _point_label(point: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in point.items())


def _value(v) -> str:
    return "|".join(str(x) for x in v) if isinstance(v, tuple) else str(v)


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "mutation", "point", "lhs", "rhs", "equal"])
    writer.writerows(rows)
    return buf.getvalue()


def _period_csv_rows(entry: dict):
    kind = entry["kind"]
    if kind == "PERIOD_MINIMAL":
        a = entry["analysis"]
        yield [kind, "", f"p={entry['p']}", a["minimal_period"], a["n_p"], entry["status"] == "PASS"]
    else:
        label = ";".join(f"{k}={entry[k]}" for k in ("p", "r") if k in entry)
        yield [kind, "", label, entry["status"], "PASS", entry["status"] == "PASS"]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_text(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def run_verify(config: GridConfig, timings: bool = False) -> tuple:
    """Run every configured check; returns (report dict, csv rows)."""
    entries, rows, clock = [], [], {}
    want_rows = config.format == "csv"
    for kind in config.checks:
        start = time.perf_counter()
        rep = run_check(kind, config.grids[kind], mutation=config.mutation, record_points=want_rows)
        clock[kind.value] = round(time.perf_counter() - start, 6)
        entries.append(rep.to_dict())
        if want_rows:
            mut = "" if config.mutation is None else config.mutation.value
            rows.extend(
                [kind.value, mut, _point_label(pt), _value(ev.lhs), _value(ev.rhs), ev.equal] for pt, ev in rep.points
            )
    periods = config.periods
    period_jobs = []
    for p in periods.get("minimal", []):
        period_jobs.append((f"PERIOD_MINIMAL:p={p}", lambda p=p: _minimal_entry(p, config.budget)))
    for p in periods.get("digit_sum", []):
        period_jobs.append((f"PERIOD_DIGIT_SUM:p={p}", lambda p=p: _digit_sum_entry(p, config.budget)))
    if "shift" in periods:
        lo, hi = periods["shift"]["r"]
        for p in periods["shift"]["p"]:
            for r in range(lo, hi + 1):
                period_jobs.append((f"PERIOD_SHIFT:p={p};r={r}", lambda p=p, r=r: _shift_entry(p, r)))
    for p in periods.get("hall", []):
        period_jobs.append((f"PERIOD_HALL:p={p}", lambda p=p: _hall_entry(p)))
    for label, job in period_jobs:
        start = time.perf_counter()
        entry = job()
        clock[label] = round(time.perf_counter() - start, 6)
        entries.append(entry)
        rows.extend(_period_csv_rows(entry))
    report = {"version": __version__, "config": config.echo(), "checks": entries, "status": overall_status(entries)}
    if timings:
        report["timing"] = clock
    return report, rows


# --- subcommands ----------------------------------------------------------------------


def _cmd_seq(args) -> int:
    name, count = args.name, args.count
    if count <= 0:
        raise ConfigError("--count must be positive")
    r = 0 if args.r is None else args.r
    if name == "bell":
        values = [rbell(n, 0) for n in range(count)]
    elif name == "rbell":
        values = [rbell(n, r) for n in range(count)]
    elif name == "vn":
        values = [rbell(n, -1) for n in range(count)]
    elif name == "derangement":
        values = [derangement(n) for n in range(count)]
    elif name in ("rstirling1", "rstirling2"):
        if r < 0:
            raise ConfigError("r-Stirling numbers need --r >= 0")
        kind = StirlingKind.FIRST if name == "rstirling1" else StirlingKind.SECOND
        if args.n is not None:
            values = [rstirling(kind, args.n, k, r) for k in range(args.n + 1)]
        else:
            k = 0 if args.k is None else args.k
            values = [rstirling(kind, n, k, r) for n in range(count)]
    elif name == "bellmod":
        if args.p is None:
            raise ConfigError("bellmod needs --p")
        try:
            values = list(residue_seq(PrimeModulus(args.p), r, count).values)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    else:
        raise ConfigError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}")
    index_name = "k" if name in ("rstirling1", "rstirling2") and args.n is not None else "n"
    if args.format == "json":
        params = {key: getattr(args, key) for key in ("n", "k", "r", "p") if getattr(args, key) is not None}
        text = _json_text({"sequence": name, "params": params, "values": [str(v) for v in values]})
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([index_name, "value"])
        writer.writerows([i, v] for i, v in enumerate(values))
        text = buf.getvalue()
    else:
        text = "".join(f"{i}\t{v}\n" for i, v in enumerate(values))
    _emit(text, args.out)
    return EXIT_PASS


def _cmd_verify(args) -> int:
    config = load_config(args.config)
    if args.kinds:
        try:
            config.checks = [CheckKind(k) for k in args.kinds]
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        config.grids = {k: config.grids.get(k, dict(CANONICAL_GRIDS[k])) for k in config.checks}
        if not args.with_periods and args.config is None:
            config.periods = {}
    if args.mutation:
        config.mutation = Mutation(args.mutation)
    if args.no_periods:
        config.periods = {}
    if args.format:
        config.format = args.format
    report, rows = run_verify(config, timings=args.timings)
    _emit(_csv_text(rows) if config.format == "csv" else _json_text(report), args.out)
    return _exit_code(report["status"])


def _cmd_period(args) -> int:
    try:
        p = PrimeModulus(args.p).p
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if not (args.minimal or args.falsify_digit_sum or args.shift is not None or args.hall):
        args.minimal = True
    entries = []
    if args.minimal:
        entries.append(_minimal_entry(p, args.budget))
    if args.falsify_digit_sum:
        mode = "exhaustive" if p in EXHAUSTIVE_PRIMES else "sampled"
        report = digit_sum_falsifier(p, mode=mode, samples=args.samples, seed=args.seed, budget=args.budget)
        entries.append({"kind": "PERIOD_DIGIT_SUM", **report.to_dict()})
    if args.shift is not None:
        entries.append(_shift_entry(p, args.shift, args.horizon))
    if args.hall:
        horizon = args.horizon
        if horizon is not None and horizon <= compute_np(p):
            raise ConfigError(f"--horizon must exceed N_p = {compute_np(p)}")
        if horizon is None and 2 * compute_np(p) + 50 > args.budget:
            raise ConfigError(f"the Hall chain for p={p} needs a horizon beyond the budget")
        entries.append(_hall_entry(p, horizon))
    report = {"version": __version__, "p": p, "checks": entries, "status": overall_status(entries)}
    if args.format == "csv":
        rows = [row for e in entries for row in _period_csv_rows(e)]
        _emit(_csv_text(rows), args.out)
    else:
        _emit(_json_text(report), args.out)
    return _exit_code(report["status"])


def _cmd_falsify(args) -> int:
    """Harness self-test: every corrupted formula must be caught."""
    try:
        kinds = [CheckKind(k) for k in args.kinds] if args.kinds else list(CheckKind)
        mutations = [Mutation(m) for m in args.mutations] if args.mutations else list(Mutation)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    probes = []
    for kind in kinds:
        for mutation in mutations:
            rep = counterexample_probe(kind, mutation)
            probes.append(
                {
                    "kind": kind.value,
                    "mutation": mutation.value,
                    "tested": rep.tested,
                    "failures": len(rep.failures),
                    "probe_status": rep.status,
                    "status": "PASS" if rep.status == "FAIL" else "FAIL",
                }
            )
    report = {"version": __version__, "probes": probes, "status": overall_status(probes)}
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "mutation", "tested", "failures", "detected"])
        writer.writerows([p["kind"], p["mutation"], p["tested"], p["failures"], p["status"] == "PASS"] for p in probes)
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_json_text(report), args.out)
    return _exit_code(report["status"])


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="touchard", description="Bell-number congruence toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    seq = sub.add_parser("seq", help="print a sequence")
    seq.add_argument("name", help=f"one of: {', '.join(SEQUENCES)}")
    seq.add_argument("--count", type=int, default=10)
    seq.add_argument("--n", type=int, help="row of an r-Stirling triangle")
    seq.add_argument("--k", type=int, help="column of an r-Stirling triangle")
    seq.add_argument("--r", type=int)
    seq.add_argument("--p", type=int)
    seq.add_argument("--format", choices=("table", "json", "csv"), default="table")
    seq.add_argument("--out")
    seq.set_defaults(func=_cmd_seq)

    verify = sub.add_parser("verify", help="sweep congruences and period checks")
    verify.add_argument("--config", help="JSON GridConfig file")
    verify.add_argument("--kinds", nargs="+", metavar="KIND", help="restrict to these check kinds")
    verify.add_argument("--mutation", choices=[m.value for m in Mutation])
    verify.add_argument("--no-periods", action="store_true", help="skip the period checks")
    verify.add_argument("--with-periods", action="store_true", help="keep period checks when --kinds is given")
    verify.add_argument("--timings", action="store_true", help="add wall-clock timings (breaks byte-identity)")
    verify.add_argument("--format", choices=("json", "csv"))
    verify.add_argument("--out")
    verify.set_defaults(func=_cmd_verify)

    period = sub.add_parser("period", help="period analysis of B_n mod p")
    period.add_argument("--p", type=int, required=True)
    period.add_argument("--minimal", action="store_true")
    period.add_argument("--falsify-digit-sum", action="store_true")
    period.add_argument("--shift", type=int, metavar="R")
    period.add_argument("--hall", action="store_true")
    period.add_argument("--horizon", type=int)
    period.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    period.add_argument("--samples", type=int, default=200)
    period.add_argument("--seed", type=int, default=0)
    period.add_argument("--format", choices=("json", "csv"), default="json")
    period.add_argument("--out")
    period.set_defaults(func=_cmd_period)

    falsify = sub.add_parser("falsify", help="harness self-test with corrupted formulas")
    falsify.add_argument("--kinds", nargs="+", metavar="KIND")
    falsify.add_argument("--mutations", nargs="+", metavar="MUTATION")
    falsify.add_argument("--format", choices=("json", "csv"), default="json")
    falsify.add_argument("--out")
    falsify.set_defaults(func=_cmd_falsify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"touchard: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
