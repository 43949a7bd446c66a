"""Command-line front end.

Exit codes: 0 success, 2 usage/config/parse error, 3 domain or coverage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .errors import ConfigError, CoverageError, DomainError, InsufficientDataError, ParseError
from .grid import DEFAULT_BOUNDARIES, GridBoundaries, boundary_hit, classify, describe
from .indicator import FirmValuation, MacroProfile, compute_indicator, valuation_health
from .market_data import parse_price_csv
from .report import build_report, dump_json, fmt6, published_discrepancy_note
from .scenario import load_scenario
from .series import METHODS, build_series, forecast, parse_step

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def cuts_arg(text: str) -> GridBoundaries:
    try:
        return GridBoundaries(tuple(finite_float(c) for c in text.split(",")))
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def forecast_spec(tokens: list[str]) -> dict:
    """Parse ``window=2 horizon=4 step=1y method=linear`` tokens."""
    spec = {"window": None, "horizon": 4, "step": "1y", "method": "linear"}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in spec:
            raise ConfigError(f"bad --forecast token {tok!r}; expected window=, horizon=, step=, method=")
        spec[key] = value
    if spec["window"] is None:
        raise ConfigError("--forecast needs window=<n>")
    try:
        spec["window"] = int(spec["window"])
        spec["horizon"] = int(spec["horizon"])
        parse_step(spec["step"])
    except ValueError as exc:
        raise ConfigError(f"bad --forecast value: {exc}") from None
    if spec["method"] not in METHODS:
        raise ConfigError(f"--forecast method must be one of {METHODS}")
    return spec


def _strategy_lines(i_star: float, boundaries: GridBoundaries) -> list[str]:
    strategy = classify(i_star, boundaries)
    environment, entry = describe(strategy)
    lines = [
        f"class          = {strategy.label}",
        f"environment    = {environment}",
        f"entry strategy = {entry}",
    ]
    cut = boundary_hit(i_star, boundaries)
    if cut is not None:
        lines.append(
            f"note: I* lies on the grid cut {cut:g}; lower-inclusive intervals assign the higher row"
        )
    return lines


def cmd_compute(args) -> int:
    profile = MacroProfile(args.n, args.f, args.ri_target, args.ri_origin, args.rce_target, args.rce_origin)
    valuation = FirmValuation(args.value, args.capital)
    result = compute_indicator(profile, valuation)
    lines = [
        f"I              = {fmt6(result.i_value)}",
        f"I*             = {fmt6(result.i_star)}",
        f"country term   = {fmt6(result.country_term)}",
        f"firm term      = {fmt6(result.firm_term)}",
        f"monetary ratio = {fmt6(result.monetary_ratio)}",
        f"growth ratio   = {fmt6(result.growth_ratio)}",
        f"V/CS           = {fmt6(result.valuation_ratio)}",
        f"firm health    = {valuation_health(valuation).value}",
        f"warnings       = {', '.join(result.warnings) or 'none'}",
    ]
    lines += _strategy_lines(result.i_star, args.cuts)
    note = published_discrepancy_note(profile, valuation)
    if note:
        lines.append(note)
    print("\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    print("\n".join([f"I*             = {fmt6(args.i_star)}"] + _strategy_lines(args.i_star, args.cuts)))
    return EXIT_OK


def _run_series(config_path: str, cuts: GridBoundaries):
    config = load_scenario(config_path)
    price_path = config.resolved_price_path
    try:
        with open(price_path, encoding="utf-8", newline="") as fh:
            prices = parse_price_csv(fh, source=str(price_path))
    except OSError as exc:
        raise ConfigError(f"cannot read prices {price_path}: {exc.strerror}") from None
    return config, build_series(config, prices, cuts)


def cmd_series(args) -> int:
    spec = forecast_spec(args.forecast) if args.forecast is not None else None
    config, series = _run_series(args.config, args.cuts)
    fc = None
    if spec is not None:
        fc = forecast(series, spec["window"], spec["horizon"], spec["step"], spec["method"])
    bundle = build_report(config, series, fc, args.cuts)
    Path(args.csv).write_text(bundle.series_csv, encoding="utf-8", newline="")
    Path(args.json).write_text(bundle.summary_json, encoding="utf-8", newline="")
    return bundle.exit_code


def cmd_forecast(args) -> int:
    _, series = _run_series(args.config, DEFAULT_BOUNDARIES)
    fc = forecast(series, args.window, args.horizon, args.step, args.method)
    text = dump_json(fc.to_dict())
    if args.json:
        Path(args.json).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="entryrisk", description="Market-entry risk indicator tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate I and I* for one set of inputs")
    for flag, help_ in (
        ("--n", "country-risk rating of the target market (1-10)"),
        ("--f", "cultural/organizational compatibility (0.1-100)"),
        ("--ri-target", "target-market inflation rate, as a fraction"),
        ("--ri-origin", "origin-country inflation rate, as a fraction"),
        ("--rce-target", "target-country growth rate, as a fraction"),
        ("--rce-origin", "origin-country growth rate, as a fraction"),
        ("--value", "economic (market) value V of the firm"),
        ("--capital", "common stock CS of the firm"),
    ):
        p.add_argument(flag, type=finite_float, required=True, help=help_)
    p.add_argument("--cuts", type=cuts_arg, default=DEFAULT_BOUNDARIES, help="grid cuts, e.g. 0,1.6,2,5")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="map an I* value onto the strategy grid")
    p.add_argument("--i-star", type=finite_float, required=True)
    p.add_argument("--cuts", type=cuts_arg, default=DEFAULT_BOUNDARIES)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("series", help="evaluate a scenario over daily quotations")
    p.add_argument("--config", required=True, help="scenario JSON")
    p.add_argument("--csv", required=True, help="series CSV output path")
    p.add_argument("--json", required=True, help="summary JSON output path")
    p.add_argument("--forecast", nargs="+", metavar="KEY=VALUE", help="window=N horizon=N step=1y method=linear")
    p.add_argument("--cuts", type=cuts_arg, default=DEFAULT_BOUNDARIES)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("forecast", help="extrapolate I* for a scenario")
    p.add_argument("--config", required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--horizon", type=int, default=4)
    p.add_argument("--step", default="1y")
    p.add_argument("--method", choices=METHODS, default="linear")
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_forecast)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParseError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, CoverageError, InsufficientDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
