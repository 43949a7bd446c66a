"""Plot-ready CSV/JSON rendering of indicator runs.

Output is deterministic: fixed column and key order, I-related columns to six
decimals, currency at full ``repr`` precision, LF line endings.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .grid import DEFAULT_BOUNDARIES, GridBoundaries, StrategyClass, boundary_hit
from .indicator import FirmValuation, MacroProfile
from .scenario import ScenarioConfig
from .series import ForecastResult, IndicatorSeries, classify_series

SERIES_COLUMNS = ("date", "price", "shares", "V", "V_over_CS", "I", "I_star", "class", "warnings")


def fmt6(x: float) -> str:
    return f"{x:.6f}"


@dataclass(frozen=True)
class ReportBundle:
    series_csv: str
    summary_json: str
    exit_code: int = 0


def render_series_csv(series: IndicatorSeries) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SERIES_COLUMNS)
    for p in series:
        writer.writerow(
            [
                p.date.isoformat(),
                repr(p.snapshot.close_price),
                p.snapshot.shares_outstanding,
                repr(p.snapshot.market_value),
                fmt6(p.result.valuation_ratio),
                fmt6(p.result.i_value),
                fmt6(p.result.i_star),
                p.strategy.label,
                ";".join(p.result.warnings),
            ]
        )
    return out.getvalue()


def summary_dict(
    config: ScenarioConfig,
    series: IndicatorSeries,
    forecast: ForecastResult | None = None,
    boundaries: GridBoundaries = DEFAULT_BOUNDARIES,
) -> dict:
    summary = classify_series(series)
    data = {
        "config": config.to_dict(),
        "points": len(series),
        "first_date": series.points[0].date.isoformat() if len(series) else None,
        "last_date": series.points[-1].date.isoformat() if len(series) else None,
        "grid_cuts": list(boundaries.cuts),
        "class_counts": {s.label: summary.counts.get(s, 0) for s in StrategyClass},
        "class_changes": [d.isoformat() for d in summary.change_dates],
        "boundary_hits": [p.date.isoformat() for p in series if boundary_hit(p.result.i_star, boundaries) is not None],
    }
    if forecast is not None:
        data["forecast"] = forecast.to_dict()
    return data


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def build_report(
    config: ScenarioConfig,
    series: IndicatorSeries,
    forecast: ForecastResult | None = None,
    boundaries: GridBoundaries = DEFAULT_BOUNDARIES,
) -> ReportBundle:
    return ReportBundle(
        series_csv=render_series_csv(series),
        summary_json=dump_json(summary_dict(config, series, forecast, boundaries)),
        exit_code=0,
    )


# Inputs of the published Electroputere worked example and the I values printed
# alongside them. The printed values cannot be reproduced from the formula.
_PUBLISHED_PROFILE = MacroProfile(7, 10, 0.066, 0.041, 0.06, 0.04)
_PUBLISHED_CASES = (
    ((31786996.224, 31786996.0), 4.382, 0.641672373),
    ((151484903.88, 151484904.0), 20.8895, 1.31992804),
)
_PUBLISHED_CAPITAL = (12416795.40, 12416795.0)


def _close(a: float, b: float, tol: float = 1e-9) -> bool:
    return math.isclose(a, b, rel_tol=tol, abs_tol=tol)


def published_discrepancy_note(profile: MacroProfile, valuation: FirmValuation) -> str | None:
    """Return an informational note when inputs match the published case study."""
    for attr in ("n_rating", "f_compat", "ri_target", "ri_origin", "rce_target", "rce_origin"):
        if not _close(getattr(profile, attr), getattr(_PUBLISHED_PROFILE, attr)):
            return None
    if not any(_close(valuation.common_stock, cs) for cs in _PUBLISHED_CAPITAL):
        return None
    for values, i_printed, i_star_printed in _PUBLISHED_CASES:
        if any(_close(valuation.enterprise_value, v) for v in values):
            return (
                f"note: the published Electroputere case study reports I={i_printed} "
                f"(I*={i_star_printed}, Acquisition) for these inputs; that figure does not "
                "follow from the five-factor product, which is reported above as computed"
            )
    return None
