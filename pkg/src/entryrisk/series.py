"""
Day-by-day indicator series, trend extrapolation and class summaries.

Forecasts extrapolate I* (the grid variable), not I. The ``linear`` method
fits an ordinary least-squares line ``i_star = intercept + slope * t`` over
the trailing window, with ``t`` measured in calendar days from the first date
of the window so that gaps between trading days are respected. ``hold-last``
repeats the final observation.
"""

from __future__ import annotations

import datetime as dt
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from dateutil.relativedelta import relativedelta

from .errors import DomainError, InsufficientDataError
from .grid import DEFAULT_BOUNDARIES, GridBoundaries, StrategyClass, classify
from .indicator import FirmValuation, IndicatorResult, compute_indicator
from .market_data import CompanySnapshot, PriceSeries, snapshot_at
from .scenario import ScenarioConfig

METHODS = ("linear", "hold-last")


@dataclass(frozen=True)
class IndicatorPoint:
    date: dt.date
    snapshot: CompanySnapshot
    result: IndicatorResult
    strategy: StrategyClass


@dataclass(frozen=True)
class IndicatorSeries:
    points: tuple[IndicatorPoint, ...] = ()

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def dates(self) -> list[dt.date]:
        return [p.date for p in self.points]

    @property
    def i_star(self) -> np.ndarray:
        return np.array([p.result.i_star for p in self.points], dtype=float)


@dataclass(frozen=True)
class ForecastResult:
    method: str
    window_used: int
    window_start: dt.date
    horizon_points: tuple[tuple[dt.date, float], ...]
    slope: float | None = None  # per calendar day
    intercept: float | None = None  # I* at window_start

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "window_used": self.window_used,
            "window_start": self.window_start.isoformat(),
            "slope_per_day": self.slope,
            "intercept": self.intercept,
            "horizon": [{"date": d.isoformat(), "i_star": v} for d, v in self.horizon_points],
        }


@dataclass(frozen=True)
class SeriesSummary:
    counts: dict[StrategyClass, int] = field(default_factory=dict)
    change_dates: tuple[dt.date, ...] = ()


def build_series(
    config: ScenarioConfig,
    prices: PriceSeries,
    boundaries: GridBoundaries = DEFAULT_BOUNDARIES,
) -> IndicatorSeries:
    """Evaluate the indicator on every trading date of ``prices``.

    Raises
    ------
    CoverageError
        For the first date lacking a macro segment or a schedule entry.
    DomainError
        If the indicator is undefined on some date (e.g. a zero close price).
    """
    points = []
    for quote in prices:
        date = quote.date
        segment = config.segment_for(date)
        snap = snapshot_at(prices, config.shares_schedule, config.common_stock_schedule, date)
        try:
            result = compute_indicator(segment.profile, FirmValuation(snap.market_value, snap.common_stock))
        except DomainError as exc:
            raise DomainError(f"{date.isoformat()}: {exc}") from None
        points.append(IndicatorPoint(date, snap, result, classify(result.i_star, boundaries)))
    return IndicatorSeries(tuple(points))


_STEP_RE = re.compile(r"^\s*(\d+)\s*([dwmy])\s*$", re.IGNORECASE)


def parse_step(step: str | dt.timedelta | relativedelta) -> relativedelta:
    """Accept ``'30d'``, ``'2w'``, ``'3m'``, ``'1y'``, a timedelta or a relativedelta."""
    if isinstance(step, relativedelta):
        return step
    if isinstance(step, dt.timedelta):
        return relativedelta(days=step.days)
    m = _STEP_RE.match(str(step))
    if not m or int(m.group(1)) == 0:
        raise ValueError(f"bad step {step!r}; expected e.g. '1d', '2w', '3m', '1y'")
    count, unit = int(m.group(1)), m.group(2).lower()
    return {
        "d": relativedelta(days=count),
        "w": relativedelta(weeks=count),
        "m": relativedelta(months=count),
        "y": relativedelta(years=count),
    }[unit]


def ols_line(t: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Least-squares (intercept, slope) of ``y`` on ``t`` via centred sums."""
    t_mean, y_mean = t.mean(), y.mean()
    dt_ = t - t_mean
    sxx = float(dt_ @ dt_)
    if sxx == 0:
        raise InsufficientDataError("need at least two distinct dates")
    slope = float(dt_ @ (y - y_mean)) / sxx
    return float(y_mean - slope * t_mean), slope


def forecast_values(
    dates: Sequence[dt.date],
    values: Sequence[float],
    window: int,
    horizon: int,
    step: str | dt.timedelta | relativedelta = "1y",
    method: str = "linear",
) -> ForecastResult:
    """Extrapolate a dated I* sequence ``horizon`` steps past its last date."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if window < 2:
        raise InsufficientDataError(f"window must be at least 2, got {window}")
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    if len(dates) != len(values):
        raise ValueError("dates and values differ in length")
    if len(dates) < window:
        raise InsufficientDataError(f"{len(dates)} points available, window needs {window}")

    step = parse_step(step)
    win_dates = list(dates[-window:])
    y = np.asarray(values[-window:], dtype=float)
    origin = win_dates[0]
    last = win_dates[-1]
    targets = [last + step * k for k in range(1, horizon + 1)]

    if method == "hold-last":
        return ForecastResult(method, window, origin, tuple((d, float(y[-1])) for d in targets))

    t = np.array([(d - origin).days for d in win_dates], dtype=float)
    intercept, slope = ols_line(t, y)
    preds = tuple((d, intercept + slope * (d - origin).days) for d in targets)
    return ForecastResult(method, window, origin, preds, slope=slope, intercept=intercept)


def forecast(
    series: IndicatorSeries,
    window: int,
    horizon: int,
    step: str | dt.timedelta | relativedelta = "1y",
    method: str = "linear",
) -> ForecastResult:
    return forecast_values(series.dates, list(series.i_star), window, horizon, step, method)


def classify_series(series: IndicatorSeries) -> SeriesSummary:
    """Count points per strategy and list the dates where the strategy changes."""
    counts = Counter(p.strategy for p in series)
    changes = tuple(
        cur.date for prev, cur in zip(series.points, series.points[1:]) if cur.strategy != prev.strategy
    )
    return SeriesSummary(dict(sorted(counts.items())), changes)

