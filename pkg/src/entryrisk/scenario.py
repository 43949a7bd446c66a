"""
Scenario configuration: date-segmented macro profiles plus the shares and
common-stock schedules that drive a series run.

JSON layout::

    {
      "segments": [{"start": "2007-01-01", "end": "2007-12-31",
                    "profile": {"n": 7, "f": 10, "ri_target": 0.066, "ri_origin": 0.041,
                                "rce_target": 0.06, "rce_origin": 0.04}}],
      "shares": [{"effective": "2007-01-01", "value": 124167954}],
      "common_stock": [{"effective": "2007-01-01", "value": 12416795.40}],
      "prices": "prices.csv"
    }

Unknown keys are rejected, and every profile field must be given explicitly;
nothing is defaulted.
"""

from __future__ import annotations

import datetime as dt
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ConfigError, CoverageError, DomainError
from .indicator import MacroProfile
from .market_data import EffectiveSchedule

_PROFILE_KEYS = {
    "n": "n_rating",
    "f": "f_compat",
    "ri_target": "ri_target",
    "ri_origin": "ri_origin",
    "rce_target": "rce_target",
    "rce_origin": "rce_origin",
}


@dataclass(frozen=True)
class MacroSegment:
    start: dt.date
    end: dt.date | None
    profile: MacroProfile

    def __post_init__(self):
        if self.end is not None and self.end < self.start:
            raise ConfigError(f"segment ends ({self.end}) before it starts ({self.start})")

    def covers(self, date: dt.date) -> bool:
        return self.start <= date and (self.end is None or date <= self.end)


@dataclass(frozen=True)
class ScenarioConfig:
    segments: tuple[MacroSegment, ...]
    shares_schedule: EffectiveSchedule
    common_stock_schedule: EffectiveSchedule
    price_csv_path: str
    base_dir: Path | None = field(default=None, compare=False)

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise ConfigError("at least one segment is required")
        for a, b in zip(segs, segs[1:]):
            if b.start <= a.start:
                raise ConfigError(f"segments must be date-ascending ({a.start} then {b.start})")
            if a.end is None or b.start <= a.end:
                raise ConfigError(f"overlapping segments starting {a.start} and {b.start}")
        object.__setattr__(self, "segments", segs)

    def segment_for(self, date: dt.date) -> MacroSegment:
        for seg in self.segments:
            if seg.covers(date):
                return seg
        raise CoverageError(date, "not covered by any macro segment")

    @property
    def resolved_price_path(self) -> Path:
        path = Path(self.price_csv_path)
        if self.base_dir is not None and not path.is_absolute():
            path = self.base_dir / path
        return path

    def to_dict(self) -> dict[str, Any]:
        def sched(s: EffectiveSchedule):
            return [{"effective": d.isoformat(), "value": v} for d, v in s.entries]

        return {
            "segments": [
                {
                    "start": seg.start.isoformat(),
                    "end": seg.end.isoformat() if seg.end else None,
                    "profile": {k: getattr(seg.profile, attr) for k, attr in _PROFILE_KEYS.items()},
                }
                for seg in self.segments
            ],
            "shares": sched(self.shares_schedule),
            "common_stock": sched(self.common_stock_schedule),
            "prices": self.price_csv_path,
        }


def _keys(obj: Any, required: set[str], where: str, optional: frozenset[str] = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{where}: expected an object")
    unknown = set(obj) - required - optional
    if unknown:
        raise ConfigError(f"{where}: unknown keys {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ConfigError(f"{where}: missing keys {sorted(missing)}")
    return obj


def _date(value: Any, where: str) -> dt.date:
    try:
        return dt.date.fromisoformat(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{where}: bad date {value!r}") from None


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(f"{where}: not finite")
    return float(value)


def _schedule(raw: Any, where: str) -> EffectiveSchedule:
    if not isinstance(raw, list) or not raw:
        raise ConfigError(f"{where}: expected a non-empty list")
    entries = []
    for i, item in enumerate(raw):
        item = _keys(item, {"effective", "value"}, f"{where}[{i}]")
        entries.append((_date(item["effective"], f"{where}[{i}].effective"), _number(item["value"], f"{where}[{i}].value")))
    try:
        return EffectiveSchedule(tuple(entries))
    except DomainError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_scenario(data: Any, base_dir: Path | str | None = None) -> ScenarioConfig:
    """Build a :class:`ScenarioConfig` from decoded JSON, validating strictly."""
    data = _keys(data, {"segments", "shares", "common_stock", "prices"}, "config")
    if not isinstance(data["segments"], list):
        raise ConfigError("segments: expected a list")
    segments = []
    for i, raw in enumerate(data["segments"]):
        where = f"segments[{i}]"
        raw = _keys(raw, {"start", "profile"}, where, frozenset({"end"}))
        prof = _keys(raw["profile"], set(_PROFILE_KEYS), f"{where}.profile")
        values = {}
        for key, attr in _PROFILE_KEYS.items():
            if prof[key] is None:
                raise ConfigError(f"{where}.profile.{key} must be set explicitly")
            values[attr] = _number(prof[key], f"{where}.profile.{key}")
        end = raw.get("end")
        segments.append(
            MacroSegment(
                start=_date(raw["start"], f"{where}.start"),
                end=None if end is None else _date(end, f"{where}.end"),
                profile=MacroProfile(**values),
            )
        )
    if not isinstance(data["prices"], str):
        raise ConfigError("prices: expected a path string")
    return ScenarioConfig(
        segments=tuple(segments),
        shares_schedule=_schedule(data["shares"], "shares"),
        common_stock_schedule=_schedule(data["common_stock"], "common_stock"),
        price_csv_path=data["prices"],
        base_dir=None if base_dir is None else Path(base_dir),
    )


def load_scenario(path: Path | str) -> ScenarioConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from None
    try:
        return parse_scenario(data, base_dir=path.parent)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None
