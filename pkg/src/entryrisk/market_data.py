"""
Daily quotations, effective-dated schedules and market capitalization.

Quotation CSV format: ``YYYY-MM-DD,<close>,<volume>`` per line, decimal
point, no thousands separators. A header line is optional and recognised by a
non-numeric second field on a first line that does not start with a date.
"""

from __future__ import annotations

import bisect
import csv
import datetime as dt
import io
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from functools import cached_property
from typing import Iterable, TextIO

from .errors import DomainError, DuplicateDateError, MissingQuoteError, ParseError, ScheduleGapError


@dataclass(frozen=True)
class QuoteRecord:
    date: dt.date
    close_price: float
    volume: int


@dataclass(frozen=True)
class PriceSeries:
    records: tuple[QuoteRecord, ...] = ()

    def __post_init__(self):
        records = tuple(self.records)
        for a, b in zip(records, records[1:]):
            if b.date <= a.date:
                raise DomainError(f"dates must be strictly ascending ({a.date} then {b.date})")
        object.__setattr__(self, "records", records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @cached_property
    def dates(self) -> list[dt.date]:
        return [r.date for r in self.records]

    def get(self, date: dt.date) -> QuoteRecord:
        dates = self.dates
        i = bisect.bisect_left(dates, date)
        if i == len(dates) or dates[i] != date:
            raise MissingQuoteError(f"no quote for {date.isoformat()}")
        return self.records[i]


@dataclass(frozen=True)
class EffectiveSchedule:
    """Piecewise-constant value keyed by the date it takes effect.

    ``value_at(d)`` returns the entry with the latest effective date ``<= d``.
    """

    entries: tuple[tuple[dt.date, float], ...]

    def __post_init__(self):
        entries = tuple((d, v) for d, v in self.entries)
        if not entries:
            raise DomainError("schedule needs at least one entry")
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if b <= a:
                raise DomainError(f"effective dates must be strictly ascending ({a} then {b})")
        for d, v in entries:
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"schedule value at {d} must be positive, got {v!r}")
        object.__setattr__(self, "entries", entries)

    @property
    def first_date(self) -> dt.date:
        return self.entries[0][0]

    @cached_property
    def _dates(self) -> list[dt.date]:
        return [d for d, _ in self.entries]

    def value_at(self, date: dt.date) -> float:
        i = bisect.bisect_right(self._dates, date)
        if i == 0:
            raise ScheduleGapError(date, f"precedes first schedule entry {self.first_date.isoformat()}")
        return self.entries[i - 1][1]


@dataclass(frozen=True)
class CompanySnapshot:
    date: dt.date
    close_price: float
    shares_outstanding: int
    common_stock: float
    market_value: float


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _is_date(text: str) -> bool:
    try:
        dt.date.fromisoformat(text)
    except ValueError:
        return False
    return True


def parse_price_csv(stream: TextIO | str | Iterable[str], source: str | None = None) -> PriceSeries:
    """Parse quotation lines into a date-ascending :class:`PriceSeries`.

    ``stream`` may be a text file object, a whole document as ``str``, or any
    iterable of lines. Blank lines are skipped.

    Raises
    ------
    ParseError
        Bad date, non-numeric or negative price, bad or negative volume, or a
        wrong field count. Carries the 1-based line number.
    DuplicateDateError
        The same date appears twice.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream, newline="")
    records: dict[dt.date, QuoteRecord] = {}
    for lineno, row in enumerate(csv.reader(stream), start=1):
        row = [c.strip() for c in row]
        if not row or row == [""]:
            continue
        if len(row) != 3:
            raise ParseError(lineno, f"expected 3 fields, got {len(row)}", source)
        date_s, price_s, volume_s = row
        if lineno == 1 and not _is_number(price_s) and not _is_date(date_s):
            continue  # header
        try:
            date = dt.date.fromisoformat(date_s)
        except ValueError:
            raise ParseError(lineno, f"bad date {date_s!r}", source) from None
        try:
            price = float(price_s)
        except ValueError:
            raise ParseError(lineno, f"non-numeric price {price_s!r}", source) from None
        if not math.isfinite(price) or price < 0:
            raise ParseError(lineno, f"price must be finite and non-negative, got {price_s!r}", source)
        try:
            volume = int(volume_s)
        except ValueError:
            raise ParseError(lineno, f"non-integer volume {volume_s!r}", source) from None
        if volume < 0:
            raise ParseError(lineno, f"negative volume {volume}", source)
        if date in records:
            raise DuplicateDateError(lineno, f"duplicate date {date.isoformat()}", source)
        records[date] = QuoteRecord(date, price, volume)
    return PriceSeries(tuple(sorted(records.values(), key=lambda r: r.date)))


def serialize_price_csv(series: PriceSeries, header: bool = True) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if header:
        writer.writerow(["date", "close", "volume"])
    for r in series:
        writer.writerow([r.date.isoformat(), repr(r.close_price), r.volume])
    return out.getvalue()


def market_value(close_price: float, shares_outstanding: int) -> float:
    """Market capitalization, ``close_price * shares_outstanding`` (unrounded)."""
    if not (math.isfinite(close_price) and close_price >= 0):
        raise DomainError(f"close price must be non-negative, got {close_price!r}")
    if not shares_outstanding > 0 or shares_outstanding != int(shares_outstanding):
        raise DomainError(f"shares outstanding must be a positive integer, got {shares_outstanding!r}")
    return close_price * int(shares_outstanding)


def display_currency(amount: float) -> int:
    """Round to the nearest currency unit, halves away from zero."""
    return int(Decimal(repr(amount)).quantize(Decimal(1), rounding=ROUND_HALF_UP))


def snapshot_at(
    series: PriceSeries,
    shares: EffectiveSchedule,
    common_stock: EffectiveSchedule,
    date: dt.date,
) -> CompanySnapshot:
    quote = series.get(date)
    n_shares = shares.value_at(date)
    cs = common_stock.value_at(date)
    return CompanySnapshot(
        date=date,
        close_price=quote.close_price,
        shares_outstanding=int(n_shares),
        common_stock=cs,
        market_value=market_value(quote.close_price, n_shares),
    )
