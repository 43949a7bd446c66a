import datetime as dt
import io
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from entryrisk import (
    DomainError,
    DuplicateDateError,
    EffectiveSchedule,
    MissingQuoteError,
    ParseError,
    PriceSeries,
    QuoteRecord,
    ScheduleGapError,
    display_currency,
    market_value,
    parse_price_csv,
    serialize_price_csv,
    snapshot_at,
)

D = dt.date
SHARES_2007 = 124_167_954


class TestParse:
    def test_single_record(self):
        s = parse_price_csv("2007-06-01,0.256,120000\n")
        assert s.records == (QuoteRecord(D(2007, 6, 1), 0.256, 120000),)

    def test_header_and_crlf(self):
        s = parse_price_csv("date,close,volume\r\n2007-11-06,1.22,5\r\n2007-06-01,0.256,3\r\n")
        assert s.dates == [D(2007, 6, 1), D(2007, 11, 6)]

    def test_file_object_and_lines(self):
        text = "2007-06-01,0.256,1\n"
        assert parse_price_csv(io.StringIO(text)) == parse_price_csv([text])

    def test_non_numeric_price(self):
        with pytest.raises(ParseError) as exc:
            parse_price_csv("2007-06-01,abc,1\n")
        assert exc.value.line == 1
        assert "non-numeric price" in exc.value.reason

    def test_header_only_on_first_line(self):
        with pytest.raises(ParseError) as exc:
            parse_price_csv("2007-06-01,0.1,1\ndate,close,volume\n")
        assert exc.value.line == 2

    @pytest.mark.parametrize(
        "line, reason",
        [
            ("2007-13-01,0.1,1", "bad date"),
            ("2007-06-01,-0.1,1", "non-negative"),
            ("2007-06-01,0.1,-4", "negative volume"),
            ("2007-06-01,0.1,1.5", "non-integer volume"),
            ("2007-06-01,0.1", "expected 3 fields"),
            ("2007-06-01,1,000.5,1", "expected 3 fields"),
        ],
    )
    def test_errors(self, line, reason):
        with pytest.raises(ParseError, match=reason):
            parse_price_csv("2007-01-02,0.2,1\n" + line + "\n")

    def test_duplicate_date(self):
        with pytest.raises(DuplicateDateError) as exc:
            parse_price_csv("2007-06-01,0.256,1\n2007-06-01,0.3,2\n")
        assert exc.value.line == 2

    def test_source_in_message(self):
        with pytest.raises(ParseError, match=r"^q\.csv:1: "):
            parse_price_csv("x,y,z,w\n", source="q.csv")

    def test_empty(self):
        assert len(parse_price_csv("")) == 0


records = st.lists(
    st.tuples(
        st.dates(min_value=D(1990, 1, 1), max_value=D(2030, 12, 31)),
        st.floats(min_value=0, max_value=1e6, allow_nan=False),
        st.integers(min_value=0, max_value=10**12),
    ),
    unique_by=lambda r: r[0],
    max_size=30,
)


@given(records, st.booleans())
def test_property_round_trip(rows, header):
    series = PriceSeries(tuple(QuoteRecord(*r) for r in sorted(rows)))
    text = serialize_price_csv(series, header=header)
    assert parse_price_csv(text) == series
    assert serialize_price_csv(parse_price_csv(text), header=header) == text


class TestMarketValue:
    def test_fig2_rows(self):
        v1 = market_value(0.256, SHARES_2007)
        v2 = market_value(1.22, SHARES_2007)
        assert v1 == pytest.approx(31_786_996.224, abs=1e-6)
        assert v2 == pytest.approx(151_484_903.88, abs=1e-6)
        assert display_currency(v1) == 31_786_996
        assert display_currency(v2) == 151_484_904

    def test_zero_price(self):
        assert market_value(0.0, SHARES_2007) == 0

    @pytest.mark.parametrize("price, shares", [(-0.1, 10), (1.0, 0), (1.0, -5), (1.0, 2.5), (float("nan"), 1)])
    def test_domain(self, price, shares):
        with pytest.raises(DomainError):
            market_value(price, shares)

    @pytest.mark.parametrize("amount, expected", [(0.5, 1), (1.5, 2), (2.5, 3), (-2.5, -3), (2.4999, 2)])
    def test_half_away_from_zero(self, amount, expected):
        assert display_currency(amount) == expected

    @given(st.floats(min_value=0, max_value=1e6, allow_nan=False), st.integers(min_value=1, max_value=10**9))
    def test_property_linear(self, p, s):
        assert market_value(p, s) == market_value(2 * p, s) / 2


def test_implied_total_shares_oracle():
    # 291,284,640 shares held = 86.28% of the total after the capital increase.
    implied = Fraction(291_284_640) / Fraction("0.8628")
    assert round(implied) == 337_603_894


class TestSchedule:
    sched = EffectiveSchedule(((D(2007, 1, 1), 124_167_954), (D(2008, 12, 31), 337_603_894)))

    def test_lookup_after_increase(self):
        assert self.sched.value_at(D(2009, 6, 1)) == 337_603_894

    def test_piecewise_constant_right_continuous(self):
        assert self.sched.value_at(D(2007, 1, 1)) == 124_167_954
        assert self.sched.value_at(D(2008, 12, 30)) == 124_167_954
        assert self.sched.value_at(D(2008, 12, 31)) == 337_603_894

    def test_gap(self):
        with pytest.raises(ScheduleGapError):
            self.sched.value_at(D(2006, 12, 31))

    @pytest.mark.parametrize(
        "entries",
        [(), ((D(2008, 1, 1), 1.0), (D(2007, 1, 1), 2.0)), ((D(2008, 1, 1), 0.0),)],
    )
    def test_invalid(self, entries):
        with pytest.raises(DomainError):
            EffectiveSchedule(entries)


class TestSnapshot:
    prices = parse_price_csv("2007-06-01,0.256,0\n2007-11-06,1.22,0\n")
    shares = EffectiveSchedule(((D(2007, 1, 1), SHARES_2007),))
    cs = EffectiveSchedule(((D(2007, 1, 1), 12_416_795.40),))

    def test_takeover_date(self):
        snap = snapshot_at(self.prices, self.shares, self.cs, D(2007, 11, 6))
        assert snap.market_value == 1.22 * SHARES_2007
        assert repr(snap.market_value) == "151484903.88"
        assert snap.shares_outstanding == SHARES_2007
        assert snap.common_stock == 12_416_795.40

    def test_missing_quote(self):
        with pytest.raises(MissingQuoteError):
            snapshot_at(self.prices, self.shares, self.cs, D(2007, 6, 2))

    def test_schedule_gap(self):
        late = EffectiveSchedule(((D(2007, 7, 1), SHARES_2007),))
        with pytest.raises(ScheduleGapError):
            snapshot_at(self.prices, late, self.cs, D(2007, 6, 1))
