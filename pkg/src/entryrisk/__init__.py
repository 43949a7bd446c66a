"""Market-entry risk indicator: computation, strategy grid, daily series and extrapolation."""

from .errors import (
    ConfigError,
    CoverageError,
    DomainError,
    DuplicateDateError,
    EntryRiskError,
    InsufficientDataError,
    MissingQuoteError,
    ParseError,
    ScheduleGapError,
)
from .grid import DEFAULT_BOUNDARIES, GridBoundaries, StrategyClass, boundary_hit, classify, describe
from .indicator import (
    FirmValuation,
    IndicatorResult,
    MacroProfile,
    ValuationHealth,
    compute_indicator,
    log_indicator,
    validate_profile,
    valuation_health,
)
from .market_data import (
    CompanySnapshot,
    EffectiveSchedule,
    PriceSeries,
    QuoteRecord,
    display_currency,
    market_value,
    parse_price_csv,
    serialize_price_csv,
    snapshot_at,
)
from .scenario import MacroSegment, ScenarioConfig, load_scenario, parse_scenario
from .series import (
    ForecastResult,
    IndicatorSeries,
    SeriesSummary,
    build_series,
    classify_series,
    forecast,
    forecast_values,
)

__version__ = "0.1.0"
