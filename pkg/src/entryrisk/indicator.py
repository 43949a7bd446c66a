"""
Market-entry risk indicator.

The indicator multiplies five dimensionless factors::

    I = N * F * (1 + RI_T) / (1 + RI_O) * (1 + RCE_T) / (1 + RCE_O) * V / CS

where ``N`` is the country-risk rating of the target market (1..10), ``F``
the cultural/organizational compatibility score (0.1..100), ``RI`` and ``RCE``
the inflation and economic-growth rates of the target (``_T``) and origin
(``_O``) countries, ``V`` the economic (market) value of the firm used for the
association and ``CS`` its common stock.

``I* = log10(I)`` splits into a country term ``log10(N * monetary * growth)``
and a firm term ``log10(F * V / CS)``.

Ratio limits (monetary and growth ratios in (0, 2], V/CS in [0, 100]) are
reported as soft warnings; only the rating bounds and rates <= -100% are hard
violations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError

N_RANGE = (1.0, 10.0)
F_RANGE = (0.1, 100.0)
RATIO_SOFT_MAX = 2.0
VALUATION_SOFT_MAX = 100.0


@dataclass(frozen=True)
class MacroProfile:
    """Country and compatibility factors for one evaluation regime.

    Rates are fractions: ``0.066`` means 6.6%. Growth rates may be negative.
    """

    n_rating: float
    f_compat: float
    ri_target: float
    ri_origin: float
    rce_target: float
    rce_origin: float

    @property
    def monetary_ratio(self) -> float:
        return (1.0 + self.ri_target) / (1.0 + self.ri_origin)

    @property
    def growth_ratio(self) -> float:
        return (1.0 + self.rce_target) / (1.0 + self.rce_origin)


@dataclass(frozen=True)
class FirmValuation:
    enterprise_value: float
    common_stock: float

    @property
    def valuation_ratio(self) -> float:
        if not self.common_stock > 0:
            raise DomainError(f"common stock must be positive, got {self.common_stock!r}")
        return self.enterprise_value / self.common_stock


@dataclass(frozen=True)
class Finding:
    """One validation outcome. ``hard`` findings block computation."""

    code: str
    message: str
    hard: bool

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class IndicatorResult:
    i_value: float
    i_star: float
    monetary_ratio: float
    growth_ratio: float
    valuation_ratio: float
    country_term: float
    firm_term: float
    warnings: tuple[str, ...] = field(default_factory=tuple)


class ValuationHealth(enum.Enum):
    RICH_IN_ASSETS = "RichInAssets"
    PARITY = "Parity"
    NEAR_BANKRUPT = "NearBankrupt"


def _bounded(name: str, code: str, value: float, lo: float, hi: float) -> list[Finding]:
    if not math.isfinite(value):
        return [Finding(f"{code}_not_finite", f"{name} is not finite", True)]
    if value < lo:
        return [Finding(f"{code}_below_min", f"{name} below {lo:g}", True)]
    if value > hi:
        return [Finding(f"{code}_above_max", f"{name} above {hi:g}", True)]
    return []


def validate_profile(profile: MacroProfile) -> list[Finding]:
    """Check a profile against the factor ranges.

    Returns hard violations (rating bounds, non-finite values, rates at or
    below -100%) and soft warnings (monetary or growth ratio above 2). Never
    raises.
    """
    findings = _bounded("N", "n", profile.n_rating, *N_RANGE)
    findings += _bounded("F", "f", profile.f_compat, *F_RANGE)

    rates_ok = True
    for attr in ("ri_target", "ri_origin", "rce_target", "rce_origin"):
        value = getattr(profile, attr)
        if not math.isfinite(value):
            findings.append(Finding(f"{attr}_not_finite", f"{attr} is not finite", True))
            rates_ok = False
        elif value <= -1.0:
            findings.append(Finding(f"{attr}_not_above_minus_one", f"{attr} must exceed -1 (-100%)", True))
            rates_ok = False

    if rates_ok:
        for code, label, ratio in (
            ("monetary_ratio_above_2", "monetary ratio", profile.monetary_ratio),
            ("growth_ratio_above_2", "growth ratio", profile.growth_ratio),
        ):
            if ratio > RATIO_SOFT_MAX:
                findings.append(Finding(code, f"{label} {ratio:g} exceeds {RATIO_SOFT_MAX:g}", False))
    return findings


def _check_valuation(valuation: FirmValuation) -> None:
    v, cs = valuation.enterprise_value, valuation.common_stock
    if not (math.isfinite(cs) and cs > 0):
        raise DomainError(f"common stock must be positive and finite, got {cs!r}")
    if not (math.isfinite(v) and v >= 0):
        raise DomainError(f"enterprise value must be non-negative and finite, got {v!r}")


def log_indicator(i_value: float) -> float:
    """Decimal logarithm of the indicator."""
    if not i_value > 0 or not math.isfinite(i_value):
        raise DomainError(f"indicator must be positive and finite, got {i_value!r}")
    return math.log10(i_value)


def compute_indicator(profile: MacroProfile, valuation: FirmValuation) -> IndicatorResult:
    """Evaluate I, I* and the per-factor breakdown.

    Raises
    ------
    DomainError
        If the profile has a hard violation, ``common_stock <= 0``, or the
        enterprise value is zero or negative (``I*`` would be undefined).
    """
    findings = validate_profile(profile)
    hard = [f for f in findings if f.hard]
    if hard:
        raise DomainError("; ".join(f.message for f in hard))
    _check_valuation(valuation)
    if valuation.enterprise_value == 0:
        raise DomainError("enterprise value is zero; log of the indicator is undefined")

    monetary = profile.monetary_ratio
    growth = profile.growth_ratio
    vr = valuation.valuation_ratio
    warnings = [f.code for f in findings]
    if vr > VALUATION_SOFT_MAX:
        warnings.append("valuation_ratio_above_100")

    country = profile.n_rating * monetary * growth
    firm = profile.f_compat * vr
    i_value = country * firm
    if not math.isfinite(i_value):
        raise DomainError("indicator overflowed")
    return IndicatorResult(
        i_value=i_value,
        i_star=log_indicator(i_value),
        monetary_ratio=monetary,
        growth_ratio=growth,
        valuation_ratio=vr,
        country_term=math.log10(country),
        firm_term=math.log10(firm),
        warnings=tuple(warnings),
    )


def valuation_health(valuation: FirmValuation) -> ValuationHealth:
    """Classify a firm as rich in assets (V > CS), at parity, or near bankruptcy."""
    _check_valuation(valuation)
    v, cs = valuation.enterprise_value, valuation.common_stock
    if v > cs:
        return ValuationHealth.RICH_IN_ASSETS
    if v < cs:
        return ValuationHealth.NEAR_BANKRUPT
    return ValuationHealth.PARITY
