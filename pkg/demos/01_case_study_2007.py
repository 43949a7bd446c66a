"""
Electroputere S.A. in 2007: market value, indicator and entry strategy
=====================================================================

Two dates before the Al-Arrab takeover: 1 June 2007 and 6 November 2007.
"""

from entryrisk import (
    FirmValuation,
    MacroProfile,
    classify,
    compute_indicator,
    describe,
    display_currency,
    market_value,
)
from entryrisk.report import published_discrepancy_note

# Romania as target market, Saudi Arabia as origin: rating 7 (Baa3), compatibility 10,
# inflation 6.6% vs 4.1%, growth 6% vs 4%.
profile = MacroProfile(n_rating=7, f_compat=10, ri_target=0.066, ri_origin=0.041, rce_target=0.06, rce_origin=0.04)

shares = 124_167_954
common_stock = 12_416_795.40

# %%
# Market value from the closing price and the share count. The unrounded value
# feeds the indicator; only the display is rounded to whole lei.
for date, price in [("2007-06-01", 0.256), ("2007-11-06", 1.22)]:
    v = market_value(price, shares)
    print(f"{date}: V = {v!r} lei (displayed {display_currency(v):,} lei)")

# %%
# The indicator and its decimal logarithm, with the country/firm split of I*.
for date, price in [("2007-06-01", 0.256), ("2007-11-06", 1.22)]:
    valuation = FirmValuation(market_value(price, shares), common_stock)
    res = compute_indicator(profile, valuation)
    strategy = classify(res.i_star)
    print(f"\n{date}")
    print(f"  I  = {res.i_value:.4f}")
    print(f"  I* = {res.i_star:.6f}  (country {res.country_term:.6f} + firm {res.firm_term:.6f})")
    print(f"  -> {strategy.label}: {describe(strategy)[1]}")
    note = published_discrepancy_note(profile, valuation)
    if note:
        print("  " + note)

# %%
# The printed case-study figures (4.382 and 20.8895) are both lower than the
# product by roughly the same factor, which hints at an unstated rescaling.
# We do not guess it; the ratio is shown for reference.
for printed, price in [(4.382, 0.256), (20.8895, 1.22)]:
    res = compute_indicator(profile, FirmValuation(market_value(price, shares), common_stock))
    print(f"computed / printed = {res.i_value / printed:.3f}")
