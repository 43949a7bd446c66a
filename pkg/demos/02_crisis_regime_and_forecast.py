"""
Regime change in 2008-2009 and trend extrapolation
==================================================

The crisis template downgrades the rating to 5, raises target inflation to
10% then 12%, and assumes an EU acquirer (growth 1% at home, -7% in Romania).
The acquirer's own inflation is not known, so the template leaves it blank
and refuses to load until it is set.

The daily quotation history is not bundled, so this script generates a
synthetic price path purely to exercise the engine. Its numbers say nothing
about the real stock.
"""

import datetime as dt
import json

import numpy as np

from entryrisk import (
    ConfigError,
    PriceSeries,
    QuoteRecord,
    build_series,
    classify_series,
    data,
    forecast,
    load_scenario,
    parse_scenario,
)

template_path = data.path("electroputere_2008_2009.template.json")
try:
    load_scenario(str(template_path))
except ConfigError as exc:
    print("template refused:", exc)

# %%
# Fill in the missing origin inflation with an explicit assumption.
ASSUMED_EU_INFLATION = 0.03
doc = json.loads(template_path.read_text())
for seg in doc["segments"]:
    if seg["profile"]["ri_origin"] is None:
        seg["profile"]["ri_origin"] = ASSUMED_EU_INFLATION
config = parse_scenario(doc)

# %%
# Synthetic business-day prices from mid-2007 to end-2009: a rise into the
# takeover, a slide through 2008 and a trough in 2009.
rng = np.random.default_rng(42)
days = [d for d in np.arange("2007-06-01", "2010-01-01", dtype="datetime64[D]").astype(dt.datetime)]
days = [d for d in days if d.weekday() < 5]
t = np.linspace(0, 1, len(days))
level = 0.3 * (1 - t) ** 3 + 1.0 * np.exp(-((t - 0.2) / 0.08) ** 2) + 0.04 + 0.05 * t ** 4
prices = np.round(level * np.exp(rng.normal(0, 0.03, len(days))), 4)
series_in = PriceSeries(tuple(QuoteRecord(d, float(p), int(v)) for d, p, v in zip(days, prices, rng.integers(0, 50_000, len(days)))))

series = build_series(config, series_in)
i_star = series.i_star
print(f"\n{len(series)} trading days, I* from {i_star.min():.3f} to {i_star.max():.3f}")

summary = classify_series(series)
for strategy, count in summary.counts.items():
    print(f"  {strategy.label:22s} {count:4d} days")
print("class changes on:", ", ".join(d.isoformat() for d in summary.change_dates[:8]), "...")

# %%
# Four yearly steps ahead from the last 120 trading days, linear trend vs hold-last.
for method in ("linear", "hold-last"):
    fc = forecast(series, window=120, horizon=4, step="1y", method=method)
    print(f"\n{method}:")
    for d, v in fc.horizon_points:
        print(f"  {d}  I* = {v:.3f}")
