"""
How each factor moves I* across the strategy grid
=================================================
"""

import numpy as np

from entryrisk import FirmValuation, GridBoundaries, MacroProfile, classify, compute_indicator

base = dict(n_rating=7, f_compat=10, ri_target=0.066, ri_origin=0.041, rce_target=0.06, rce_origin=0.04)
valuation = FirmValuation(31_786_996.224, 12_416_795.40)

# %%
# Rating sweep. I is linear in N, so I* shifts by lg(N2/N1).
for n in (1, 3, 5, 7, 10):
    res = compute_indicator(MacroProfile(**{**base, "n_rating": n}), valuation)
    print(f"N={n:2d}  I*={res.i_star:.3f}  {classify(res.i_star).label}")

# %%
# Compatibility spans three decades, so it alone can cross the whole grid.
print()
for f in (0.1, 1, 10, 100):
    res = compute_indicator(MacroProfile(**{**base, "f_compat": f}), valuation)
    print(f"F={f:6g}  I*={res.i_star:.3f}  {classify(res.i_star).label}")

# %%
# Valuation ratio: from near-bankrupt (V < CS) to asset-rich.
print()
for ratio in np.geomspace(0.01, 100, 5):
    res = compute_indicator(MacroProfile(**base), FirmValuation(ratio * 1e6, 1e6))
    print(f"V/CS={ratio:8.3f}  I*={res.i_star:.3f}  {classify(res.i_star).label}  {res.warnings or ''}")

# %%
# Moving the cuts changes only the classification, never I*.
res = compute_indicator(MacroProfile(**base), valuation)
for cuts in [(0, 1.6, 2, 5), (0, 2.0, 2.5, 5), (0, 1.0, 1.5, 2.2)]:
    print(f"cuts={cuts}: {classify(res.i_star, GridBoundaries(cuts)).label}")
