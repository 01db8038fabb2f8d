"""
Means that survive outliers
===========================

Financial ratios of small organizations are heavy tailed: one charity with
almost no liabilities gives a current ratio in the thousands.  Trimmed and
winsorized means stay near the bulk of the data.
"""

import numpy as np

from liquistrat import five_number, summarize, trimmed_mean, winsorized_mean

rng = np.random.default_rng(3)
ratios = rng.lognormal(mean=0.3, sigma=0.6, size=200)
ratios[:3] = [850.0, 1200.0, 4000.0]

print(f"mean            {ratios.mean():10.3f}")
for f in (0.05, 0.10, 0.25):
    print(f"trimmed {f:.2f}    {trimmed_mean(ratios, f):10.3f}   "
          f"winsorized {winsorized_mean(ratios, f):8.3f}")

fn = five_number(ratios)
print("five-number summary", ", ".join(f"{v:.3f}" for v in fn.as_tuple()))

# summarize() returns the full descriptive row; fractions travel with it
row = summarize(ratios, trim_fraction=0.1, winsor_fraction=0.1)
for name in row.STAT_FIELDS:
    print(f"{name:16s} {getattr(row, name)}")
print("trim", row.trim_fraction, "winsor", row.winsor_fraction)

# Too few values: statistics that cannot be computed come back as None
print(summarize([2.5, 2.5]))
