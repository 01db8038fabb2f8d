"""
How steep should the risk premium be?
=====================================

SZ1 charges a mild premium for holding little liquidity, SZ3 a punishing
one.  With SZ3 the restrictive strategy stops being the best choice.
"""

import numpy as np

from liquistrat import (
    EXAMPLE_PROFILES,
    EXAMPLE_WEIGHTS,
    PRE_CRISIS,
    RoundingPolicy,
    SZCurve,
    builtin_variant,
    compare_strategies,
    sz_at,
)
from liquistrat.svgplot import sz_curve_svg

sz1 = builtin_variant("SZ1")
sz3 = builtin_variant("SZ3")

# Between anchors the premium is linear; outside them it is held constant
grid = np.linspace(0.2, 0.7, 11)
print(" CA/CR    SZ1     SZ3")
for x in grid:
    print(f"{x:6.2f} {sz_at(sz1, x):6.3f} {sz_at(sz3, x):7.3f}")

policy = RoundingPolicy(round_statement_lines_to_integers=True)
for curve in (sz1, sz3):
    res = compare_strategies(EXAMPLE_PROFILES, PRE_CRISIS, EXAMPLE_WEIGHTS, curve, policy)
    print(f"{curve.name}: best economic result = {res.best_economic_result}")

# A house view can be expressed as its own anchors
mine = SZCurve(((0.25, 0.8), (0.4, 0.3), (0.55, 0.05), (0.7, 0.0)), name="house view")
res = compare_strategies(EXAMPLE_PROFILES, PRE_CRISIS, EXAMPLE_WEIGHTS, mine, policy)
print(f"{mine.name}: best economic result = {res.best_economic_result}")

with open("sz_curves_house_view.svg", "w") as fh:
    fh.write(sz_curve_svg(mine, title="house view"))
print("wrote sz_curves_house_view.svg")
