"""
Three liquidity strategies side by side
=======================================

A nonprofit with 2000 of cash revenues can hold little (restrictive), some
(moderate) or plenty (flexible) of its revenues as current assets.  More
liquidity costs more capital but lowers risk, which shows up here as a
smaller SZ premium on beta.
"""

from liquistrat import (
    AS_PRINTED,
    EXAMPLE_PROFILES,
    EXAMPLE_WEIGHTS,
    PRE_CRISIS,
    AFTER_CRISIS,
    builtin_variant,
    compare_strategies,
)
from liquistrat.report import render_scenario

sz1 = builtin_variant("SZ1")

# The statement lines are what the balance sheet would show for each choice.
# Rounding mirrors how the worked example prints its intermediate values.
result = compare_strategies(EXAMPLE_PROFILES, PRE_CRISIS, EXAMPLE_WEIGHTS, sz1, AS_PRINTED)
print(render_scenario(result))

# Every number above lives on the outcome objects too
for o in result:
    print(f"{o.name:12s} beta {o.corrected_beta:.4f}  CC {o.cost_of_capital:.4%}  "
          f"result {o.economic_result:9.2f}")

# After a market shock the risk-free rate and the premium both rise.  The
# ranking of strategies stays the same but every result shrinks.
shocked = compare_strategies(EXAMPLE_PROFILES, AFTER_CRISIS, EXAMPLE_WEIGHTS, sz1, AS_PRINTED)
for before, after in zip(result, shocked):
    drop = after.economic_result - before.economic_result
    print(f"{before.name:12s} {before.economic_result:9.2f} -> {after.economic_result:9.2f} ({drop:+.2f})")
