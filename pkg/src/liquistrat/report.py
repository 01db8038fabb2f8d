"""Text and CSV rendering of strategy comparisons and summary tables.

Renderers only format numbers that were already computed; they never
recompute anything.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional, Sequence

from .indicators import CL_SHORT_DEBT_PLUS_PAYABLES
from .ingest import Dataset, column, filter as filter_dataset
from .robust import SummaryRow, summarize
from .strategy import StrategyComparison, StrategyOutcome

__all__ = [
    "ABSENT",
    "SCENARIO_ROWS",
    "STAT_LABELS",
    "DEFAULT_METRICS",
    "GroupSummary",
    "fixed",
    "scenario_cells",
    "render_scenario",
    "summary_table",
    "render_stats",
]

ABSENT = "–"

DEFAULT_METRICS = (
    "receivables_period",
    "payables_period",
    "inventory_period",
    "current_ratio",
    "quick_ratio",
    "cash_ratio",
)


def fixed(value: float, decimals: int = 2, scale: int = 1) -> str:
    """Half-up fixed-point text of ``value * scale`` (scale applied exactly)."""
    d = Decimal(repr(float(value))) * scale
    out = d.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP)
    if out == 0:
        out = abs(out)
    return f"{out:f}"


def _short(value: float, decimals: int = 6) -> str:
    text = fixed(value, decimals)
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _money(v):
    return fixed(v, 2)


def _pct(v):
    return fixed(v, 2, 100) + " %"


# (label, getter, formatter)
SCENARIO_ROWS = (
    ("Cash revenues (CR)", lambda o: o.profile.cash_revenues, _money),
    ("Fixed assets (FA)", lambda o: o.profile.fixed_assets, _money),
    ("Current assets (CA)", lambda o: o.statement.current_assets, _money),
    ("Total assets (TA)", lambda o: o.statement.total_assets, _money),
    ("Accounts payable (AP)", lambda o: o.statement.accounts_payable, _money),
    ("Capital invested (E + Dl + Ds)", lambda o: o.statement.capital_invested, _money),
    ("Equity (E)", lambda o: o.statement.equity, _money),
    ("Long-term debt (Dl)", lambda o: o.statement.long_term_debt, _money),
    ("Short-term debt (Ds)", lambda o: o.statement.short_term_debt, _money),
    ("CA/CR", lambda o: o.profile.ca_to_cr, _short),
    ("EBIT share in CR", lambda o: o.profile.ebit_share, _short),
    ("EBIT", lambda o: o.statement.ebit, _money),
    ("Free cash flow, periods 1..n", lambda o: o.statement.fcf_recurring, _money),
    ("Initial free cash flow (FCF0)", lambda o: o.statement.fcf_initial, _money),
    ("SZ risk premium correction", lambda o: o.sz_premium, _short),
    ("Leveraged beta (Hamada)", lambda o: o.leveraged_beta, _short),
    ("Leveraged and corrected beta", lambda o: o.corrected_beta, _short),
    ("Cost of equity (ke)", lambda o: o.cost_of_equity, _pct),
    ("Long-term debt rate (kdl)", lambda o: o.long_debt_rate, _pct),
    ("Short-term debt rate (kds)", lambda o: o.short_debt_rate, _pct),
    ("Cost of capital (CC)", lambda o: o.cost_of_capital, _pct),
    ("Economic result", lambda o: o.economic_result, _money),
)


def scenario_cells(outcomes: Sequence[StrategyOutcome]) -> list[list[str]]:
    """Header row followed by one row per line item, one column per strategy."""
    rows = [["Liquidity investment strategy"] + [o.name for o in outcomes]]
    for label, get, fmt in SCENARIO_ROWS:
        rows.append([label] + [fmt(get(o)) for o in outcomes])
    return rows


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def render_scenario(comparison: StrategyComparison, fmt: str = "text") -> str:
    rows = scenario_cells(comparison.outcomes)
    if fmt == "csv":
        return _csv(rows)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = _align(rows)
    out += f"\nHighest economic result: {comparison.best_economic_result}\n"
    out += f"Lowest cost of capital: {comparison.lowest_cost_of_capital}\n"
    for o in comparison.outcomes:
        for flag in o.flags:
            out += f"warning: {o.name}: {flag}\n"
    return out


STAT_LABELS = (
    ("size", "Size"),
    ("average", "Average"),
    ("sd", "Standard deviation"),
    ("median", "Median"),
    ("truncated_mean", "Truncated mean"),
    ("winsorized_mean", "Winsorized mean"),
    ("skewness", "Skewness"),
    ("maximum", "Maximum"),
    ("minimum", "Minimum"),
)


@dataclass(frozen=True)
class GroupSummary:
    group: str
    metric: str
    row: SummaryRow


def _groups(ds: Dataset, group_by: Optional[str]) -> list[tuple[str, Dataset]]:
    if group_by in (None, "none"):
        return [("all", ds)]
    if group_by == "year":
        return [(str(y), filter_dataset(ds, year=y)) for y in ds.years()]
    if group_by == "sector":
        groups = [(s, filter_dataset(ds, sector=s)) for s in ds.sectors()]
        bare = tuple(r for r in ds.records if not r.sectors)
        if bare:
            groups.append(("unassigned", Dataset(bare, ds.source)))
        return groups
    raise ValueError(f"unknown grouping {group_by!r}; expected sector, year or none")


def summary_table(
    ds: Dataset,
    group_by: Optional[str] = None,
    metrics: Sequence[str] = DEFAULT_METRICS,
    trim: float = 0.05,
    winsor: float = 0.05,
    day_count: float = 365.0,
    cl_definition: str = CL_SHORT_DEBT_PLUS_PAYABLES,
) -> list[GroupSummary]:
    """One :class:`SummaryRow` per (group, metric), groups in label order.

    Under sector grouping a record with several sectors counts in each of
    them; records without any sector form an ``unassigned`` group.
    """
    # resolve metric names before doing any work so typos fail fast
    for m in metrics:
        column(Dataset(()), m)
    out = []
    for label, sub in _groups(ds, group_by):
        for m in metrics:
            sample = column(sub, m, day_count, cl_definition)
            out.append(GroupSummary(label, m, summarize(sample, trim, winsor)))
    return out


def _stat_text(value, name) -> str:
    if value is None:
        return ABSENT
    if name == "size":
        return str(value)
    return fixed(value, 2)


def _stat_csv(value, name) -> str:
    if value is None:
        return ABSENT
    if name == "size":
        return str(value)
    return repr(float(value))


def render_stats(table: Sequence[GroupSummary], fmt: str = "text", *,
                 day_count: float = 365.0,
                 cl_definition: str = CL_SHORT_DEBT_PLUS_PAYABLES) -> str:
    if fmt == "csv":
        header = (["group", "metric"] + [name for name, _ in STAT_LABELS]
                  + ["trim_fraction", "winsor_fraction", "quantile_method", "skewness_method"])
        rows = [header]
        for g in table:
            r = g.row
            rows.append([g.group, g.metric]
                        + [_stat_csv(getattr(r, name), name) for name, _ in STAT_LABELS]
                        + [repr(r.trim_fraction), repr(r.winsor_fraction),
                           r.quantile_method, r.skewness_method])
        return _csv(rows)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")

    if not table:
        return "no data\n"
    first = table[0].row
    parts = [
        f"trim {first.trim_fraction} per tail, winsor {first.winsor_fraction} per tail; "
        f"quantiles: {first.quantile_method}; skewness: {first.skewness_method}; "
        f"current liabilities: {cl_definition}; day count {day_count:g}\n"
    ]
    groups: dict[str, list[GroupSummary]] = {}
    for g in table:
        groups.setdefault(g.group, []).append(g)
    for label, items in groups.items():
        rows = [[f"[{label}]"] + [g.metric for g in items]]
        for name, text in STAT_LABELS:
            rows.append([text] + [_stat_text(getattr(g.row, name), name) for g in items])
        parts.append("\n" + _align(rows))
    return "".join(parts)
