"""
Liquidity indicators by sector
==============================

Load the bundled synthetic panel of 225 organizations over two years,
compute ratios and conversion cycles, and summarise them per sector.
Organizations without short-term debt or without revenues simply drop out
of the affected columns, so sample sizes differ by indicator.
"""

from importlib import resources

from liquistrat import column, compute_indicators, load_csv
from liquistrat.ingest import filter
from liquistrat.report import render_stats, summary_table
from liquistrat.svgplot import boxplot_svg
from liquistrat.robust import five_number

path = resources.files("liquistrat").joinpath("data", "synthetic_records.csv")
ds = load_csv(path)
print(f"{ds.accepted} records accepted, {ds.rejected} rejected")

first = ds.records[0]
ind = compute_indicators(first)
print(first.org_id, first.year, sorted(first.sectors))
for name, value in ind.as_dict().items():
    print(f"  {name:20s} {value!r:24s} {ind.reasons.get(name, '')}")

for name in ("current_ratio", "cash_cycle"):
    print(f"{name}: {column(ds, name).size} usable values")

table = summary_table(filter(ds, year=2010), group_by="sector",
                      metrics=("current_ratio", "cash_cycle"))
print(render_stats(table))

boxes = []
for year in ds.years():
    boxes.append((str(year), five_number(column(filter(ds, year=year), "cash_cycle"))))
with open("cash_cycle_by_year.svg", "w") as fh:
    fh.write(boxplot_svg(boxes, "cash cycle, days"))
print("wrote cash_cycle_by_year.svg")
