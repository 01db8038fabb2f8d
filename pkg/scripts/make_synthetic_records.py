"""Regenerate the bundled synthetic record file and its manifest.

    python scripts/make_synthetic_records.py

The data imitate a regional nonprofit register: 225 organizations observed
in 2009 and 2010 (450 rows), heavy right tails, overlapping sector
membership, and deliberate gaps.  The manifest records what was planted,
counted here while generating rather than by the library, so tests can
compare the library's view of the file against it.
"""
import csv
import json
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "src" / "liquistrat" / "data"
SEED = 2011

SECTORS = (
    "social_assistance",
    "integration",
    "charity",
    "minorities",
    "health",
    "economic_development",
    "education",
    "rescue",
    "other",
)
COLUMNS = ("org_id", "year", "sectors", "cash_revenues", "total_assets", "fixed_assets",
           "current_assets", "inventories", "accounts_receivable", "cash_equivalents",
           "fund_capital", "long_term_debt", "short_term_debt", "accounts_payable",
           "net_result")


def money(rng, median, sigma):
    return round(float(rng.lognormal(np.log(median), sigma)), 2)


def main():
    rng = np.random.default_rng(SEED)
    rows = []
    for k in range(225):
        org = f"npo{k + 1:03d}"
        n_sec = int(rng.choice([1, 2, 3], p=[0.5, 0.35, 0.15]))
        sectors = sorted(rng.choice(SECTORS, size=n_sec, replace=False).tolist())
        # roughly one organization in three never reports short-term debt
        reports_debt = rng.random() > 0.35
        for year in (2009, 2010):
            cr = money(rng, 80_000, 1.8)
            fa = money(rng, 20_000, 2.0)
            cash = money(rng, 15_000, 1.7)
            ar = 0.0 if rng.random() < 0.55 else money(rng, 2_000, 2.0)
            inv = 0.0 if rng.random() < 0.8 else money(rng, 1_000, 1.5)
            ca = round(cash + ar + inv, 2)
            ap = 0.0 if rng.random() < 0.15 else money(rng, 500, 1.6)
            sd = money(rng, 3_000, 1.5) if reports_debt else None
            ld = 0.0 if rng.random() < 0.7 else money(rng, 5_000, 1.5)
            ta = round(fa + ca, 2)
            e = round(ta - ap - (sd or 0.0) - ld, 2)
            net = round(float(rng.normal(0.02, 0.2)) * ta, 2)
            row = dict(org_id=org, year=year, sectors=";".join(sectors), cash_revenues=cr,
                       total_assets=ta, fixed_assets=fa, current_assets=ca,
                       inventories=inv, accounts_receivable=ar, cash_equivalents=cash,
                       fund_capital=e, long_term_debt=ld, short_term_debt=sd,
                       accounts_payable=ap, net_result=net)
            rows.append(row)

    # planted gaps: revenues missing, and zero current liabilities
    for i in rng.choice(len(rows), size=12, replace=False):
        rows[int(i)]["cash_revenues"] = None
    for i in rng.choice(len(rows), size=9, replace=False):
        r = rows[int(i)]
        if r["short_term_debt"] is not None:
            r["short_term_debt"] = 0.0
            r["accounts_payable"] = 0.0

    def present(v):
        return v is not None

    sizes = {}
    for name in ("cash_revenues", "short_term_debt", "accounts_payable", "inventories"):
        sizes[name] = sum(present(r[name]) for r in rows)
    period_ok = [present(r["cash_revenues"]) and r["cash_revenues"] != 0 for r in rows]
    ratio_ok = [present(r["short_term_debt"]) and present(r["accounts_payable"])
                and (r["short_term_debt"] + r["accounts_payable"]) != 0 for r in rows]
    for name in ("receivables_period", "payables_period", "inventory_period",
                 "operating_cycle", "cash_cycle"):
        sizes[name] = sum(period_ok)
    for name in ("current_ratio", "quick_ratio", "cash_ratio"):
        sizes[name] = sum(ratio_ok)

    manifest = {
        "seed": SEED,
        "rows": len(rows),
        "organizations": 225,
        "years": {"2009": sum(r["year"] == 2009 for r in rows),
                  "2010": sum(r["year"] == 2010 for r in rows)},
        "sector_sizes": {s: sum(s in r["sectors"].split(";") for r in rows) for s in SECTORS},
        "column_sizes": sizes,
        "planted": {
            "missing_cash_revenues": 12,
            "zero_current_liabilities": sum(
                present(r["short_term_debt"]) and r["short_term_debt"] == 0
                and r["accounts_payable"] == 0 for r in rows),
            "never_reports_short_term_debt": sum(not present(r["short_term_debt"]) for r in rows),
        },
    }

    def cell(v):
        if v is None:
            return ""
        if isinstance(v, float) and v.is_integer():
            return str(int(v))
        return str(v)

    with open(OUT / "synthetic_records.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow([cell(r[c]) for c in COLUMNS])
    (OUT / "synthetic_manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(json.dumps(manifest, indent=2))


if __name__ == "__main__":
    main()
