"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

The lines are collected in ``conftest.ACCEPTANCE_LINES`` and printed in the
terminal summary, so ``pytest tests/test_acceptance.py`` doubles as a report.
"""
import csv
import io
import json
import math
import time
import warnings
from importlib import resources

import numpy as np

import conftest
import oracles
from liquistrat import robust
from liquistrat.config import bundled_config
from liquistrat.errors import DomainError, UndefinedSkewnessError
from liquistrat.indicators import (
    CURRENCY_FIELDS,
    OrgRecord,
    compute_indicators,
    cycle_identities,
)
from liquistrat.ingest import Dataset, column, filter, load_csv, write_csv
from liquistrat.report import render_scenario, render_stats, summary_table
from liquistrat.strategy import (
    AFTER_CRISIS,
    FLEXIBLE,
    FULL_PRECISION,
    MODERATE,
    EXAMPLE_WEIGHTS,
    PRE_CRISIS,
    RESTRICTIVE,
    CapitalWeights,
    MarketConditions,
    RoundingPolicy,
    StrategyProfile,
    build_statement,
    compare_strategies,
    corrected_beta,
    cost_of_capital,
    cost_of_equity,
    economic_result,
    evaluate_strategy,
    leveraged_beta,
)
from liquistrat.szcurve import SZCurve, sz_at

DATA = resources.files("liquistrat").joinpath("data")
INTEGER_LINES = RoundingPolicy(round_statement_lines_to_integers=True)


class Criterion:
    """Collects individual checks, then reports and asserts once."""

    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.failures = []
        self.count = 0

    def check(self, ok, what):
        self.count += 1
        if not ok:
            self.failures.append(what)

    def near(self, got, want, tol, what):
        self.check(abs(got - want) <= tol + 1e-12, f"{what}: got {got!r}, want {want} ± {tol}")

    def finish(self, note=""):
        status = "PASS" if not self.failures else "FAIL"
        line = f"[{status}] criterion {self.number}: {self.title} ({self.count} checks{note})"
        conftest.ACCEPTANCE_LINES.append(line)
        for f in self.failures[:10]:
            conftest.ACCEPTANCE_LINES.append(f"        {f}")
        print(line)
        assert not self.failures, "\n".join(self.failures)


def run_config(name):
    cfg = bundled_config(name)
    return cfg, compare_strategies(cfg.profiles, cfg.market, cfg.weights, cfg.curve, cfg.rounding)


def pp(x):
    return x * 100


# -- criteria 1-4: scenario tables -------------------------------------------

def test_criterion_1_table1():
    c = Criterion(1, "restrictive/moderate/flexible, SZ1, pre-crisis market")
    start = time.perf_counter()
    cfg, res = run_config("table1")
    render_scenario(res)
    elapsed = time.perf_counter() - start
    for o, beta in zip(res, (1.428, 1.309, 1.2019)):
        c.check(o.corrected_beta == beta, f"{o.name} beta {o.corrected_beta!r} != {beta}")
    for o, ke, cc, er in zip(res, (23.99, 22.33, 20.83), (14.84, 13.90, 13.05),
                             (5037.77, 4821.18, 4443.17)):
        c.near(pp(o.cost_of_equity), ke, 0.01, f"{o.name} k_e %")
        c.near(pp(o.cost_of_capital), cc, 0.01, f"{o.name} CC %")
        c.near(o.economic_result, er, 1.5, f"{o.name} economic result")
    c.check(elapsed < 1.0, f"runtime {elapsed:.3f}s")
    c.finish(f", {elapsed * 1000:.0f} ms")


def derive_after_crisis_market():
    # k_e = k_rf + beta * premium for the moderate and flexible columns
    betas = np.array([1.309, 1.2019])
    ke = np.array([0.2594, 0.2423])
    a = np.column_stack([np.ones(2), betas])
    krf, premium = np.linalg.solve(a, ke)
    return krf, premium


def test_criterion_2_table2():
    c = Criterion(2, "same strategies, after-crisis market derived from k_e rows")
    krf, premium = derive_after_crisis_market()
    c.near(krf, 0.05, 0.001, "derived risk-free rate")
    c.near(premium, 0.16, 0.001, "derived market premium")
    krf, premium = round(krf, 2), round(premium, 2)
    c.near(AFTER_CRISIS.risk_free_rate, krf, 0.0, "built-in risk-free rate")
    c.near(AFTER_CRISIS.market_premium, premium, 1e-12, "built-in premium")

    cfg, res = run_config("table2")
    c.near(cfg.market.risk_free_rate, krf, 0.0, "config risk-free rate")
    c.near(cfg.market.market_premium, premium, 1e-12, "config premium")
    for o, ke, cc, er in zip(res, (27.85, 25.94, 24.23), (18.26, 17.10, 16.07),
                             (3777, 3559.18, 3211.06)):
        c.near(pp(o.cost_of_equity), ke, 0.01, f"{o.name} k_e %")
        c.near(pp(o.cost_of_capital), cc, 0.01, f"{o.name} CC %")
        c.near(o.economic_result, er, 2, f"{o.name} economic result")
    c.finish()


def test_criterion_3_table3():
    c = Criterion(3, "unrounded beta, SZ3, pre-crisis market")
    cfg, res = run_config("table3")
    c.check(cfg.curve.name == "SZ3" and cfg.market == PRE_CRISIS, "config is SZ3 pre-crisis")
    for o, beta, cc, er in zip(res, (3.5574, 1.30438, 1.186986), (31.63, 13.84, 12.92),
                               (1461, 4849, 4513)):
        c.near(o.corrected_beta, beta, 5e-5, f"{o.name} beta")
        c.near(pp(o.cost_of_capital), cc, 0.01, f"{o.name} CC %")
        c.near(o.economic_result, er, 3, f"{o.name} economic result")
    c.finish()


def test_criterion_4_table4():
    c = Criterion(4, "unrounded beta, SZ3, after-crisis market")
    cfg, res = run_config("table4")
    c.check(cfg.curve.name == "SZ3" and cfg.market == AFTER_CRISIS, "config is SZ3 after-crisis")
    for o, cc, er in zip(res, (38.82, 17.04, 15.91), (877, 3580, 3266)):
        c.near(pp(o.cost_of_capital), cc, 0.01, f"{o.name} CC %")
        c.near(o.economic_result, er, 3, f"{o.name} economic result")
    c.finish()


# -- criterion 5: worked equations -------------------------------------------

def test_criterion_5_spot_checks():
    c = Criterion(5, "worked cost-of-capital and economic-result examples")
    s = build_statement(RESTRICTIVE, EXAMPLE_WEIGHTS, INTEGER_LINES)
    cc = cost_of_capital(s, 0.24, 0.132, 0.096, 0.19)
    c.near(pp(cc), 14.8, 0.05, "restrictive CC %")
    c.near(economic_result(s.fcf_initial, s.fcf_recurring, 0.148), 5057, 1,
           "restrictive economic result at CC 0.148")
    m = build_statement(MODERATE, EXAMPLE_WEIGHTS, INTEGER_LINES)
    c.near(economic_result(m.fcf_initial, m.fcf_recurring, 0.139), 4821, 1,
           "moderate economic result at CC 0.139")
    f = build_statement(FLEXIBLE, EXAMPLE_WEIGHTS, INTEGER_LINES)
    c.near(economic_result(f.fcf_initial, f.fcf_recurring, 0.131), 4420, 1,
           "flexible economic result at CC 0.131")
    c.finish()


# -- criterion 6: robust estimators against brute force -----------------------

def random_sample(rng):
    n = int(rng.integers(1, 201))
    scale = 10.0 ** rng.uniform(-3, 6)
    kind = rng.integers(0, 4)
    if kind == 0:
        x = rng.normal(0, scale, n)
    elif kind == 1:
        x = rng.lognormal(0, 1.5, n) * scale
    elif kind == 2:
        x = np.round(rng.uniform(-scale, scale, n))  # many ties
    else:
        x = rng.standard_t(2, n) * scale + rng.uniform(-3, 3) * scale
    return [float(v) for v in x]


def test_criterion_6_oracles():
    c = Criterion(6, "robust estimators vs sort-and-index oracle, 1000 samples")
    rng = np.random.default_rng(6)
    skew_checked = 0
    start = time.perf_counter()
    for case in range(1000):
        xs = random_sample(rng)
        scale = max(abs(v) for v in xs) or 1.0
        trim = float(rng.choice([0.0, 0.05, 0.1, 0.25, rng.uniform(0, 0.5)]))
        wins = float(rng.choice([0.0, 0.05, 0.1, 0.25, rng.uniform(0, 0.5)]))
        tag = f"case {case} (n={len(xs)})"
        c.check(oracles.close(robust.trimmed_mean(xs, trim), oracles.trimmed_mean(xs, trim), scale),
                f"{tag} trimmed mean")
        c.check(oracles.close(robust.winsorized_mean(xs, wins),
                              oracles.winsorized_mean(xs, wins), scale), f"{tag} winsorized mean")
        p = float(rng.uniform())
        c.check(oracles.close(robust.quantile(xs, p), oracles.quantile(xs, p), scale),
                f"{tag} quantile {p}")
        got = robust.five_number(xs).as_tuple()
        s = sorted(xs)
        want = (s[0], oracles.quantile(xs, 0.25), oracles.quantile(xs, 0.5),
                oracles.quantile(xs, 0.75), s[-1])
        c.check(all(oracles.close(g, w, scale) for g, w in zip(got, want)), f"{tag} five-number")
        if len(xs) >= 3 and s[0] != s[-1]:
            skew_checked += 1
            c.check(math.isclose(robust.skewness(xs), oracles.skewness(xs),
                                 rel_tol=1e-9, abs_tol=1e-9), f"{tag} skewness")
    elapsed = time.perf_counter() - start
    c.check(skew_checked > 900, f"only {skew_checked} samples exercised skewness")
    c.check(elapsed < 5.0, f"runtime {elapsed:.2f}s")
    c.finish(f", {elapsed:.2f} s")


# -- criterion 7: module invariants over randomized cases ----------------------

CASES = 500


def random_profile(rng, name="p"):
    return StrategyProfile(
        name, float(rng.uniform(0, 5000)), float(rng.uniform(0.05, 1.5)),
        float(rng.uniform(0, 3000)), float(rng.uniform(0, 1)),
        payables_to_ca=float(rng.uniform(0, 0.9)),
        unleveraged_beta=float(rng.uniform(0, 2)),
        hamada_debt_equity_ratio=float(rng.uniform(0, 3)))


def random_market(rng):
    krf = float(rng.uniform(0, 0.1))
    return MarketConditions(krf, krf + float(rng.uniform(0.01, 0.25)),
                            tax_rate=float(rng.uniform(0, 0.5)),
                            long_debt_spread=float(rng.uniform(0.001, 0.05)),
                            short_debt_spread=float(rng.uniform(0.001, 0.05)))


def random_weights(rng):
    w = rng.dirichlet([1, 1, 1])
    return CapitalWeights(float(w[0]), float(w[1]), 1.0 - float(w[0]) - float(w[1]))


def random_curve(rng):
    k = int(rng.integers(2, 6))
    xs = np.sort(rng.choice(np.arange(1, 200), size=k, replace=False)) / 100
    ys = np.sort(rng.choice(np.arange(0, 400), size=k, replace=False))[::-1] / 100
    return SZCurve(tuple(zip(xs.tolist(), ys.tolist())))


def random_record(rng, i=0):
    cash, ar, inv = (float(v) for v in rng.uniform(0, 1e6, 3))
    return OrgRecord(
        f"o{i}", int(rng.integers(2009, 2011)),
        frozenset(rng.choice(["a", "b", "c"], size=int(rng.integers(0, 3)), replace=False).tolist()),
        cash_revenues=float(rng.uniform(1, 1e7)), total_assets=float(rng.uniform(1, 1e7)),
        fixed_assets=float(rng.uniform(0, 1e6)), current_assets=cash + ar + inv,
        inventories=inv, accounts_receivable=ar, cash_equivalents=cash,
        fund_capital=float(rng.uniform(1, 1e6)), long_term_debt=float(rng.uniform(0, 1e6)),
        short_term_debt=float(rng.uniform(0, 1e6)), accounts_payable=float(rng.uniform(1, 1e6)),
        net_result=float(rng.normal(0, 1e5)))


def random_dataset(rng, n=None):
    n = int(rng.integers(0, 25)) if n is None else n
    recs = []
    for i in range(n):
        r = random_record(rng, i)
        # plant absences
        for f in CURRENCY_FIELDS:
            if rng.uniform() < 0.1:
                r = OrgRecord(**{**r.__dict__, f: None})
        recs.append(r)
    return Dataset(tuple(recs))


def inv_strategy(rng):
    bu, t = float(rng.uniform(0, 3)), float(rng.uniform(0, 0.99))
    a, b = sorted(rng.uniform(0, 5, 2).tolist())
    yield "leveraged beta nondecreasing in D/E", leveraged_beta(bu, t, a) <= leveraged_beta(bu, t, b)
    b1, b2 = sorted(rng.uniform(0, 3, 2).tolist())
    yield "leveraged beta nondecreasing in unleveraged beta", \
        leveraged_beta(b1, t, a) <= leveraged_beta(b2, t, a)
    yield "leveraged beta equals unleveraged at D/E 0", leveraged_beta(bu, t, 0.0) == bu

    beta, sz = float(rng.uniform(0, 3)), float(rng.choice([0.0, rng.uniform(0, 3)]))
    cb = corrected_beta(beta, sz)
    yield "corrected beta dominates, equal iff SZ 0", \
        cb >= beta and ((cb == beta) == (sz == 0 or beta == 0))

    market = random_market(rng)
    x1, x2 = rng.uniform(-2, 5, 2).tolist()
    diff = cost_of_equity(x1, market) - cost_of_equity(x2, market)
    yield "cost of equity affine in beta", abs(diff - (x1 - x2) * market.market_premium) <= 1e-12

    weights = random_weights(rng)
    profile = random_profile(rng)
    s = build_statement(profile, weights)
    ke = float(rng.uniform(0.05, 0.6))
    kdl, kds = (float(v) for v in rng.uniform(0.0, 0.3, 2))
    if s.capital_invested > 0:
        cc = cost_of_capital(s, ke, kdl, kds, market.tax_rate)
        parts = (ke, kdl * (1 - market.tax_rate), kds * (1 - market.tax_rate))
        yield "cost of capital within component range", \
            min(parts) - 1e-12 <= cc <= max(parts) + 1e-12

    f = float(rng.uniform(1, 1e4))
    lo, hi = sorted(rng.uniform(0.01, 1, 2).tolist())
    if hi > lo * (1 + 1e-9):
        yield "economic result strictly decreasing in CC", \
            economic_result(-100, f, lo) > economic_result(-100, f, hi)

    for policy in (FULL_PRECISION, INTEGER_LINES):
        s = build_statement(profile, weights, policy)
        slack = 1e-9 * max(1.0, s.total_assets) if policy is FULL_PRECISION else 1.5
        yield "statement identities", (
            abs(s.total_assets - (profile.fixed_assets + s.current_assets)) <= slack
            and abs(s.capital_invested - (s.total_assets - s.accounts_payable)) <= slack
            and abs(s.equity + s.long_term_debt + s.short_term_debt - s.capital_invested) <= slack
            and s.fcf_initial == -s.capital_invested
            and s.fcf_recurring == s.ebit)

    curve = random_curve(rng)
    market = MarketConditions(0.03, 0.15, tax_rate=0.19)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            o1 = evaluate_strategy(profile, market, weights, curve)
            o2 = evaluate_strategy(profile, market, weights, curve)
        except DomainError:
            # negative debt rates can push the cost of capital below zero
            o1 = None
    if o1 is not None:
        yield "evaluation deterministic", repr(o1) == repr(o2)
        if o1.long_debt_rate > 0 and o1.short_debt_rate > 0:
            yield "cost of capital positive with positive rates", o1.cost_of_capital > 0


def inv_szcurve(rng):
    curve = random_curve(rng)
    xs = np.sort(rng.uniform(0.001, 2.5, 20))
    vals = [sz_at(curve, float(x)) for x in xs]
    yield "sz nonincreasing", all(a >= b for a, b in zip(vals, vals[1:]))
    yield "sz exact at anchors", all(sz_at(curve, x) == y for x, y in curve.anchors)
    lo, hi = min(curve.sz), max(curve.sz)
    yield "sz within anchor range", all(lo <= v <= hi for v in vals)
    first, last = curve.anchors[0], curve.anchors[-1]
    yield "sz clamped outside anchors", (
        sz_at(curve, first[0] * float(rng.uniform(0.01, 1))) == first[1]
        and sz_at(curve, last[0] * float(rng.uniform(1, 10))) == last[1])


def inv_robust(rng):
    xs = random_sample(rng)
    x = np.array(xs)
    scale = float(np.max(np.abs(x))) or 1.0
    frac = float(rng.uniform(0, 0.5))
    shift = float(rng.uniform(-1, 1)) * scale
    k = float(10 ** rng.uniform(-2, 2))
    for name, f in (("trimmed", robust.trimmed_mean), ("winsorized", robust.winsorized_mean)):
        base = f(x, frac)
        yield f"{name} mean translation-equivariant", \
            oracles.close(f(x + shift, frac), base + shift, scale + abs(shift))
        yield f"{name} mean scale-equivariant", oracles.close(f(x * k, frac), base * k, scale * k)
        yield f"{name} mean bounded", x.min() <= base <= x.max()
    ps = np.sort(rng.uniform(0, 1, 10))
    qs = [robust.quantile(x, float(p)) for p in ps]
    yield "quantile nondecreasing in p", all(a <= b for a, b in zip(qs, qs[1:]))
    fn = robust.five_number(x).as_tuple()
    yield "five-number ordered", all(a <= b for a, b in zip(fn, fn[1:]))
    row = robust.summarize(x)
    yield "summary bounded", (row.minimum <= row.median <= row.maximum
                              and row.minimum <= row.average <= row.maximum)
    d = np.concatenate([x, x])
    yield "duplication keeps mean/median/min/max", (
        oracles.close(robust.mean(d), robust.mean(x), scale)
        and robust.median(d) == robust.median(x)
        and d.min() == x.min() and d.max() == x.max())
    try:
        g = robust.skewness(x)
    except (UndefinedSkewnessError, ValueError):
        return
    # affine invariance is only meaningful when the spread survives the shift
    y = x * k + shift / 100
    yield "skewness affine-invariant", math.isclose(robust.skewness(y), g, rel_tol=1e-9, abs_tol=1e-9)


def inv_indicators(rng):
    r = random_record(rng)
    i = compute_indicators(r)
    yield "cash <= quick <= current", i.cash_ratio <= i.quick_ratio * (1 + 1e-12) \
        and i.quick_ratio <= i.current_ratio * (1 + 1e-12)
    yield "cycle identities exact", (
        i.operating_cycle == i.inventory_period + i.receivables_period
        and i.cash_cycle == i.operating_cycle - i.payables_period
        and cycle_identities(i).ok)
    nonneg = [n for n in ("current_ratio", "quick_ratio", "cash_ratio", "receivables_period",
                          "payables_period", "inventory_period", "operating_cycle")]
    yield "nonnegative indicators", all(i.get(n) >= 0 for n in nonneg)
    c = float(10 ** rng.uniform(-3, 3))
    j = compute_indicators(r.scaled(c))
    cl = r.short_term_debt + r.accounts_payable
    floor = {"quick_ratio": 1e-9 * (r.current_assets + r.inventories) / cl}
    a, b = i.as_dict(), j.as_dict()
    yield "scale invariance", all(
        math.isclose(b[n], a[n], rel_tol=1e-9, abs_tol=floor.get(n, 1e-9)) for n in a)


def inv_ingest(rng, tmp):
    ds = random_dataset(rng)
    path = tmp / "rt.csv"
    write_csv(ds.records, path)
    back = load_csv(path)
    yield "accepted + rejected = rows", back.accepted + back.rejected == back.total_rows == len(ds)
    yield "round trip exact", back.records == ds.records
    sec = str(rng.choice(["a", "b", "c"]))
    year = int(rng.integers(2009, 2011))
    once = filter(ds, sector=sec)
    yield "filter idempotent", filter(once, sector=sec) == once
    yield "filter commutes", filter(once, year=year) == filter(filter(ds, year=year), sector=sec)
    name = str(rng.choice(["current_ratio", "cash_revenues", "cash_cycle", "roe"]))
    size = column(ds, name).size
    complete = all(compute_indicators(r).get(name) is not None for r in ds.records) \
        if name != "cash_revenues" else all(r.cash_revenues is not None for r in ds.records)
    yield "column size <= records, equal iff no absences", \
        size <= len(ds) and ((size == len(ds)) == complete)


def inv_report(rng):
    profiles = [random_profile(rng, n) for n in ("a", "b")]
    market = MarketConditions(0.03, 0.15)
    weights = random_weights(rng)
    curve = random_curve(rng)
    if any(build_statement(p, weights).capital_invested <= 0 for p in profiles):
        return
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            one = render_scenario(compare_strategies(profiles, market, weights, curve), "csv")
            two = render_scenario(compare_strategies(profiles, market, weights, curve), "csv")
        except DomainError:
            return
    yield "scenario rendering deterministic", one == two

    ds = random_dataset(rng, int(rng.integers(1, 15)))
    table = summary_table(ds, group_by="sector", metrics=("current_ratio", "cash_cycle"))
    text = render_stats(table, "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    ok = len(rows) == len(table)
    for row, g in zip(rows, table):
        for name in robust.SummaryRow.STAT_FIELDS:
            want = getattr(g.row, name)
            cell = row[name]
            ok &= (cell == "–") if want is None else float(cell) == want
    yield "stats CSV re-parses to summary values", ok
    yield "stats rendering deterministic", text == render_stats(table, "csv")


def test_criterion_7_properties(tmp_path):
    c = Criterion(7, f"module invariants over >= {CASES} randomized cases each")
    rng = np.random.default_rng(7)
    counts, fails = {}, {}
    generators = (inv_strategy, inv_szcurve, inv_robust, inv_indicators, inv_report,
                  lambda r: inv_ingest(r, tmp_path))
    for gen in generators:
        # some invariants only apply to a subset of draws, so keep drawing
        # until every invariant this generator produced has enough cases
        seen = set()
        for _ in range(20 * CASES):
            for name, ok in gen(rng):
                seen.add(name)
                counts[name] = counts.get(name, 0) + 1
                if not ok:
                    fails[name] = fails.get(name, 0) + 1
            if seen and min(counts[n] for n in seen) >= CASES:
                break
    for name, n in sorted(counts.items()):
        c.check(n >= CASES, f"{name}: only {n} cases")
        c.check(name not in fails, f"{name}: {fails.get(name)} of {n} cases failed")
    c.finish(f", {len(counts)} invariants, min {min(counts.values())} cases")


# -- criterion 8: bundled fixture -------------------------------------------

def test_criterion_8_fixture():
    c = Criterion(8, "bundled 450-row synthetic dataset matches its manifest")
    manifest = json.loads(DATA.joinpath("synthetic_manifest.json").read_text())
    ds = load_csv(DATA.joinpath("synthetic_records.csv"))
    c.check(ds.total_rows == manifest["rows"] == 450, f"rows {ds.total_rows}")
    c.check(ds.rejected == 0, f"{ds.rejected} rejects: {ds.rejects[:3]}")
    for y, n in manifest["years"].items():
        c.check(len(filter(ds, year=int(y))) == n, f"year {y} size")
    for sector, n in manifest["sector_sizes"].items():
        got = len(filter(ds, sector=sector))
        c.check(got == n, f"sector {sector}: {got} != {n}")
    for name, n in manifest["column_sizes"].items():
        got = column(ds, name).size
        c.check(got == n, f"column {name}: {got} != {n}")
    c.check(column(ds, "receivables_period").size > column(ds, "current_ratio").size,
            "periods and ratios should have different sample sizes")
    table = summary_table(ds, group_by="sector")
    c.check(all(g.row.size == column(filter(ds, sector=g.group), g.metric).size for g in table),
            "summary sizes follow column sizes")
    c.finish()


# -- criterion 9: published empirical tables --------------------------------

def test_criterion_9_empirical_tables_not_reproducible():
    c = Criterion(9, "published sector statistics are not acceptance targets")
    # The organization-level dataset behind the published descriptive tables is
    # not available and their trimming fractions are unstated.  What can be
    # checked is that every reported statistic is explicit about its method,
    # which criteria 6-8 then verify against oracles and invariants.
    ds = load_csv(DATA.joinpath("synthetic_records.csv"))
    out = render_stats(summary_table(ds), "text")
    for needle in ("trim 0.05", "winsor 0.05", robust.QUANTILE_METHOD,
                   robust.SKEWNESS_METHOD, "day count 365"):
        c.check(needle in out, f"stats output lacks {needle!r}")
    c.finish(", documented substitution by criteria 6-8")
