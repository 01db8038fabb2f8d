"""Per-organization liquidity ratios, conversion periods, cycles and returns.

Any indicator whose inputs are missing, or whose denominator is zero, is
reported as absent (``None``) together with a reason code rather than raising.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

__all__ = [
    "OrgRecord",
    "IndicatorSet",
    "CycleCheck",
    "CL_SHORT_DEBT_PLUS_PAYABLES",
    "CL_SHORT_DEBT_ONLY",
    "MISSING_INPUT",
    "ZERO_DENOMINATOR",
    "NONPOSITIVE_EQUITY",
    "CURRENCY_FIELDS",
    "INDICATOR_NAMES",
    "current_liabilities",
    "compute_indicators",
    "cycle_identities",
]

CL_SHORT_DEBT_PLUS_PAYABLES = "short_debt_plus_payables"
CL_SHORT_DEBT_ONLY = "short_debt_only"

MISSING_INPUT = "missing-input"
ZERO_DENOMINATOR = "zero-denominator"
NONPOSITIVE_EQUITY = "nonpositive-equity"

CURRENCY_FIELDS = (
    "cash_revenues",
    "total_assets",
    "fixed_assets",
    "current_assets",
    "inventories",
    "accounts_receivable",
    "cash_equivalents",
    "fund_capital",
    "long_term_debt",
    "short_term_debt",
    "accounts_payable",
    "net_result",
)

INDICATOR_NAMES = (
    "current_ratio",
    "quick_ratio",
    "cash_ratio",
    "receivables_period",
    "payables_period",
    "inventory_period",
    "operating_cycle",
    "cash_cycle",
    "roa",
    "roe",
)


@dataclass(frozen=True)
class OrgRecord:
    org_id: str
    year: int
    sectors: frozenset[str] = frozenset()
    cash_revenues: Optional[float] = None
    total_assets: Optional[float] = None
    fixed_assets: Optional[float] = None
    current_assets: Optional[float] = None
    inventories: Optional[float] = None
    accounts_receivable: Optional[float] = None
    cash_equivalents: Optional[float] = None
    fund_capital: Optional[float] = None
    long_term_debt: Optional[float] = None
    short_term_debt: Optional[float] = None
    accounts_payable: Optional[float] = None
    net_result: Optional[float] = None

    def __post_init__(self):
        if not 1900 <= int(self.year) <= 2100:
            raise ValueError(f"year must lie in [1900, 2100], got {self.year!r}")
        object.__setattr__(self, "sectors", frozenset(self.sectors))
        for name in CURRENCY_FIELDS:
            v = getattr(self, name)
            if v is not None and not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")

    def scaled(self, factor: float) -> "OrgRecord":
        """Copy with every present currency field multiplied by ``factor``."""
        values = {}
        for name in CURRENCY_FIELDS:
            v = getattr(self, name)
            values[name] = None if v is None else v * factor
        return OrgRecord(self.org_id, self.year, self.sectors, **values)


@dataclass(frozen=True)
class IndicatorSet:
    current_ratio: Optional[float] = None
    quick_ratio: Optional[float] = None
    cash_ratio: Optional[float] = None
    receivables_period: Optional[float] = None
    payables_period: Optional[float] = None
    inventory_period: Optional[float] = None
    operating_cycle: Optional[float] = None
    cash_cycle: Optional[float] = None
    roa: Optional[float] = None
    roe: Optional[float] = None
    reasons: dict = field(default_factory=dict)
    day_count: float = 365.0
    cl_definition: str = CL_SHORT_DEBT_PLUS_PAYABLES
    negative_inputs: tuple[str, ...] = ()

    def get(self, name: str) -> Optional[float]:
        if name not in INDICATOR_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in INDICATOR_NAMES}


def current_liabilities(r: OrgRecord, cl_definition: str = CL_SHORT_DEBT_PLUS_PAYABLES):
    if cl_definition == CL_SHORT_DEBT_PLUS_PAYABLES:
        if r.short_term_debt is None or r.accounts_payable is None:
            return None
        return r.short_term_debt + r.accounts_payable
    if cl_definition == CL_SHORT_DEBT_ONLY:
        return r.short_term_debt
    raise ValueError(f"unknown current-liabilities definition {cl_definition!r}")


def compute_indicators(
    r: OrgRecord,
    day_count: float = 365.0,
    cl_definition: str = CL_SHORT_DEBT_PLUS_PAYABLES,
    strict_roe: bool = False,
) -> IndicatorSet:
    """Ratios, conversion periods, cycles and returns for one record.

    Conversion periods divide by cash revenues (no cost-of-sales data is
    available for nonprofits).  With ``strict_roe`` a non-positive fund capital
    makes ROE absent with reason ``"nonpositive-equity"``.
    """
    out: dict = {}
    reasons: dict = {}

    def ratio(name, num, den, scale=1.0):
        if num is None or den is None:
            reasons[name] = MISSING_INPUT
        elif den == 0:
            reasons[name] = ZERO_DENOMINATOR
        else:
            out[name] = scale * num / den

    cl = current_liabilities(r, cl_definition)
    ca, inv = r.current_assets, r.inventories
    ratio("current_ratio", ca, cl)
    ratio("quick_ratio", None if ca is None or inv is None else ca - inv, cl)
    ratio("cash_ratio", r.cash_equivalents, cl)

    ratio("receivables_period", r.accounts_receivable, r.cash_revenues, day_count)
    ratio("payables_period", r.accounts_payable, r.cash_revenues, day_count)
    ratio("inventory_period", r.inventories, r.cash_revenues, day_count)

    if "inventory_period" in out and "receivables_period" in out:
        out["operating_cycle"] = out["inventory_period"] + out["receivables_period"]
    else:
        reasons["operating_cycle"] = reasons.get("inventory_period") or reasons["receivables_period"]
    if "operating_cycle" in out and "payables_period" in out:
        out["cash_cycle"] = out["operating_cycle"] - out["payables_period"]
    else:
        reasons["cash_cycle"] = reasons.get("operating_cycle") or reasons["payables_period"]

    ratio("roa", r.net_result, r.total_assets)
    if strict_roe and r.fund_capital is not None and r.fund_capital <= 0:
        reasons["roe"] = NONPOSITIVE_EQUITY
    else:
        ratio("roe", r.net_result, r.fund_capital)

    negative = tuple(n for n in CURRENCY_FIELDS
                     if n != "net_result" and (getattr(r, n) or 0) < 0)
    return IndicatorSet(**out, reasons=reasons, day_count=day_count,
                        cl_definition=cl_definition, negative_inputs=negative)


@dataclass(frozen=True)
class CycleCheck:
    operating_cycle_ok: bool
    cash_cycle_ok: bool
    operating_cycle_error: float
    cash_cycle_error: float

    @property
    def ok(self) -> bool:
        return self.operating_cycle_ok and self.cash_cycle_ok


def cycle_identities(i: IndicatorSet, tol: float = 1e-9) -> CycleCheck:
    """Check operating = inventory + receivables and cash = operating - payables."""
    periods = (i.inventory_period, i.receivables_period, i.payables_period)
    if any(p is None for p in periods) or i.operating_cycle is None or i.cash_cycle is None:
        raise ValueError("cycle check needs all three periods and both cycles present")
    op_err = abs(i.operating_cycle - (i.inventory_period + i.receivables_period))
    cash_err = abs(i.cash_cycle - (i.operating_cycle - i.payables_period))
    scale = max(1.0, abs(i.operating_cycle), abs(i.payables_period))
    return CycleCheck(op_err <= tol * scale, cash_err <= tol * scale, op_err, cash_err)
