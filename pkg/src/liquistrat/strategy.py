"""Cost of capital and economic result of a liquidity investment strategy.

The chain for one strategy is::

    statement -> SZ(CA/CR) -> Hamada beta -> corrected beta -> k_e
              -> k_dl, k_ds -> weighted cost of capital -> economic result

Every step is a plain function so it can be used (and tested) on its own;
:func:`evaluate_strategy` composes them and keeps all intermediates.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

from .errors import DegenerateRateWarning, DomainError, ValidationError
from .szcurve import SZCurve, sz_at

__all__ = [
    "MarketConditions",
    "CapitalWeights",
    "StrategyProfile",
    "RoundingPolicy",
    "DerivedStatement",
    "StrategyOutcome",
    "StrategyComparison",
    "FULL_PRECISION",
    "AS_PRINTED",
    "PRE_CRISIS",
    "AFTER_CRISIS",
    "EXAMPLE_WEIGHTS",
    "RESTRICTIVE",
    "MODERATE",
    "FLEXIBLE",
    "EXAMPLE_PROFILES",
    "round_half_up",
    "build_statement",
    "leveraged_beta",
    "corrected_beta",
    "cost_of_equity",
    "long_debt_rate",
    "short_debt_rate",
    "cost_of_capital",
    "economic_result",
    "evaluate_strategy",
    "compare_strategies",
]


def round_half_up(x: float, ndigits: int = 0) -> float:
    """Round half away from zero on the decimal representation of ``x``.

    The builtin :func:`round` uses banker's rounding and works on the binary
    value, so ``round(642.5)`` gives 642 and ``round(1.185, 2)`` gives 1.18.
    """
    q = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP))


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(name, f"must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class MarketConditions:
    risk_free_rate: float
    market_return: float
    tax_rate: float = 0.19
    long_debt_spread: float = 0.09
    short_debt_spread: float = 0.12

    def __post_init__(self):
        for name in ("risk_free_rate", "market_return", "tax_rate",
                     "long_debt_spread", "short_debt_spread"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        if not self.market_return > self.risk_free_rate:
            raise ValidationError("market_return", "must exceed risk_free_rate")
        if not 0 <= self.tax_rate < 1:
            raise ValidationError("tax_rate", "must lie in [0, 1)")
        if not self.long_debt_spread > 0:
            raise ValidationError("long_debt_spread", "must be positive")
        if not self.short_debt_spread > 0:
            raise ValidationError("short_debt_spread", "must be positive")

    @property
    def market_premium(self) -> float:
        return self.market_return - self.risk_free_rate


@dataclass(frozen=True)
class CapitalWeights:
    equity_share: float = 0.4
    long_debt_share: float = 0.2
    short_debt_share: float = 0.4

    def __post_init__(self):
        for name in ("equity_share", "long_debt_share", "short_debt_share"):
            value = _finite(name, getattr(self, name))
            if value < 0:
                raise ValidationError(name, "must be non-negative")
            object.__setattr__(self, name, value)
        total = self.equity_share + self.long_debt_share + self.short_debt_share
        if abs(total - 1.0) > 1e-12:
            raise ValidationError("weights", f"shares must sum to 1, got {total!r}")

    @property
    def debt_equity_ratio(self) -> float:
        """D/E implied by the shares (1.5 for the 40/20/40 structure)."""
        if self.equity_share == 0:
            return math.inf
        return (self.long_debt_share + self.short_debt_share) / self.equity_share


@dataclass(frozen=True)
class StrategyProfile:
    """Drivers of one liquidity strategy.

    ``hamada_debt_equity_ratio`` is the D/E fed to the Hamada relation.  It
    defaults to 0.4/0.6, the figure used for the published tables, which is
    *not* the D/E of the 40/20/40 capital structure (that would be 1.5, see
    :attr:`CapitalWeights.debt_equity_ratio`).
    """

    name: str
    cash_revenues: float
    ca_to_cr: float
    fixed_assets: float
    ebit_share: float
    payables_to_ca: float = 0.5
    unleveraged_beta: float = 0.77
    hamada_debt_equity_ratio: float = 0.4 / 0.6

    def __post_init__(self):
        for name in ("cash_revenues", "ca_to_cr", "fixed_assets", "ebit_share",
                     "payables_to_ca", "unleveraged_beta", "hamada_debt_equity_ratio"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        if self.cash_revenues < 0:
            raise ValidationError("cash_revenues", "must be non-negative")
        if not self.ca_to_cr > 0:
            raise ValidationError("ca_to_cr", "must be positive")
        if self.fixed_assets < 0:
            raise ValidationError("fixed_assets", "must be non-negative")
        if not 0 <= self.ebit_share <= 1:
            raise ValidationError("ebit_share", "must lie in [0, 1]")
        if self.payables_to_ca < 0:
            raise ValidationError("payables_to_ca", "must be non-negative")
        if self.unleveraged_beta < 0:
            raise ValidationError("unleveraged_beta", "must be non-negative")
        if self.hamada_debt_equity_ratio < 0:
            raise ValidationError("hamada_debt_equity_ratio", "must be non-negative")


@dataclass(frozen=True)
class RoundingPolicy:
    # statement lines are rounded as they are derived, so later lines use the
    # rounded earlier ones (TA from rounded CA, AP from rounded CA, ...)
    round_statement_lines_to_integers: bool = False
    round_leveraged_beta_to_2dp: bool = False


FULL_PRECISION = RoundingPolicy()
AS_PRINTED = RoundingPolicy(True, True)

PRE_CRISIS = MarketConditions(risk_free_rate=0.04, market_return=0.18)
AFTER_CRISIS = MarketConditions(risk_free_rate=0.05, market_return=0.21)
EXAMPLE_WEIGHTS = CapitalWeights(0.4, 0.2, 0.4)

RESTRICTIVE = StrategyProfile("restrictive", 2000.0, 0.30, 1400.0, 0.50)
MODERATE = StrategyProfile("moderate", 2080.0, 0.45, 1445.0, 0.45)
FLEXIBLE = StrategyProfile("flexible", 2142.4, 0.60, 1480.0, 0.40)
EXAMPLE_PROFILES = (RESTRICTIVE, MODERATE, FLEXIBLE)


@dataclass(frozen=True)
class DerivedStatement:
    current_assets: float
    total_assets: float
    accounts_payable: float
    capital_invested: float
    equity: float
    long_term_debt: float
    short_term_debt: float
    ebit: float
    fcf_initial: float
    fcf_recurring: float

    @property
    def financing_total(self) -> float:
        return self.equity + self.long_term_debt + self.short_term_debt


@dataclass(frozen=True)
class StrategyOutcome:
    name: str
    profile: StrategyProfile
    statement: DerivedStatement
    sz_premium: float
    leveraged_beta: float
    corrected_beta: float
    cost_of_equity: float
    long_debt_rate: float
    short_debt_rate: float
    cost_of_capital: float
    economic_result: float
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class StrategyComparison:
    outcomes: tuple[StrategyOutcome, ...]
    best_economic_result: str
    lowest_cost_of_capital: str

    def __iter__(self):
        return iter(self.outcomes)

    def __len__(self):
        return len(self.outcomes)

    def __getitem__(self, i):
        return self.outcomes[i]


def build_statement(
    profile: StrategyProfile,
    weights: CapitalWeights = EXAMPLE_WEIGHTS,
    policy: RoundingPolicy = FULL_PRECISION,
) -> DerivedStatement:
    """Derive balance-sheet and cash-flow lines for a strategy.

    With ``policy.round_statement_lines_to_integers`` every currency line is
    rounded half-up as soon as it is derived; this is how the 1 285 / 643 /
    2 122 lines of the flexible strategy come about.
    """
    r = round_half_up if policy.round_statement_lines_to_integers else float

    ca = r(profile.ca_to_cr * profile.cash_revenues)
    ta = r(profile.fixed_assets + ca)
    ap = r(profile.payables_to_ca * ca)
    invested = ta - ap
    equity = r(weights.equity_share * invested)
    long_debt = r(weights.long_debt_share * invested)
    short_debt = r(weights.short_debt_share * invested)
    ebit = r(profile.ebit_share * profile.cash_revenues)
    # tax-exempt organisation: EBIT is already NOPAT, so it is the recurring FCF
    return DerivedStatement(
        current_assets=ca,
        total_assets=ta,
        accounts_payable=ap,
        capital_invested=invested,
        equity=equity,
        long_term_debt=long_debt,
        short_term_debt=short_debt,
        ebit=ebit,
        fcf_initial=-invested,
        fcf_recurring=ebit,
    )


def leveraged_beta(unleveraged_beta: float, tax_rate: float, debt_equity_ratio: float) -> float:
    """Hamada relation: ``beta_u * (1 + (1 - T) * D/E)``.

    >>> round(leveraged_beta(0.77, 0.19, 0.4 / 0.6), 4)
    1.1858
    """
    if unleveraged_beta < 0:
        raise ValidationError("unleveraged_beta", "must be non-negative")
    if debt_equity_ratio < 0:
        raise ValidationError("debt_equity_ratio", "must be non-negative")
    if not 0 <= tax_rate < 1:
        raise ValidationError("tax_rate", "must lie in [0, 1)")
    return unleveraged_beta * (1.0 + (1.0 - tax_rate) * debt_equity_ratio)


def corrected_beta(
    leveraged_beta: float, sz_premium: float, policy: RoundingPolicy = FULL_PRECISION
) -> float:
    """Apply the strategy premium: ``beta_l * (1 + SZ)``.

    When the policy asks for it, ``beta_l`` is rounded to two decimals
    *before* the multiplication (1.1858 -> 1.19 -> 1.428 for SZ = 0.2).
    """
    if sz_premium < 0:
        raise ValidationError("sz_premium", "must be non-negative")
    if policy.round_leveraged_beta_to_2dp:
        leveraged_beta = round_half_up(leveraged_beta, 2)
    return leveraged_beta * (1.0 + sz_premium)


def cost_of_equity(beta: float, market: MarketConditions) -> float:
    """CAPM required return on equity."""
    return beta * (market.market_return - market.risk_free_rate) + market.risk_free_rate


def _debt_rate(cost_of_equity: float, spread: float, sz_premium: float, label: str) -> float:
    rate = cost_of_equity - spread * (1.0 + sz_premium)
    if rate < 0:
        warnings.warn(
            f"{label} is negative ({rate:.6f}); spread and premium are implausible "
            "for this cost of equity",
            DegenerateRateWarning,
            stacklevel=3,
        )
    return rate


def long_debt_rate(cost_of_equity: float, sz_premium: float, market: MarketConditions) -> float:
    """``k_e - long_spread * (1 + SZ)``; warns with DegenerateRateWarning if negative."""
    return _debt_rate(cost_of_equity, market.long_debt_spread, sz_premium, "long-term debt rate")


def short_debt_rate(cost_of_equity: float, sz_premium: float, market: MarketConditions) -> float:
    """``k_e - short_spread * (1 + SZ)``; warns with DegenerateRateWarning if negative."""
    return _debt_rate(cost_of_equity, market.short_debt_spread, sz_premium, "short-term debt rate")


def cost_of_capital(
    statement: DerivedStatement, k_e: float, k_dl: float, k_ds: float, tax_rate: float
) -> float:
    """Weighted cost of equity and after-tax debt.

    Weights come from the statement's own equity and debt lines, so an
    integer-rounded statement gives e.g. 849/2122 rather than exactly 0.4.
    """
    e, dl, ds = statement.equity, statement.long_term_debt, statement.short_term_debt
    total = e + dl + ds
    if not total > 0:
        raise DomainError("cost of capital is undefined for zero invested capital")
    after_tax = 1.0 - tax_rate
    return (e * k_e + dl * k_dl * after_tax + ds * k_ds * after_tax) / total


def economic_result(fcf_initial: float, fcf_recurring: float, cc: float) -> float:
    """Initial cash flow plus the recurring cash flow capitalised as a perpetuity.

    >>> round(economic_result(-1700, 1000, 0.148))
    5057
    """
    if not cc > 0:
        raise DomainError(f"perpetuity value is undefined for cost of capital {cc!r}")
    return fcf_initial + fcf_recurring / cc


def evaluate_strategy(
    profile: StrategyProfile,
    market: MarketConditions,
    weights: CapitalWeights,
    curve: SZCurve,
    policy: RoundingPolicy = FULL_PRECISION,
) -> StrategyOutcome:
    statement = build_statement(profile, weights, policy)
    sz = sz_at(curve, profile.ca_to_cr)
    beta_l = leveraged_beta(profile.unleveraged_beta, market.tax_rate,
                            profile.hamada_debt_equity_ratio)
    beta = corrected_beta(beta_l, sz, policy)
    k_e = cost_of_equity(beta, market)
    k_dl = long_debt_rate(k_e, sz, market)
    k_ds = short_debt_rate(k_e, sz, market)
    cc = cost_of_capital(statement, k_e, k_dl, k_ds, market.tax_rate)
    er = economic_result(statement.fcf_initial, statement.fcf_recurring, cc)

    flags = []
    if k_dl < 0:
        flags.append("negative-long-debt-rate")
    if k_ds < 0:
        flags.append("negative-short-debt-rate")
    return StrategyOutcome(
        name=profile.name,
        profile=profile,
        statement=statement,
        sz_premium=sz,
        leveraged_beta=beta_l,
        corrected_beta=beta,
        cost_of_equity=k_e,
        long_debt_rate=k_dl,
        short_debt_rate=k_ds,
        cost_of_capital=cc,
        economic_result=er,
        flags=tuple(flags),
    )


def compare_strategies(
    profiles: Sequence[StrategyProfile],
    market: MarketConditions,
    weights: CapitalWeights,
    curve: SZCurve,
    policy: RoundingPolicy = FULL_PRECISION,
) -> StrategyComparison:
    """Evaluate several strategies side by side, preserving input order.

    Ties in the best/lowest labels go to the earlier profile.
    """
    if not profiles:
        raise ValidationError("profiles", "at least one strategy profile is required")
    outcomes = tuple(evaluate_strategy(p, market, weights, curve, policy) for p in profiles)
    best = max(range(len(outcomes)), key=lambda i: (outcomes[i].economic_result, -i))
    cheapest = min(range(len(outcomes)), key=lambda i: (outcomes[i].cost_of_capital, i))
    return StrategyComparison(
        outcomes=outcomes,
        best_economic_result=outcomes[best].name,
        lowest_cost_of_capital=outcomes[cheapest].name,
    )
