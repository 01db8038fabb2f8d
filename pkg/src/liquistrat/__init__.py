"""Liquidity investment strategies: cost of capital, economic result, and
robust descriptive statistics over nonprofit financial records."""

from .errors import (
    DegenerateRateWarning,
    DomainError,
    InsufficientDataError,
    UndefinedSkewnessError,
    ValidationError,
)
from .indicators import IndicatorSet, OrgRecord, compute_indicators, cycle_identities
from .ingest import Dataset, LoadError, column, load_csv, write_csv
from .robust import (
    FiveNumber,
    SummaryRow,
    five_number,
    mean,
    median,
    quantile,
    sample_sd,
    skewness,
    summarize,
    trimmed_mean,
    winsorized_mean,
)
from .strategy import (
    AFTER_CRISIS,
    AS_PRINTED,
    FLEXIBLE,
    FULL_PRECISION,
    MODERATE,
    EXAMPLE_PROFILES,
    EXAMPLE_WEIGHTS,
    PRE_CRISIS,
    RESTRICTIVE,
    CapitalWeights,
    DerivedStatement,
    MarketConditions,
    RoundingPolicy,
    StrategyComparison,
    StrategyOutcome,
    StrategyProfile,
    build_statement,
    compare_strategies,
    corrected_beta,
    cost_of_capital,
    cost_of_equity,
    economic_result,
    evaluate_strategy,
    leveraged_beta,
    long_debt_rate,
    short_debt_rate,
)
from .szcurve import SZCurve, UnsupportedVariantError, builtin_variant, sz_at

__version__ = "0.1.0"
