"""Descriptive and robust location estimators for heavily skewed samples.

All functions accept any 1-D array-like of finite numbers.  Values are
sorted once up front; sums run over the sorted values so the result does
not depend on the order the caller supplied them in.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InsufficientDataError, UndefinedSkewnessError

__all__ = [
    "QUANTILE_METHOD",
    "SKEWNESS_METHOD",
    "DEFAULT_TRIM",
    "DEFAULT_WINSOR",
    "FiveNumber",
    "SummaryRow",
    "as_sample",
    "mean",
    "sample_sd",
    "quantile",
    "median",
    "trimmed_mean",
    "winsorized_mean",
    "skewness",
    "five_number",
    "summarize",
]

QUANTILE_METHOD = "linear, rank (n-1)p"
SKEWNESS_METHOD = "moment ratio g1 = m3 / m2**1.5"
DEFAULT_TRIM = 0.05
DEFAULT_WINSOR = 0.05


def as_sample(values) -> np.ndarray:
    """Return ``values`` as a sorted 1-D float array, rejecting non-finite entries."""
    arr = np.asarray(values, dtype=float).ravel()
    if not np.all(np.isfinite(arr)):
        raise ValueError("sample contains non-finite values")
    return np.sort(arr)


def _require(x: np.ndarray, n: int, what: str) -> None:
    if x.size < n:
        raise InsufficientDataError(
            f"{what} needs at least {n} observation{'s' if n > 1 else ''}, got {x.size}"
        )


def _tail_count(fraction: float, n: int) -> int:
    if not 0 <= fraction < 0.5:
        raise ValueError(f"tail fraction must lie in [0, 0.5), got {fraction!r}")
    return math.floor(fraction * n)


def _mean_sorted(x: np.ndarray) -> float:
    # rounding can push the float mean a hair outside [min, max]
    return float(min(max(np.mean(x), x[0]), x[-1]))


def mean(values) -> float:
    x = as_sample(values)
    _require(x, 1, "mean")
    return _mean_sorted(x)


def sample_sd(values) -> float:
    """Standard deviation with the ``n - 1`` denominator."""
    x = as_sample(values)
    _require(x, 2, "standard deviation")
    return float(np.std(x, ddof=1))


def quantile(values, p: float) -> float:
    """Quantile by linear interpolation between order statistics.

    The rank is ``h = (n - 1) * p`` (zero based); the result interpolates
    between ``x[floor(h)]`` and ``x[floor(h) + 1]``.  This is numpy's default
    ``"linear"`` method.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    x = as_sample(values)
    _require(x, 1, "quantile")
    h = (x.size - 1) * p
    lo = math.floor(h)
    if lo >= x.size - 1:
        return float(x[-1])
    frac = h - lo
    return float(x[lo] + frac * (x[lo + 1] - x[lo]))


def median(values) -> float:
    return quantile(values, 0.5)


def trimmed_mean(values, trim_fraction: float = DEFAULT_TRIM) -> float:
    """Mean after dropping ``floor(trim_fraction * n)`` values from each end.

    Parameters
    ----------
    values : array_like
        Finite observations.
    trim_fraction : float
        Share cut from *each* tail, in ``[0, 0.5)``.

    Returns
    -------
    float
    """
    x = as_sample(values)
    _require(x, 1, "trimmed mean")
    k = _tail_count(trim_fraction, x.size)
    return _mean_sorted(x[k:x.size - k])


def winsorized_mean(values, winsor_fraction: float = DEFAULT_WINSOR) -> float:
    """Mean after clamping ``floor(winsor_fraction * n)`` values at each end.

    The ``k`` smallest values are replaced by the ``(k+1)``-th smallest and the
    ``k`` largest by the ``(k+1)``-th largest.
    """
    x = as_sample(values)
    _require(x, 1, "winsorized mean")
    k = _tail_count(winsor_fraction, x.size)
    if k:
        x = x.copy()
        x[:k] = x[k]
        x[x.size - k:] = x[x.size - k - 1]
    return _mean_sorted(x)


def skewness(values) -> float:
    """Moment-ratio skewness ``g1 = m3 / m2**1.5`` (central moments over n)."""
    x = as_sample(values)
    _require(x, 3, "skewness")
    d = x - np.mean(x)
    m2 = float(np.mean(d * d))
    if x[0] == x[-1] or m2 == 0.0:
        raise UndefinedSkewnessError("skewness is undefined for a constant sample")
    m3 = float(np.mean(d * d * d))
    return m3 / m2 ** 1.5


@dataclass(frozen=True)
class FiveNumber:
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.minimum, self.q1, self.median, self.q3, self.maximum)


def five_number(values) -> FiveNumber:
    """Minimum, quartiles and maximum, as drawn in a box-and-whiskers plot."""
    x = as_sample(values)
    _require(x, 1, "five-number summary")
    return FiveNumber(
        minimum=float(x[0]),
        q1=quantile(x, 0.25),
        median=quantile(x, 0.5),
        q3=quantile(x, 0.75),
        maximum=float(x[-1]),
    )


@dataclass(frozen=True)
class SummaryRow:
    """One column of a descriptive table.  ``None`` marks a statistic that
    cannot be computed from the available observations."""

    size: int
    average: Optional[float]
    sd: Optional[float]
    median: Optional[float]
    truncated_mean: Optional[float]
    winsorized_mean: Optional[float]
    skewness: Optional[float]
    maximum: Optional[float]
    minimum: Optional[float]
    trim_fraction: float = DEFAULT_TRIM
    winsor_fraction: float = DEFAULT_WINSOR
    quantile_method: str = QUANTILE_METHOD
    skewness_method: str = SKEWNESS_METHOD

    STAT_FIELDS = ("size", "average", "sd", "median", "truncated_mean",
                   "winsorized_mean", "skewness", "maximum", "minimum")


def summarize(values, trim_fraction: float = DEFAULT_TRIM,
              winsor_fraction: float = DEFAULT_WINSOR) -> SummaryRow:
    x = as_sample(values)
    # validate fractions even for tiny samples
    _tail_count(trim_fraction, 0)
    _tail_count(winsor_fraction, 0)
    n = x.size
    meta = dict(trim_fraction=trim_fraction, winsor_fraction=winsor_fraction)
    if n == 0:
        return SummaryRow(0, None, None, None, None, None, None, None, None, **meta)

    skew = None
    if n >= 3:
        try:
            skew = skewness(x)
        except UndefinedSkewnessError:
            pass
    return SummaryRow(
        size=n,
        average=mean(x),
        sd=sample_sd(x) if n >= 2 else None,
        median=median(x),
        truncated_mean=trimmed_mean(x, trim_fraction),
        winsorized_mean=winsorized_mean(x, winsor_fraction),
        skewness=skew,
        maximum=float(x[-1]),
        minimum=float(x[0]),
        **meta,
    )
