"""Loading organization-year records from CSV and slicing them into samples.

Expected header (order free, names exact)::

    org_id, year, sectors, cash_revenues, total_assets, fixed_assets,
    current_assets, inventories, accounts_receivable, cash_equivalents,
    fund_capital, long_term_debt, short_term_debt, accounts_payable, net_result

An empty cell is a missing value.  ``sectors`` holds a ``;``-separated list.
Bad rows are rejected individually with a reason; they never abort the load.
"""
from __future__ import annotations

import csv
import logging
import math
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .errors import ValidationError
from .indicators import (
    CL_SHORT_DEBT_PLUS_PAYABLES,
    CURRENCY_FIELDS,
    INDICATOR_NAMES,
    OrgRecord,
    compute_indicators,
)

__all__ = [
    "COLUMNS",
    "LoadError",
    "Reject",
    "Dataset",
    "load_csv",
    "write_csv",
    "filter",
    "column",
    "format_number",
]

log = logging.getLogger(__name__)

COLUMNS = ("org_id", "year", "sectors") + CURRENCY_FIELDS

# reason codes for rejected rows
R_COLUMN_COUNT = "column-count"
R_MISSING_KEY = "missing-key"
R_YEAR = "invalid-year"
R_NUMERIC = "numeric-parse"
R_COMMA_DECIMAL = "comma-decimal"
R_NON_FINITE = "non-finite"
R_DUPLICATE = "duplicate-key"

_COMMA_DECIMAL = re.compile(r"^[+-]?\d+,\d+$")


class LoadError(OSError):
    """The file cannot be read or its header lacks required columns."""


@dataclass(frozen=True)
class Reject:
    row: int
    reason: str
    detail: str = ""


@dataclass(frozen=True)
class Dataset:
    records: tuple[OrgRecord, ...]
    source: str = ""
    total_rows: int = 0
    rejects: tuple[Reject, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def accepted(self) -> int:
        return len(self.records)

    @property
    def rejected(self) -> int:
        return len(self.rejects)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def sectors(self) -> list[str]:
        return sorted(set().union(*(r.sectors for r in self.records)))

    def years(self) -> list[int]:
        return sorted({r.year for r in self.records})


def _parse_number(text: str, name: str) -> Optional[float]:
    text = text.strip()
    if text == "":
        return None
    if _COMMA_DECIMAL.match(text):
        raise _RowError(R_COMMA_DECIMAL, f"{name}={text!r} uses ',' as decimal separator")
    try:
        value = float(text)
    except ValueError:
        raise _RowError(R_NUMERIC, f"{name}={text!r} is not a number") from None
    if not math.isfinite(value):
        raise _RowError(R_NON_FINITE, f"{name}={text!r} is not finite")
    return value


class _RowError(Exception):
    def __init__(self, reason: str, detail: str):
        self.reason = reason
        self.detail = detail
        super().__init__(detail)


def _parse_row(row: dict) -> OrgRecord:
    org_id = (row.get("org_id") or "").strip()
    if not org_id:
        raise _RowError(R_MISSING_KEY, "org_id is empty")
    year_text = (row.get("year") or "").strip()
    if not re.fullmatch(r"\d{4}", year_text) or not 1900 <= int(year_text) <= 2100:
        raise _RowError(R_YEAR, f"year={year_text!r} is not a year in [1900, 2100]")
    sectors = frozenset(s.strip() for s in (row.get("sectors") or "").split(";") if s.strip())
    values = {name: _parse_number(row.get(name) or "", name) for name in CURRENCY_FIELDS}
    return OrgRecord(org_id, int(year_text), sectors, **values)


def load_csv(path) -> Dataset:
    """Read a record file.  Row numbers in rejects count data rows from 1."""
    path = Path(path)
    try:
        fh = open(path, newline="", encoding="utf-8-sig")
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc}") from exc

    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise LoadError(f"{path} is empty; a header row is required") from None
        except (csv.Error, UnicodeDecodeError) as exc:
            raise LoadError(f"cannot parse {path}: {exc}") from exc
        header = [h.strip() for h in header]
        missing = [c for c in COLUMNS if c not in header]
        if missing:
            raise LoadError(f"{path} header lacks required columns: {', '.join(missing)}")
        notes = []
        extra = [h for h in header if h not in COLUMNS]
        if extra:
            msg = f"ignoring unknown columns: {', '.join(extra)}"
            log.warning(msg)
            notes.append(msg)

        records: list[OrgRecord] = []
        rejects: list[Reject] = []
        seen: dict[tuple[str, int], int] = {}
        total = 0
        try:
            for cells in reader:
                if not cells or all(not c.strip() for c in cells):
                    continue
                total += 1
                if len(cells) != len(header):
                    rejects.append(Reject(total, R_COLUMN_COUNT,
                                          f"expected {len(header)} fields, got {len(cells)}"))
                    continue
                try:
                    rec = _parse_row(dict(zip(header, cells)))
                except _RowError as err:
                    rejects.append(Reject(total, err.reason, err.detail))
                    continue
                key = (rec.org_id, rec.year)
                if key in seen:
                    rejects.append(Reject(total, R_DUPLICATE,
                                          f"{key} already loaded from row {seen[key]}"))
                    continue
                seen[key] = total
                records.append(rec)
        except (csv.Error, UnicodeDecodeError) as exc:
            raise LoadError(f"cannot parse {path}: {exc}") from exc

    return Dataset(tuple(records), str(path), total, tuple(rejects), tuple(notes))


def format_number(value: Optional[float]) -> str:
    """Text for a CSV cell: empty for missing, no trailing ``.0`` for integers."""
    if value is None:
        return ""
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(float(value))


def write_csv(records: Iterable[OrgRecord], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in records:
            w.writerow([r.org_id, str(r.year), ";".join(sorted(r.sectors))]
                       + [format_number(getattr(r, n)) for n in CURRENCY_FIELDS])


def filter(ds: Dataset, sector: Optional[str] = None, year: Optional[int] = None) -> Dataset:
    """Records in ``sector`` (if given) and ``year`` (if given).

    A record with several sectors passes every one of those sector filters.
    """
    keep = tuple(
        r for r in ds.records
        if (sector is None or sector in r.sectors) and (year is None or r.year == year)
    )
    return replace(ds, records=keep)


def column(
    ds: Dataset,
    name: str,
    day_count: float = 365.0,
    cl_definition: str = CL_SHORT_DEBT_PLUS_PAYABLES,
) -> np.ndarray:
    """Present values of a raw field or computed indicator, in record order.

    Records where the value is absent are skipped, so sample sizes differ
    between columns exactly as data gaps dictate.
    """
    if name in CURRENCY_FIELDS:
        values = [getattr(r, name) for r in ds.records]
    elif name in INDICATOR_NAMES:
        values = [compute_indicators(r, day_count, cl_definition).get(name) for r in ds.records]
    else:
        raise ValidationError(
            "metric", f"unknown field {name!r}; expected one of "
            f"{', '.join(CURRENCY_FIELDS + INDICATOR_NAMES)}")
    return np.array([v for v in values if v is not None], dtype=float)
