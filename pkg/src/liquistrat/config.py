"""Scenario files: a line-oriented, sectioned ``key = value`` format.

Sections are ``[market]``, ``[weights]``, ``[rounding]``, ``[sz]`` and one
``[profile]`` per strategy (repeatable, order preserved).  ``#`` and ``;``
start comments.  Numbers may be written as fractions, e.g. ``0.4/0.6``.
Custom SZ curves go in ``[sz]`` as ``anchors = 0.3:0.2, 0.45:0.1, 0.6:0.01``.
"""
from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ValidationError
from .strategy import CapitalWeights, MarketConditions, RoundingPolicy, StrategyProfile
from .szcurve import SZCurve, UnsupportedVariantError, builtin_variant

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "parse_config",
    "load_config",
    "bundled_config",
    "parse_number",
    "parse_anchors",
]


class ConfigError(ValidationError):
    pass


@dataclass(frozen=True)
class ScenarioConfig:
    market: MarketConditions
    weights: CapitalWeights
    profiles: tuple[StrategyProfile, ...]
    curve: SZCurve
    rounding: RoundingPolicy = RoundingPolicy()


_SECTION = re.compile(r"^\[\s*([A-Za-z_]+)\s*\]$")

_MARKET_KEYS = {f.name for f in dataclasses.fields(MarketConditions)}
_WEIGHT_KEYS = {"equity": "equity_share", "long_debt": "long_debt_share",
                "short_debt": "short_debt_share"}
_ROUNDING_KEYS = {"statement_lines": "round_statement_lines_to_integers",
                  "leveraged_beta": "round_leveraged_beta_to_2dp"}
_PROFILE_KEYS = {f.name for f in dataclasses.fields(StrategyProfile)}
_PROFILE_REQUIRED = {"name", "cash_revenues", "ca_to_cr", "fixed_assets", "ebit_share"}
_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def parse_number(text: str) -> float:
    """Parse ``"0.45"``, ``"2 142.4"`` or a fraction such as ``"0.4/0.6"``."""
    text = text.replace(" ", "").replace("_", "")
    if "/" in text:
        num, _, den = text.partition("/")
        return float(num) / float(den)
    return float(text)


def parse_anchors(text: str) -> tuple[tuple[float, float], ...]:
    """``"0.3:0.2, 0.45:0.1"`` -> ``((0.3, 0.2), (0.45, 0.1))``."""
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        x, sep, y = chunk.partition(":")
        if not sep:
            raise ValueError(f"anchor {chunk!r} is not of the form ca_cr:sz")
        pairs.append((parse_number(x), parse_number(y)))
    return tuple(pairs)


def _sections(text: str) -> list[dict]:
    sections = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = re.split(r"\s[#;]|^[#;]", raw, maxsplit=1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = {"__name__": m.group(1).lower(), "__line__": lineno}
            sections.append(current)
            continue
        if current is None:
            raise ConfigError(f"line {lineno}", "key outside of any [section]")
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}", f"expected 'key = value', got {line!r}")
        key = key.strip().lower()
        if key in current:
            raise ConfigError(f"{current['__name__']}.{key}", f"duplicate key (line {lineno})")
        current[key] = (value.strip(), lineno)
    return sections


def _numbers(section: dict, allowed: dict | set, where: str) -> dict:
    out = {}
    for key, item in section.items():
        if key.startswith("__"):
            continue
        if key not in allowed:
            raise ConfigError(f"{where}.{key}", f"unknown key (line {item[1]})")
        target = allowed[key] if isinstance(allowed, dict) else key
        if target == "name":
            out[target] = item[0]
            continue
        try:
            out[target] = parse_number(item[0])
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{where}.{key}",
                              f"{item[0]!r} is not a number (line {item[1]})") from None
    return out


def _build(where: str, cls, kwargs):
    try:
        return cls(**kwargs)
    except ValidationError as exc:
        raise ConfigError(f"{where}.{exc.field}", str(exc).split(": ", 1)[-1]) from None
    except TypeError as exc:
        raise ConfigError(where, str(exc)) from None


def parse_config(text: str) -> ScenarioConfig:
    market = weights = curve = None
    rounding = RoundingPolicy()
    profiles = []
    seen = set()
    for sec in _sections(text):
        name = sec["__name__"]
        if name != "profile":
            if name in seen:
                raise ConfigError(name, f"section repeated (line {sec['__line__']})")
            seen.add(name)
        if name == "market":
            market = _build("market", MarketConditions, _numbers(sec, _MARKET_KEYS, "market"))
        elif name == "weights":
            weights = _build("weights", CapitalWeights, _numbers(sec, _WEIGHT_KEYS, "weights"))
        elif name == "rounding":
            flags = {}
            for key, (value, lineno) in ((k, v) for k, v in sec.items() if not k.startswith("__")):
                if key not in _ROUNDING_KEYS:
                    raise ConfigError(f"rounding.{key}", f"unknown key (line {lineno})")
                v = value.lower()
                if v not in _TRUE | _FALSE:
                    raise ConfigError(f"rounding.{key}", f"{value!r} is not a boolean (line {lineno})")
                flags[_ROUNDING_KEYS[key]] = v in _TRUE
            rounding = RoundingPolicy(**flags)
        elif name == "sz":
            curve = _parse_sz(sec)
        elif name == "profile":
            kwargs = _numbers(sec, _PROFILE_KEYS, "profile")
            where = f"profile[{len(profiles) + 1}]"
            missing = sorted(_PROFILE_REQUIRED - kwargs.keys())
            if missing:
                raise ConfigError(f"{where}.{missing[0]}", "required key is missing")
            profiles.append(_build(where, StrategyProfile, kwargs))
        else:
            raise ConfigError(name, f"unknown section (line {sec['__line__']})")

    if market is None:
        raise ConfigError("market", "section is required")
    if curve is None:
        raise ConfigError("sz", "section is required")
    if not profiles:
        raise ConfigError("profiles", "at least one [profile] section is required")
    return ScenarioConfig(market, weights or CapitalWeights(), tuple(profiles), curve, rounding)


def _parse_sz(sec: dict) -> SZCurve:
    keys = {k for k in sec if not k.startswith("__")}
    unknown = keys - {"variant", "anchors", "name"}
    if unknown:
        raise ConfigError(f"sz.{sorted(unknown)[0]}", "unknown key")
    if ("variant" in keys) == ("anchors" in keys):
        raise ConfigError("sz", "give exactly one of 'variant' or 'anchors'")
    if "variant" in keys:
        try:
            return builtin_variant(sec["variant"][0])
        except UnsupportedVariantError as exc:
            raise ConfigError("sz.variant", str(exc)) from None
    try:
        anchors = parse_anchors(sec["anchors"][0])
        return SZCurve(anchors, name=sec.get("name", ("custom",))[0])
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("sz.anchors", str(exc)) from None


def load_config(path) -> ScenarioConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def bundled_config(name: str) -> ScenarioConfig:
    """Load one of the shipped scenarios, e.g. ``bundled_config("table1")``."""
    fname = name if name.endswith(".cfg") else f"{name}.cfg"
    text = resources.files("liquistrat").joinpath("data", fname).read_text(encoding="utf-8")
    return parse_config(text)
