"""Strategy-dependent risk premium correction as a function of CA/CR.

A curve is an ordered set of ``(ca_cr, sz)`` anchors.  Between anchors the
premium is interpolated linearly; outside the anchor range it is held at the
end values.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SZCurve",
    "UnsupportedVariantError",
    "BUILTIN_VARIANTS",
    "builtin_variant",
    "sz_at",
]


class UnsupportedVariantError(ValueError):
    pass


@dataclass(frozen=True)
class SZCurve:
    anchors: tuple[tuple[float, float], ...]
    name: str = "custom"

    def __post_init__(self):
        anchors = tuple((float(x), float(y)) for x, y in self.anchors)
        object.__setattr__(self, "anchors", anchors)
        if len(anchors) < 2:
            raise ValueError("anchors: at least two (ca_cr, sz) pairs are required")
        xs = [a[0] for a in anchors]
        ys = [a[1] for a in anchors]
        if not all(np.isfinite(xs)) or not all(np.isfinite(ys)):
            raise ValueError("anchors: values must be finite")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("anchors: ca_cr must be strictly increasing")
        if any(b >= a for a, b in zip(ys, ys[1:])):
            raise ValueError("anchors: sz must be strictly decreasing in ca_cr")
        if min(ys) < 0:
            raise ValueError("anchors: sz must be non-negative")

    @property
    def ca_cr(self) -> np.ndarray:
        return np.array([a[0] for a in self.anchors])

    @property
    def sz(self) -> np.ndarray:
        return np.array([a[1] for a in self.anchors])

    def __call__(self, ca_cr: float) -> float:
        return sz_at(self, ca_cr)


BUILTIN_VARIANTS = {
    "SZ1": ((0.3, 0.2), (0.45, 0.1), (0.6, 0.01)),
    "SZ3": ((0.3, 2.0), (0.45, 0.1), (0.6, 0.001)),
}


def builtin_variant(name: str) -> SZCurve:
    """Return one of the published anchor sets (``"SZ1"`` or ``"SZ3"``).

    ``"SZ2"`` is rejected: its shape is only described qualitatively and no
    anchor values exist for it.
    """
    key = name.strip().upper()
    if key == "SZ2":
        raise UnsupportedVariantError(
            "SZ2 has no published anchor values; supply custom anchors instead"
        )
    try:
        return SZCurve(BUILTIN_VARIANTS[key], name=key)
    except KeyError:
        raise UnsupportedVariantError(
            f"unknown SZ variant {name!r}; expected one of {sorted(BUILTIN_VARIANTS)}"
        ) from None


def sz_at(curve: SZCurve, ca_cr: float) -> float:
    """Premium at ``ca_cr``, linear between anchors and clamped outside them."""
    if not ca_cr > 0:
        raise ValueError(f"ca_cr must be positive, got {ca_cr!r}")
    # np.interp clamps to the end values outside [xp[0], xp[-1]]
    return float(np.interp(ca_cr, curve.ca_cr, curve.sz))
