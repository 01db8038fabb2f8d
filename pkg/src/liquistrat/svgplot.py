"""Minimal, dependency-free SVG output for the SZ curve and boxplots.

Output is a pure function of the inputs (no timestamps or random ids), so
the same call always produces the same bytes.  Elements carry a ``class``
attribute (``anchor``, ``segment``, ``box``, ``median``, ``whisker``,
``cap``, ``axis``, ``tick``) to make them easy to find.
"""
from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .robust import FiveNumber
from .szcurve import SZCurve

__all__ = ["WIDTH", "HEIGHT", "MARGIN", "sz_curve_svg", "boxplot_svg"]

WIDTH = 640
HEIGHT = 400
MARGIN = 60


def _attr(text: str) -> str:
    return escape(text, {'"': "&quot;"})


def _n(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    text = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


class _Scale:
    def __init__(self, lo, hi, out_lo, out_hi):
        if hi == lo:
            pad = abs(lo) * 0.5 or 1.0
            lo, hi = lo - pad, hi + pad
        self.lo, self.hi, self.out_lo, self.out_hi = lo, hi, out_lo, out_hi

    def __call__(self, v):
        return self.out_lo + (v - self.lo) / (self.hi - self.lo) * (self.out_hi - self.out_lo)


def _doc(body: list[str], title: str) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">\n'
        f"<title>{escape(title)}</title>\n"
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _axes(body, xlabel, ylabel):
    x0, y0, x1, y1 = MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN
    body.append(f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>')
    body.append(f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')
    body.append(f'<text x="{(x0 + x1) / 2:.2f}" y="{HEIGHT - 15}" '
                f'text-anchor="middle">{escape(xlabel)}</text>')
    body.append(f'<text x="15" y="{(y0 + y1) / 2:.2f}" text-anchor="middle" '
                f'transform="rotate(-90 15 {(y0 + y1) / 2:.2f})">{escape(ylabel)}</text>')


def _yticks(body, ys: _Scale, values):
    for v in values:
        y = ys(v)
        body.append(f'<line class="tick" x1="{MARGIN - 5}" y1="{_n(y)}" '
                    f'x2="{MARGIN}" y2="{_n(y)}" stroke="black"/>')
        body.append(f'<text x="{MARGIN - 8}" y="{_n(y + 4)}" '
                    f'text-anchor="end">{_tick_label(v)}</text>')


def sz_curve_svg(curve: SZCurve, title: str | None = None) -> str:
    """Piecewise-linear SZ curve with a marker at every anchor."""
    xs = [a[0] for a in curve.anchors]
    ys = [a[1] for a in curve.anchors]
    span = xs[-1] - xs[0]
    xscale = _Scale(xs[0] - 0.1 * span, xs[-1] + 0.1 * span, MARGIN, WIDTH - MARGIN)
    yscale = _Scale(0.0, max(ys) * 1.1, HEIGHT - MARGIN, MARGIN)

    body: list[str] = []
    _axes(body, "CA/CR", "SZ")
    for x in xs:
        px = xscale(x)
        body.append(f'<line class="tick" x1="{_n(px)}" y1="{HEIGHT - MARGIN}" '
                    f'x2="{_n(px)}" y2="{HEIGHT - MARGIN + 5}" stroke="black"/>')
        body.append(f'<text x="{_n(px)}" y="{HEIGHT - MARGIN + 18}" '
                    f'text-anchor="middle">{_tick_label(x)}</text>')
    _yticks(body, yscale, sorted(set([0.0] + ys)))
    for (xa, ya), (xb, yb) in zip(curve.anchors, curve.anchors[1:]):
        body.append(f'<line class="segment" x1="{_n(xscale(xa))}" y1="{_n(yscale(ya))}" '
                    f'x2="{_n(xscale(xb))}" y2="{_n(yscale(yb))}" '
                    'stroke="steelblue" stroke-width="2"/>')
    for x, y in curve.anchors:
        body.append(f'<circle class="anchor" cx="{_n(xscale(x))}" cy="{_n(yscale(y))}" '
                    'r="4" fill="steelblue"/>')
    return _doc(body, title or f"SZ correction as a function of CA/CR ({curve.name})")


def boxplot_svg(boxes: Sequence[tuple[str, FiveNumber]], title: str = "Boxplots") -> str:
    """One box per ``(label, summary)``; whiskers run to the minimum and maximum."""
    if not boxes:
        raise ValueError("nothing to plot")
    lo = min(b.minimum for _, b in boxes)
    hi = max(b.maximum for _, b in boxes)
    yscale = _Scale(lo, hi, HEIGHT - MARGIN, MARGIN)
    slot = (WIDTH - 2 * MARGIN) / len(boxes)
    half = min(30.0, slot * 0.3)

    body: list[str] = []
    _axes(body, "", "value")
    _yticks(body, yscale, sorted({lo, hi}))
    for i, (label, s) in enumerate(boxes):
        cx = MARGIN + slot * (i + 0.5)
        left, right = cx - half, cx + half
        ymin, yq1, ymed, yq3, ymax = (yscale(v) for v in s.as_tuple())
        body.append(f'<g class="boxplot" data-label="{_attr(label)}">')
        body.append(f'<line class="whisker" x1="{_n(cx)}" y1="{_n(ymin)}" '
                    f'x2="{_n(cx)}" y2="{_n(yq1)}" stroke="black"/>')
        body.append(f'<line class="whisker" x1="{_n(cx)}" y1="{_n(yq3)}" '
                    f'x2="{_n(cx)}" y2="{_n(ymax)}" stroke="black"/>')
        for y in (ymin, ymax):
            body.append(f'<line class="cap" x1="{_n(cx - half / 2)}" y1="{_n(y)}" '
                        f'x2="{_n(cx + half / 2)}" y2="{_n(y)}" stroke="black"/>')
        body.append(f'<rect class="box" x="{_n(left)}" y="{_n(yq3)}" '
                    f'width="{_n(right - left)}" height="{_n(yq1 - yq3)}" '
                    'fill="lightsteelblue" stroke="black"/>')
        body.append(f'<line class="median" x1="{_n(left)}" y1="{_n(ymed)}" '
                    f'x2="{_n(right)}" y2="{_n(ymed)}" stroke="black" stroke-width="2"/>')
        body.append(f'<text x="{_n(cx)}" y="{HEIGHT - MARGIN + 18}" '
                    f'text-anchor="middle">{escape(label)}</text>')
        body.append("</g>")
    return _doc(body, title)
