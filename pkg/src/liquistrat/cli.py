"""Evaluate liquidity strategies, summarise record CSVs and draw SVG figures.

    liquistrat scenario --config table1.cfg [--format text|csv]
    liquistrat stats --input records.csv [--group-by sector|year|none]
                     [--metrics m1,m2] [--trim F] [--winsor F] [--format text|csv]
    liquistrat plot sz (--variant SZ1 | --anchors "0.3:0.2,0.6:0.01") -o curve.svg
    liquistrat plot box --input records.csv --metric m1[,m2] -o box.svg

Exit status: 0 on success, 1 for invalid input, 2 for I/O failures.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_config, parse_anchors
from .errors import ValidationError
from .indicators import CL_SHORT_DEBT_ONLY, CL_SHORT_DEBT_PLUS_PAYABLES
from .ingest import LoadError, column, load_csv
from .ingest import filter as filter_dataset
from .report import DEFAULT_METRICS, render_scenario, render_stats, summary_table
from .robust import five_number
from .strategy import compare_strategies
from .svgplot import boxplot_svg, sz_curve_svg
from .szcurve import SZCurve, UnsupportedVariantError, builtin_variant

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for I/O here
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


def _fraction(text: str) -> float:
    v = float(text)
    if not 0 <= v < 0.5:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 0.5)")
    return v


def _metrics(text: str) -> list[str]:
    return [m.strip() for m in text.split(",") if m.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liquistrat", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sc = sub.add_parser("scenario", help="evaluate liquidity strategies from a config file")
    sc.add_argument("--config", required=True, type=Path)
    sc.add_argument("--format", choices=("text", "csv"), default="text")

    st = sub.add_parser("stats", help="summary statistics over a record CSV")
    st.add_argument("--input", required=True, type=Path)
    st.add_argument("--group-by", choices=("sector", "year", "none"), default="none")
    st.add_argument("--metrics", type=_metrics, default=list(DEFAULT_METRICS))
    st.add_argument("--trim", type=_fraction, default=0.05)
    st.add_argument("--winsor", type=_fraction, default=0.05)
    st.add_argument("--day-count", type=float, default=365.0)
    st.add_argument("--cl-definition", default=CL_SHORT_DEBT_PLUS_PAYABLES,
                    choices=(CL_SHORT_DEBT_PLUS_PAYABLES, CL_SHORT_DEBT_ONLY))
    st.add_argument("--format", choices=("text", "csv"), default="text")

    pl = sub.add_parser("plot", help="write an SVG figure")
    kinds = pl.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    sz = kinds.add_parser("sz", help="SZ correction curve")
    src = sz.add_mutually_exclusive_group(required=True)
    src.add_argument("--variant")
    src.add_argument("--anchors", help='e.g. "0.3:0.2, 0.45:0.1, 0.6:0.01"')
    sz.add_argument("-o", "--output", required=True, type=Path)
    box = kinds.add_parser("box", help="box-and-whiskers plot of record metrics")
    box.add_argument("--input", required=True, type=Path)
    box.add_argument("--metric", required=True, type=_metrics)
    box.add_argument("--year", type=int)
    box.add_argument("-o", "--output", required=True, type=Path)
    return p


def _scenario(args) -> str:
    cfg = load_config(args.config)
    result = compare_strategies(cfg.profiles, cfg.market, cfg.weights, cfg.curve, cfg.rounding)
    return render_scenario(result, args.format)


def _stats(args) -> str:
    ds = load_csv(args.input)
    for r in ds.rejects:
        print(f"warning: row {r.row} rejected ({r.reason}): {r.detail}", file=sys.stderr)
    table = summary_table(ds, args.group_by, args.metrics, args.trim, args.winsor,
                          args.day_count, args.cl_definition)
    return render_stats(table, args.format, day_count=args.day_count,
                        cl_definition=args.cl_definition)


def _plot(args) -> None:
    if args.kind == "sz":
        if args.variant:
            curve = builtin_variant(args.variant)
        else:
            curve = SZCurve(parse_anchors(args.anchors), name="custom")
        svg = sz_curve_svg(curve)
    else:
        ds = load_csv(args.input)
        if args.year is not None:
            ds = filter_dataset(ds, year=args.year)
        boxes = []
        for m in args.metric:
            sample = column(ds, m)
            if sample.size == 0:
                raise ValidationError("metric", f"no values present for {m!r}")
            boxes.append((m, five_number(sample)))
        svg = boxplot_svg(boxes, title=f"Boxplots ({Path(args.input).name})")
    try:
        args.output.write_text(svg, encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot write {args.output}: {exc}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return EXIT_VALIDATION
    try:
        if args.command == "scenario":
            sys.stdout.write(_scenario(args))
        elif args.command == "stats":
            sys.stdout.write(_stats(args))
        else:
            _plot(args)
    except (LoadError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ValidationError, UnsupportedVariantError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
