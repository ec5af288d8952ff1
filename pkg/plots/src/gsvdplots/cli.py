"""Command-line interface: `plots render --in accuracy.csv --out fig.png`."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plots",
                                     description="Accuracy figure rendering")
    sub = parser.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", help="render the 4-panel accuracy figure")
    r.add_argument("--in", dest="csv_path", required=True,
                   help="accuracy.csv produced by a comparison run")
    r.add_argument("--out", dest="out_path", required=True,
                   help="output image path (png, pdf, svg, ...)")
    r.add_argument("--title", default="")
    r.add_argument("--linear-y", action="store_true",
                   help="use a linear y-axis instead of log")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    spec = FigureSpec(csv_path=args.csv_path, out_path=args.out_path,
                      title=args.title, log_y=not args.linear_y)
    try:
        out = render(spec)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
