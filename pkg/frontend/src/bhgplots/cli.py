"""Plot tool entry point: bhgplot --in <csv> [--in <csv>] --kind <k> --out <img>."""

from __future__ import annotations

import argparse
import sys

from .io import ColumnError, EmptyDataError
from .render import PlotJob, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhgplot",
        description="Render beam-CLI CSV outputs into figures.")
    parser.add_argument("--in", dest="inputs", action="append", required=True,
                        metavar="CSV", help="input CSV (repeat for multi-panel)")
    parser.add_argument("--kind", choices=("fronts", "momenta_panels"),
                        required=True)
    parser.add_argument("--out", required=True, metavar="IMAGE")
    parser.add_argument("--title", default=None)
    parser.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = PlotJob(input_csvs=args.inputs, figure_kind=args.kind,
                  output_image=args.out, title=args.title, dpi=args.dpi)
    try:
        render(job)
    except (ColumnError, EmptyDataError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
