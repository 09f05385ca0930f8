"""Rendering of bhgbeam CSV outputs into figures."""

from .io import (FIG1_COLUMNS, FIG2_COLUMNS, ColumnError, CsvTable,
                 EmptyDataError, read_fig1, read_fig2, read_table)
from .render import PlotJob, render, render_fronts, render_momenta_panels

__version__ = "1.0.0"

__all__ = [
    "FIG1_COLUMNS", "FIG2_COLUMNS", "ColumnError", "CsvTable",
    "EmptyDataError", "read_fig1", "read_fig2", "read_table",
    "PlotJob", "render", "render_fronts", "render_momenta_panels",
    "__version__",
]
