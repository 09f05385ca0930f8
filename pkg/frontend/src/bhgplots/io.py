"""CSV reading and contract validation for the beam CLI's outputs.

The upstream CSV contract is strictly positional: a file is accepted only if
its header row lists exactly the contracted column names in the contracted
order.  Provenance is the leading block of '#'-prefixed 'key = value' lines.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

FIG1_COLUMNS = ("variant", "gouy_level_rad", "xi_rho_pm", "xi3_pm")
FIG2_COLUMNS = (
    "theta_D_rad", "w0_pm", "S3_hbar", "L3_hbar", "J3_hbar",
    "Delta_divergence", "Delta_direct", "berry_phase_rad",
    "gouy_shift_berry_rad", "gouy_shift_modeweight_rad",
)


class ColumnError(ValueError):
    """Header does not match the CSV contract for the declared figure kind."""


class EmptyDataError(ValueError):
    """Header present but no data rows."""


@dataclass
class CsvTable:
    """Parsed CSV: provenance mapping, header tuple and string-valued rows."""

    provenance: dict[str, str]
    columns: tuple[str, ...]
    rows: list[tuple[str, ...]] = field(repr=False)

    def floats(self, column: str) -> np.ndarray:
        i = self.columns.index(column)
        return np.array([float(r[i]) for r in self.rows])

    def strings(self, column: str) -> list[str]:
        i = self.columns.index(column)
        return [r[i] for r in self.rows]


def _check_columns(found: tuple[str, ...], expected: tuple[str, ...], path):
    missing = [c for c in expected if c not in found]
    if missing:
        raise ColumnError(f"{path}: missing column(s) {', '.join(missing)}")
    if found != expected:
        raise ColumnError(
            f"{path}: columns out of contract order; expected "
            f"{','.join(expected)} but found {','.join(found)}")


def read_table(path, expected_columns: tuple[str, ...]) -> CsvTable:
    """Read one CSV, validating the header against the contract."""
    provenance: dict[str, str] = {}
    with open(path, newline="") as fh:
        header = None
        rows: list[tuple[str, ...]] = []
        for record in csv.reader(fh):
            if not record:
                continue
            if record[0].startswith("#"):
                text = ",".join(record).lstrip("#").strip()
                if "=" in text:
                    key, val = (part.strip() for part in text.split("=", 1))
                    provenance[key] = val
                continue
            if header is None:
                header = tuple(record)
                _check_columns(header, expected_columns, path)
            else:
                rows.append(tuple(record))
    if header is None:
        raise ColumnError(f"{path}: no header row found")
    if not rows:
        raise EmptyDataError(f"{path}: no samples")
    return CsvTable(provenance, header, rows)


def read_fig1(path) -> CsvTable:
    return read_table(path, FIG1_COLUMNS)


def read_fig2(path) -> CsvTable:
    return read_table(path, FIG2_COLUMNS)
