"""CSV curve tables: header ``t`` plus one column per curve label.

Curve values are written with 9 significant digits (round-trips within
5e-10 for values in [0, 1]); grid times are written exactly via repr.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .aggregate import SurvivabilityCurve

__all__ = ["CurveTable", "CsvFormatError", "curve_table", "write_curve_csv", "read_curve_csv"]


class CsvFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CurveTable:
    times: np.ndarray
    columns: tuple[tuple[str, np.ndarray], ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.columns)


def curve_table(curves) -> CurveTable:
    """Assemble curves sharing one grid into a table."""
    curves = list(curves)
    if not curves:
        raise ValueError("need at least one curve")
    grid = curves[0].grid
    for c in curves[1:]:
        if not np.array_equal(c.grid, grid):
            raise ValueError("all curves in a table must share the same grid")
    return CurveTable(times=grid, columns=tuple((c.label, c.values) for c in curves))


def render_curve_csv(table: CurveTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t"] + list(table.labels()))
    for i, t in enumerate(table.times):
        writer.writerow([repr(float(t))] + [f"{vals[i]:.9g}" for _, vals in table.columns])
    return buf.getvalue()


def write_curve_csv(table: CurveTable, path: "str | Path") -> None:
    Path(path).write_text(render_curve_csv(table))


def read_curve_csv(path: "str | Path") -> CurveTable:
    """Parse a curve table; raises :class:`CsvFormatError` on bad structure."""
    text = Path(path).read_text()
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r]
    if not rows:
        raise CsvFormatError("empty CSV")
    header = rows[0]
    if len(header) < 2 or header[0] != "t":
        raise CsvFormatError("first column must be 't' followed by curve labels")
    ncols = len(header)
    times = []
    data: list[list[float]] = [[] for _ in header[1:]]
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != ncols:
            raise CsvFormatError(f"line {lineno}: expected {ncols} fields, got {len(row)}")
        try:
            values = [float(field) for field in row]
        except ValueError:
            raise CsvFormatError(f"line {lineno}: non-numeric field") from None
        times.append(values[0])
        for j, v in enumerate(values[1:]):
            data[j].append(v)
    if not times:
        raise CsvFormatError("no data rows")
    columns = tuple(
        (label, np.array(col, dtype=float)) for label, col in zip(header[1:], data)
    )
    return CurveTable(times=np.array(times, dtype=float), columns=columns)


def table_as_curves(table: CurveTable) -> list[SurvivabilityCurve]:
    return [
        SurvivabilityCurve(label=label, grid=table.times, values=vals)
        for label, vals in table.columns
    ]
