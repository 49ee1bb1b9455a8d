"""CSV, JSON and SVG output."""

from weakly_directed_walks.report.emitters import (
    COUNTS_COLUMNS,
    ZEROS_COLUMNS,
    counts_frame,
    metadata,
    to_csv,
    to_json,
    write_text,
    zeros_frame,
)
from weakly_directed_walks.report.svg import to_string, walk_svg, write_svg, zeros_svg

__all__ = [
    "COUNTS_COLUMNS",
    "ZEROS_COLUMNS",
    "counts_frame",
    "metadata",
    "to_csv",
    "to_json",
    "to_string",
    "walk_svg",
    "write_svg",
    "write_text",
    "zeros_frame",
    "zeros_svg",
]
