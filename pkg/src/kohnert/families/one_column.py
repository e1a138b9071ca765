"""Diagrams with at most one cell in every column."""

from __future__ import annotations

from ..closure import AnalysisReport
from ..diagram import Diagram
from ..errors import FamilyMismatchError


def is_one_per_column(d: Diagram) -> bool:
    return all(m & (m - 1) == 0 for m in d.columns)


def one_per_column_min(d: Diagram) -> Diagram:
    """Every cell dropped to row 1."""
    return Diagram.from_columns(1 if m else 0 for m in d.columns)


def one_per_column_report(d: Diagram) -> AnalysisReport:
    if not is_one_per_column(d):
        raise FamilyMismatchError(f"{d!r} has a column with two or more cells")
    m = len(d)
    return AnalysisReport(
        node_count=None,
        min_count=1,
        bounded=True,
        ranked=True,
        b_value=m,
        minimals=[one_per_column_min(d)],
        family="one-col",
        rank_offset=m,
        details={"cells": m},
    )
