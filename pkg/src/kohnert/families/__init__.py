"""Closed-form analysis for diagram families, plus automatic family detection."""

from __future__ import annotations

from typing import Optional

from ..closure import AnalysisReport, analyze
from ..diagram import Diagram, normalize
from ..errors import FamilyMismatchError
from .checkered import checkered, checkered_report, match_checkered
from .key import composition_of, key_diagram, key_report
from .one_column import is_one_per_column, one_per_column_report
from .two_row import is_two_row, two_row_report

FAMILIES = ("one-col", "two-row", "key", "checkered")


def detect_family(d: Diagram) -> str:
    """First matching family in a fixed order, or ``"generic"``."""
    if is_one_per_column(d):
        return "one-col"
    if is_two_row(d):
        return "two-row"
    if composition_of(d) is not None:
        return "key"
    if match_checkered(d) is not None:
        return "checkered"
    return "generic"


def family_report(d: Diagram, family: str) -> AnalysisReport:
    if family == "one-col":
        return one_per_column_report(d)
    if family == "two-row":
        return two_row_report(d)
    if family == "key":
        a = composition_of(d)
        if a is None:
            raise FamilyMismatchError(f"{d!r} is not a key diagram")
        return key_report(a)
    if family == "checkered":
        hit = match_checkered(d)
        if hit is None:
            raise FamilyMismatchError(f"{d!r} is not a checkered diagram")
        return checkered_report(*hit)
    raise FamilyMismatchError(f"unknown family {family!r}")


def analyze_auto(d0: Diagram, family: str = "auto", force_generic: bool = False, node_cap: Optional[int] = None) -> AnalysisReport:
    """Normalize, then use a closed form when one applies, else brute force."""
    d = normalize(d0)
    if force_generic or family == "generic":
        rep = analyze(d, node_cap=node_cap)
    else:
        fam = detect_family(d) if family == "auto" else family
        rep = analyze(d, node_cap=node_cap) if fam == "generic" else family_report(d, fam)
    rep.normalized = d != d0
    if rep.normalized:
        rep.notes.append("empty columns were removed before analysis")
    return rep


__all__ = [
    "FAMILIES",
    "analyze_auto",
    "checkered",
    "detect_family",
    "family_report",
    "key_diagram",
]
