"""Diagrams whose cells occupy exactly two rows r1 < r2."""

from __future__ import annotations

from dataclasses import dataclass

from ..closure import AnalysisReport
from ..diagram import Diagram
from ..errors import FamilyMismatchError


@dataclass(frozen=True)
class TwoRowProfile:
    """Column classes of a two-row diagram.

    ``left_*``/``right_*`` split the single-cell columns around the rightmost
    two-cell column.  With no two-cell column at all, the left sets are
    empty and the right sets hold every single-cell column.
    """

    r1: int
    r2: int
    cols_r1: frozenset
    cols_r2: frozenset
    both: frozenset
    only_r1: frozenset
    only_r2: frozenset
    left_r1: frozenset
    right_r1: frozenset
    left_r2: frozenset
    right_r2: frozenset

    def to_dict(self) -> dict:
        out = {"r1": self.r1, "r2": self.r2}
        for name in ("cols_r1", "cols_r2", "both", "only_r1", "only_r2", "left_r1", "right_r1", "left_r2", "right_r2"):
            out[name] = sorted(getattr(self, name))
        return out


def is_two_row(d: Diagram) -> bool:
    return len(d.nonempty_rows()) == 2


def two_row_profile(d: Diagram) -> TwoRowProfile:
    rows = d.nonempty_rows()
    if len(rows) != 2:
        raise FamilyMismatchError(f"expected exactly two nonempty rows, found {len(rows)}")
    r1, r2 = rows
    top, bot = set(d.row(r2)), set(d.row(r1))
    both = top & bot
    only1, only2 = bot - both, top - both
    pivot = max(both, default=None)
    if pivot is None:
        left1, left2 = set(), set()
    else:
        left1 = {c for c in only1 if c < pivot}
        left2 = {c for c in only2 if c < pivot}
    f = frozenset
    return TwoRowProfile(r1, r2, f(bot), f(top), f(both), f(only1), f(only2), f(left1), f(only1 - left1), f(left2), f(only2 - left2))


def _profile(d) -> TwoRowProfile:
    return d if isinstance(d, TwoRowProfile) else two_row_profile(d)


def two_row_min_count(d) -> int:
    p = _profile(d)
    return 1 if p.r1 == 1 else len(p.left_r1) + 1


def two_row_b(d) -> int:
    p = _profile(d)
    delta = 1 if p.both else 0
    return len(p.only_r1) + (1 + delta) * len(p.left_r2) + len(p.right_r2) + 3 * len(p.both)


def two_row_bounded(d) -> bool:
    p = _profile(d)
    return p.r1 == 1 or not p.left_r1


def two_row_ranked(d) -> bool:
    p = _profile(d)
    if p.r1 == 1 or not p.both:
        # without a two-cell column the diagram is one cell per column
        return True
    return not (p.right_r1 | p.right_r2) and len(p.both) <= 1


def two_row_is_minimal(d0: Diagram, d: Diagram) -> bool:
    """Decide whether ``d`` (assumed to lie in KD(d0)) is a minimal element.

    Checks the four structural conditions: single-cell columns right of the
    last two-cell column sit in row 1, the two-cell columns occupy rows 1-2,
    left single-cell columns of row r2 sit in row 2, and left single-cell
    columns of row r1 sit weakly decreasing within rows 1-2.
    """
    p = two_row_profile(d0)
    cols = d.columns

    def col(c):
        return cols[c - 1] if c <= len(cols) else 0

    if any(col(c) != 0b1 for c in p.right_r1 | p.right_r2):
        return False
    if any(col(c) != 0b11 for c in p.both):
        return False
    if any(col(c) != 0b10 for c in p.left_r2):
        return False
    heights = [col(c).bit_length() for c in sorted(p.left_r1)]
    if any(col(c).bit_count() != 1 for c in p.left_r1):
        return False
    if any(h > 2 for h in heights):
        return False
    return all(x >= y for x, y in zip(heights, heights[1:]))


def two_row_report(d: Diagram) -> AnalysisReport:
    p = two_row_profile(d)
    b = two_row_b(p)
    ranked = two_row_ranked(p)
    n = two_row_min_count(p)
    return AnalysisReport(
        node_count=None,
        min_count=n,
        bounded=n == 1,
        ranked=ranked,
        b_value=b,
        family="two-row",
        rank_offset=b if ranked else None,
        details={"profile": p.to_dict()},
    )
