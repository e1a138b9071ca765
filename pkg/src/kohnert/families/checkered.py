"""Checkered diagrams and the bijection between their minimal elements and KD(D_m)."""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Optional

from ..closure import AnalysisReport
from ..diagram import Diagram
from ..errors import PreconditionError, ShapeError
from .key import key_diagram


def _check_n(n: int, variant: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"checkered size must be a positive integer, got {n!r}")
    if variant not in (1, 2):
        raise PreconditionError(f"checkered variant must be 1 or 2, got {variant!r}")


def checkered(n: int, variant: int = 1) -> Diagram:
    """The n x n checkerboard; variant 1 contains (1,1), variant 2 does not.

    For n = 1 variant 2 is the empty diagram.
    """
    _check_n(n, variant)
    parity = 0 if variant == 1 else 1
    return Diagram((r, c) for r in range(1, n + 1) for c in range(1, n + 1) if (r + c + parity) % 2 == 0)


def match_checkered(d: Diagram) -> Optional[tuple[int, int]]:
    """``(n, variant)`` if ``d`` is a nonempty checkered diagram."""
    if not d.columns:
        return None
    for n in {d.num_rows, d.num_cols, d.num_rows + 1, d.num_cols + 1}:
        for v in (1, 2):
            if n >= 1 and checkered(n, v) == d:
                return n, v
    return None


# -- D_m and the empty-row sequence ------------------------------------------


def dm(m: int) -> Diagram:
    """Key diagram of (0, m, ..., m) with m copies of m."""
    if m < 1:
        raise PreconditionError("m must be positive")
    return key_diagram((0,) + (m,) * m)


def er_sequence(t: Diagram, m: int) -> tuple[int, ...]:
    """Empty row of each column of an m x (m+1) shape with one hole per column."""
    if m < 1:
        raise ShapeError("m must be positive")
    cols = t.columns
    if len(cols) != m:
        raise ShapeError(f"expected {m} nonempty columns, got {len(cols)}")
    full = (1 << (m + 1)) - 1
    out = []
    for c, mask in enumerate(cols, 1):
        if mask & ~full or mask.bit_count() != m:
            raise ShapeError(f"column {c} must hold {m} cells within rows 1..{m + 1}")
        out.append((full & ~mask).bit_length())
    return tuple(out)


def is_in_kd_dm(t: Diagram, m: int) -> bool:
    seq = er_sequence(t, m)
    return all(x <= y for x, y in zip(seq, seq[1:]))


def kd_dm_count(m: int) -> int:
    return comb(2 * m, m)


def diagram_from_er(seq, m: int) -> Diagram:
    full = (1 << (m + 1)) - 1
    return Diagram.from_columns(full & ~(1 << (e - 1)) for e in seq)


def kd_dm_members(m: int) -> Iterator[Diagram]:
    """KD(D_m) generated from weakly increasing hole sequences; no moves involved."""
    for seq in combinations_with_replacement(range(1, m + 2), m):
        yield diagram_from_er(seq, m)


# -- the bijection phi -----------------------------------------------------


def _odd_m(n: int) -> int:
    if n % 2 == 0:
        raise PreconditionError(f"the bijection needs odd n, got {n}")
    return n // 2


def _check_minimal(t: Diagram, n: int, variant: int) -> None:
    """Shape test for Min(Ch(n)): counts, rows, holes weakly increasing."""
    m = n // 2
    ch = checkered(n, variant)
    if t.column_counts() != ch.column_counts() or t.num_rows > m + 1:
        raise PreconditionError(f"{t!r} is not a minimal element of checkered({n}, {variant})")
    if variant == 1:
        picked = [t.columns[2 * i - 1] for i in range(1, m + 1)]
    else:
        if t.columns and t.columns[n - 1] != (1 << m) - 1:
            raise PreconditionError(f"column {n} of {t!r} is not bottom justified")
        picked = [t.columns[2 * i - 2] for i in range(1, m + 1)]
    if m and not is_in_kd_dm(Diagram.from_columns(picked), m):
        raise PreconditionError(f"{t!r} is not a minimal element of checkered({n}, {variant})")


def checkered_phi(t: Diagram, n: int, variant: int = 1) -> Diagram:
    """Min(Ch(n)) -> KD(D_m): keep the m-cell columns and close the gaps."""
    _check_n(n, variant)
    m = _odd_m(n)
    _check_minimal(t, n, variant)
    off = 0 if variant == 1 else 1
    return Diagram.from_columns(t.columns[2 * i - 1 - off] for i in range(1, m + 1))


def checkered_phi_inv(d: Diagram, n: int, variant: int = 1) -> Diagram:
    """KD(D_m) -> Min(Ch(n)): interleave bottom-justified full columns."""
    _check_n(n, variant)
    m = _odd_m(n)
    if m == 0:
        if d.columns:
            raise PreconditionError("KD(D_0) holds only the empty diagram")
    elif not is_in_kd_dm(d, m):
        raise PreconditionError(f"{d!r} is not in KD(D_{m})")
    cols = [0] * n
    if variant == 1:
        for i in range(1, m + 2):
            cols[2 * i - 2] = (1 << (m + 1)) - 1
        for i in range(1, m + 1):
            cols[2 * i - 1] = d.columns[i - 1]
    else:
        for i in range(1, m + 1):
            cols[2 * i - 1] = (1 << (m + 1)) - 1
            cols[2 * i - 2] = d.columns[i - 1]
        cols[n - 1] = (1 << m) - 1
    return Diagram.from_columns(cols)


def checkered_minimals(n: int, variant: int = 1) -> list[Diagram]:
    _check_n(n, variant)
    if n % 2 == 0:
        return [bottom_justified(checkered(n, variant))]
    m = n // 2
    members = kd_dm_members(m) if m else [Diagram()]
    return sorted(checkered_phi_inv(d, n, variant) for d in members)


def bottom_justified(d: Diagram) -> Diagram:
    return Diagram.from_columns((1 << m.bit_count()) - 1 for m in d.columns)


def property_star_holds(t: Diagram, n: int) -> bool:
    """Column i's j-th lowest cell has at least j cells of column i+2 weakly below it."""
    if n % 2 == 0:
        raise PreconditionError(f"property needs odd n, got {n}")
    for i in range(1, n - 1):
        rows = t.column(i)
        nxt = t.column(i + 2)
        for j, r in enumerate(rows, 1):
            if sum(1 for x in nxt if x <= r) < j:
                return False
    return True


def checkered_report(n: int, variant: int = 1) -> AnalysisReport:
    _check_n(n, variant)
    ch = checkered(n, variant)
    count = 1 if n % 2 == 0 else kd_dm_count(n // 2)
    ranked = n <= 3
    b = bottom_justified(ch).rowsum()
    notes = []
    if n == 1 and variant == 2:
        notes.append("checkered(1, 2) is empty; its closure is a single point")
    return AnalysisReport(
        node_count=None,
        min_count=count,
        bounded=count == 1,
        ranked=ranked,
        b_value=b,
        minimals=checkered_minimals(n, variant) if count <= 1000 else None,
        family="checkered",
        rank_offset=b if ranked else None,
        details={"n": n, "variant": variant},
        notes=notes,
    )
