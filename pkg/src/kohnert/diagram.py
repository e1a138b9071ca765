"""Cell diagrams and the Kohnert move.

A diagram is stored as a tuple of column bitmasks: entry ``c - 1`` holds the
occupied rows of column ``c`` with bit ``r - 1`` set for row ``r``.  Trailing
empty columns are dropped, so two diagrams are equal exactly when their
sorted cell lists agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import DiagramError

DEFAULT_MAX_COORD = 64


class Cell(NamedTuple):
    row: int
    col: int


def _rows_of(mask: int) -> Iterator[int]:
    r = 1
    while mask:
        if mask & 1:
            yield r
        mask >>= 1
        r += 1


class Diagram:
    __slots__ = ("_cols", "_hash", "_key")

    def __init__(self, cells: Iterable[Sequence[int]] = ()):
        cols: list[int] = []
        for cell in cells:
            r, c = cell
            if not (isinstance(r, int) and isinstance(c, int)) or r < 1 or c < 1:
                raise DiagramError(f"invalid cell {tuple(cell)!r}: coordinates are 1-based")
            if c > len(cols):
                cols.extend([0] * (c - len(cols)))
            cols[c - 1] |= 1 << (r - 1)
        self._set_cols(tuple(cols))

    def _set_cols(self, cols: tuple[int, ...]) -> None:
        end = len(cols)
        while end and not cols[end - 1]:
            end -= 1
        self._cols = cols[:end]
        self._hash = hash(self._cols)
        self._key = None

    @classmethod
    def from_columns(cls, cols: Iterable[int]) -> "Diagram":
        d = cls.__new__(cls)
        d._set_cols(tuple(cols))
        return d

    @property
    def columns(self) -> tuple[int, ...]:
        """Row bitmasks per column (column 1 first)."""
        return self._cols

    @property
    def cells(self) -> tuple[Cell, ...]:
        """Cells in canonical order: column ascending, then row ascending."""
        return tuple(Cell(r, c) for c, mask in enumerate(self._cols, 1) for r in _rows_of(mask))

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        if self._key is None:
            self._key = tuple((c, r) for r, c in self.cells)
        return self._key

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return sum(m.bit_count() for m in self._cols)

    def __contains__(self, cell) -> bool:
        r, c = cell
        if r < 1 or c < 1 or c > len(self._cols):
            return False
        return bool(self._cols[c - 1] >> (r - 1) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._cols == other._cols

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Diagram") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return "Diagram({" + ",".join(f"({r},{c})" for r, c in self.cells) + "})"

    # -- statistics -----------------------------------------------------

    @property
    def num_cols(self) -> int:
        return len(self._cols)

    @property
    def num_rows(self) -> int:
        """Highest nonempty row (0 for the empty diagram)."""
        return max((m.bit_length() for m in self._cols), default=0)

    def rowsum(self) -> int:
        return sum(r for r, _ in self.cells)

    def column_counts(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._cols)

    def row_counts(self) -> tuple[int, ...]:
        counts = [0] * self.num_rows
        for r, _ in self.cells:
            counts[r - 1] += 1
        return tuple(counts)

    def row(self, r: int) -> tuple[int, ...]:
        """Occupied columns of row ``r``, ascending."""
        bit = 1 << (r - 1)
        return tuple(c for c, m in enumerate(self._cols, 1) if m & bit)

    def column(self, c: int) -> tuple[int, ...]:
        if c < 1 or c > len(self._cols):
            return ()
        return tuple(_rows_of(self._cols[c - 1]))

    def nonempty_rows(self) -> tuple[int, ...]:
        mask = 0
        for m in self._cols:
            mask |= m
        return tuple(_rows_of(mask))

    def is_normalized(self) -> bool:
        return all(self._cols)

    def check_bounds(self, max_coord: int = DEFAULT_MAX_COORD) -> None:
        if self.num_cols > max_coord or self.num_rows > max_coord:
            raise DiagramError(
                f"diagram spans {self.num_rows} rows x {self.num_cols} columns; limit is {max_coord}"
            )

    # -- moves ----------------------------------------------------------

    def kohnert_move(self, r: int) -> "MoveResult":
        return kohnert_move(self, r)

    def successors(self) -> Iterator[tuple[int, "Diagram"]]:
        """All nontrivial single moves as ``(row, result)``, rows ascending."""
        for r in self.nonempty_rows():
            res = kohnert_move(self, r)
            if res.moved:
                yield r, res.diagram

    def is_fixed(self) -> bool:
        return next(self.successors(), None) is None


@dataclass(frozen=True)
class MoveResult:
    moved: bool
    diagram: Diagram
    from_cell: Optional[Cell] = None
    to_cell: Optional[Cell] = None


def size(d: Diagram) -> int:
    return len(d)


def rowsum(d: Diagram) -> int:
    return d.rowsum()


def column_counts(d: Diagram) -> tuple[int, ...]:
    return d.column_counts()


def kohnert_move(d: Diagram, r: int) -> MoveResult:
    """Move the rightmost cell of row ``r`` to the first empty spot below it."""
    if r < 1:
        raise DiagramError(f"row must be positive, got {r}")
    bit = 1 << (r - 1)
    cols = d.columns
    for ci in range(len(cols) - 1, -1, -1):
        mask = cols[ci]
        if mask & bit:
            below = ~mask & (bit - 1)
            if not below:
                return MoveResult(False, d)
            target = below.bit_length()
            new = list(cols)
            new[ci] = (mask ^ bit) | (1 << (target - 1))
            return MoveResult(True, Diagram.from_columns(new), Cell(r, ci + 1), Cell(target, ci + 1))
    return MoveResult(False, d)


def apply_sequence(d: Diagram, rows: Iterable[int]) -> Diagram:
    for r in rows:
        d = kohnert_move(d, r).diagram
    return d


def normalize(d: Diagram) -> Diagram:
    """Drop empty columns, keeping the order of the nonempty ones."""
    return Diagram.from_columns(m for m in d.columns if m)
