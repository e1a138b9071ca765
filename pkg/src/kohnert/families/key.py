"""Key diagrams of weak compositions and pure compositions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from ..closure import AnalysisReport
from ..diagram import Diagram
from ..errors import NotPureError, PreconditionError

Composition = tuple[int, ...]


def as_composition(a: Sequence[int]) -> Composition:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise PreconditionError(f"composition entries must be non-negative: {a}")
    return a


def key_diagram(a: Sequence[int]) -> Diagram:
    a = as_composition(a)
    return Diagram((i, j) for i, ai in enumerate(a, 1) for j in range(1, ai + 1))


def sort_composition(a: Sequence[int]) -> Composition:
    return tuple(sorted(as_composition(a), reverse=True))


def key_min(a: Sequence[int]) -> Diagram:
    """The unique minimal element of P(D(a)): the key diagram of sort(a)."""
    return key_diagram(sort_composition(a))


def composition_of(d: Diagram) -> Optional[Composition]:
    """Row lengths if every row of ``d`` is left justified, else ``None``."""
    rows = []
    for r in range(1, d.num_rows + 1):
        cols = d.row(r)
        if cols != tuple(range(1, len(cols) + 1)):
            return None
        rows.append(len(cols))
    return tuple(rows)


# -- purity ---------------------------------------------------------------


def forbidden_triple(a: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First 1-based ``j1 < j2 < j3`` matching one of the three defining patterns."""
    for j1, j2, j3 in combinations(range(len(a)), 3):
        x, y, z = a[j1], a[j2], a[j3]
        if x < y < z or x < z < y or x + 1 < y == z:
            return (j1 + 1, j2 + 1, j3 + 1)
    return None


def forbidden_pair_pattern(a: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """Same question via the two-pattern form: ``x<y<z`` or ``x+1<y and x<z``."""
    for j1, j2, j3 in combinations(range(len(a)), 3):
        x, y, z = a[j1], a[j2], a[j3]
        if x < y < z or (x + 1 < y and x < z):
            return (j1 + 1, j2 + 1, j3 + 1)
    return None


def is_pure(a: Sequence[int]) -> bool:
    a = as_composition(a)
    by_def = forbidden_triple(a) is None
    by_pairs = forbidden_pair_pattern(a) is None
    if by_def != by_pairs:  # pragma: no cover - the two forms are equivalent
        raise AssertionError(f"purity scans disagree on {a}")
    return by_def


# -- decomposition ----------------------------------------------------------

TYPES = ("i", "ii", "iii", "iv")


def is_type_i(part: Sequence[int]) -> bool:
    return len(part) >= 1 and all(x >= y for x, y in zip(part, part[1:]))


def is_type_ii(part: Sequence[int]) -> bool:
    if len(part) < 2:
        return False
    p = part[0]
    return set(part) == {p, p + 1}


def is_type_iii(part: Sequence[int]) -> bool:
    if len(part) < 2:
        return False
    return is_type_i(part[:-1]) and part[-2] < part[-1] - 1


def is_type_iv(part: Sequence[int]) -> bool:
    n = len(part)
    p = part[0] if part else None
    if n < 4 or part[-1] != p + 1:
        return False
    for s in range(2, n - 1):
        head, tail = part[:s], part[s:-1]
        if set(head) == {p, p + 1} and p > tail[0] and is_type_i(tail):
            return True
    return False


TYPE_CHECKS = {"i": is_type_i, "ii": is_type_ii, "iii": is_type_iii, "iv": is_type_iv}


@dataclass(frozen=True)
class PureDecomposition:
    parts: tuple[tuple[Composition, str], ...]

    def compositions(self) -> list[Composition]:
        return [p for p, _ in self.parts]

    def types(self) -> list[str]:
        return [t for _, t in self.parts]

    def is_valid_for(self, a: Sequence[int]) -> bool:
        flat = tuple(x for p, _ in self.parts for x in p)
        if flat != tuple(a):
            return False
        for (p, _), (q, _) in zip(self.parts, self.parts[1:]):
            if min(p) < max(q):
                return False
        return all(TYPE_CHECKS[t](p) for p, t in self.parts)


def _first_part(a: Composition) -> tuple[int, str]:
    """Length and type of the leading part; ``a`` is pure and nonempty."""
    n = len(a)
    # k1: least 0-based index with a[k1-1] < a[k1]
    k1 = next((k for k in range(1, n) if a[k - 1] < a[k]), None)
    if k1 is None:
        return n, "i"
    p, top = a[k1 - 1], a[k1]
    if top - p > 1:  # case 1
        return k1 + 1, "iii"
    # case 3 goes first: a prefix entry at least as large as the ascent top
    k0 = max((k for k in range(k1 - 1) if a[k] >= top), default=None)
    if k0 is not None:
        return k0 + 1, "i"
    if all(x in (p, p + 1) for x in a):  # case 2
        return n, "ii"
    # cases 4/5: prefix is constant p; k2 is the first later entry below p
    k2 = next(k for k in range(k1 + 1, n) if a[k] < p)
    k3 = next((k for k in range(k2 + 1, n) if a[k] == top), None)
    if k3 is not None:  # case 5
        return k3 + 1, "iv"
    return k2, "ii"  # case 4


def pure_decompose(a: Sequence[int]) -> PureDecomposition:
    """Split a pure composition into typed blocks, each as long as possible."""
    a = as_composition(a)
    pattern = forbidden_triple(a)
    if pattern is not None:
        raise NotPureError(f"{a} is not pure (pattern at positions {pattern})")
    parts = []
    rest = a
    while rest:
        k, kind = _first_part(rest)
        parts.append((rest[:k], kind))
        rest = rest[k:]
    return PureDecomposition(tuple(parts))


# -- reports ---------------------------------------------------------------


def key_b(a: Sequence[int]) -> int:
    return key_min(a).rowsum()


def key_report(a: Sequence[int]) -> AnalysisReport:
    a = as_composition(a)
    pure = is_pure(a)
    b = key_b(a)
    details: dict = {"composition": list(a), "sorted": list(sort_composition(a))}
    if pure:
        details["decomposition"] = [{"part": list(p), "type": t} for p, t in pure_decompose(a).parts]
    else:
        details["pattern"] = list(forbidden_triple(a))
    return AnalysisReport(
        node_count=None,
        min_count=1,
        bounded=True,
        ranked=pure,
        b_value=b,
        minimals=[key_min(a)],
        family="key",
        rank_offset=b if pure else None,
        details=details,
    )


def swap(a: Sequence[int], i: int, j: int) -> Composition:
    a = list(as_composition(a))
    a[i - 1], a[j - 1] = a[j - 1], a[i - 1]
    return tuple(a)


def row_swap_member(a: Sequence[int], i: int, j: int) -> Diagram:
    """D(a s_ij) for 1-based ``i < j`` with ``a_i < a_j``; it always lies in KD(D(a))."""
    a = as_composition(a)
    if not (1 <= i < j <= len(a)) or not a[i - 1] < a[j - 1]:
        raise PreconditionError(f"row swap needs i < j and a_i < a_j; got i={i}, j={j}, a={a}")
    return key_diagram(swap(a, i, j))
