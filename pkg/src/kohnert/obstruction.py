"""Local cell configurations that force a Kohnert poset to be non-ranked.

Four shapes are detected.  ``thm1`` and ``thm2`` are the two general
families; ``cor_a``/``cor_b`` are their three-row special cases:

* cor_a is thm1 with r1 = r2 = r*, r = r*+1, r' = r*+2, c = c1, c' = c2;
* cor_b is thm2 with r = r*, r' = r*+2, c = c1, c' = c2.

Every detector scans parameters in a fixed lexicographic order and returns
the first witness, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .closure import kd_closure
from .diagram import Diagram


def _row_mask(d: Diagram, r: int) -> int:
    """Bit ``c - 1`` set when ``(r, c)`` is a cell."""
    if r < 1:
        return 0
    bit = 1 << (r - 1)
    m = 0
    for i, col in enumerate(d.columns):
        if col & bit:
            m |= 1 << i
    return m


def _right_of(c: int) -> int:
    """Mask of columns strictly greater than ``c`` (within any width)."""
    return ~((1 << c) - 1)


def thm1_holds(d: Diagram, r: int, rp: int, r1: int, r2: int, c: int, cp: int) -> bool:
    if not (1 <= r1 < r and 1 <= r2 < r and r < rp and 1 <= c < cp):
        return False
    # (i) column c full from r to r', plus (r, c')
    if any((t, c) not in d for t in range(r, rp + 1)) or (r, cp) not in d:
        return False
    # (ii) (r', c) rightmost in its row
    if _row_mask(d, rp) & _right_of(c):
        return False
    # (iii) rows strictly between r and r' reach right of column c
    for t in range(r + 1, rp):
        if not _row_mask(d, t) & _right_of(c):
            return False
    # (iv) row r empty strictly between c and c' and right of c'
    row_r = _row_mask(d, r)
    if row_r & _right_of(c) & ~(1 << (cp - 1)):
        return False
    # (v) empty positions below (r, c) and (r, c')
    return (r1, c) not in d and (r2, cp) not in d


def thm2_holds(d: Diagram, r: int, rp: int, c: int, cp: int) -> bool:
    if not (1 <= c < cp and 1 <= r < rp - 1):
        return False
    # (i) (r', c') present and rightmost in its row
    if (rp, cp) not in d or _row_mask(d, rp) & _right_of(cp):
        return False
    # (ii) column c full on rows r+1 .. r'
    if any((t, c) not in d for t in range(r + 1, rp + 1)):
        return False
    # (iii)
    if (r, c) in d:
        return False
    # (iv) rows strictly between r and r'-1 reach right of column c
    for t in range(r + 1, rp - 1):
        if not _row_mask(d, t) & _right_of(c):
            return False
    # (v) every column right of c has a hole below row r'
    below = (1 << (rp - 1)) - 1
    for cc in range(c + 1, d.num_cols + 1):
        if d.columns[cc - 1] & below == below:
            return False
    return True


def cor_a_holds(d: Diagram, rs: int, c1: int, c2: int) -> bool:
    if not (rs >= 1 and 1 <= c1 < c2):
        return False
    if (rs + 1, c1) not in d or (rs + 2, c1) not in d or (rs + 1, c2) not in d:
        return False
    if _row_mask(d, rs + 2) & _right_of(c1):
        return False
    if _row_mask(d, rs + 1) & _right_of(c1) & ~(1 << (c2 - 1)):
        return False
    return (rs, c1) not in d and (rs, c2) not in d


def cor_b_holds(d: Diagram, rs: int, c1: int, c2: int) -> bool:
    if not (rs >= 1 and 1 <= c1 < c2):
        return False
    for cell in ((rs + 1, c1), (rs + 2, c1), (rs, c2), (rs + 2, c2)):
        if cell not in d:
            return False
    if _row_mask(d, rs + 2) & _right_of(c2):
        return False
    if _row_mask(d, rs + 1) & _right_of(c1):
        return False
    return (rs, c1) not in d


_CHECKS = {
    "Thm1": (thm1_holds, ("r", "rp", "r1", "r2", "c", "cp")),
    "Thm2": (thm2_holds, ("r", "rp", "c", "cp")),
    "CorA": (cor_a_holds, ("rs", "c1", "c2")),
    "CorB": (cor_b_holds, ("rs", "c1", "c2")),
}


@dataclass(frozen=True)
class ObstructionWitness:
    kind: str
    diagram: Diagram
    params: dict

    def validate(self) -> bool:
        fn, names = _CHECKS[self.kind]
        return fn(self.diagram, *(self.params[k] for k in names))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "diagram": [[r, c] for r, c in self.diagram.cells],
        }


def detect_thm1(d: Diagram) -> Optional[ObstructionWitness]:
    R, C = d.num_rows, d.num_cols
    for c in range(1, C + 1):
        for cp in range(c + 1, C + 1):
            for r in range(2, R + 1):
                for rp in range(r + 1, R + 1):
                    # smallest r1, r2 come first in scan order
                    r1 = next((t for t in range(1, r) if (t, c) not in d), None)
                    r2 = next((t for t in range(1, r) if (t, cp) not in d), None)
                    if r1 is None or r2 is None:
                        continue
                    if thm1_holds(d, r, rp, r1, r2, c, cp):
                        return ObstructionWitness("Thm1", d, dict(r=r, rp=rp, r1=r1, r2=r2, c=c, cp=cp))
    return None


def detect_thm2(d: Diagram) -> Optional[ObstructionWitness]:
    R, C = d.num_rows, d.num_cols
    for c in range(1, C + 1):
        for cp in range(c + 1, C + 1):
            for r in range(1, R + 1):
                for rp in range(r + 2, R + 1):
                    if thm2_holds(d, r, rp, c, cp):
                        return ObstructionWitness("Thm2", d, dict(r=r, rp=rp, c=c, cp=cp))
    return None


def detect_cor(d: Diagram) -> Optional[ObstructionWitness]:
    """Case (a) over the whole scan first, then case (b)."""
    R, C = d.num_rows, d.num_cols
    for kind, fn in (("CorA", cor_a_holds), ("CorB", cor_b_holds)):
        for c1 in range(1, C + 1):
            for c2 in range(c1 + 1, C + 1):
                for rs in range(1, R - 1):
                    if fn(d, rs, c1, c2):
                        return ObstructionWitness(kind, d, dict(rs=rs, c1=c1, c2=c2))
    return None


def detect_any(d: Diagram) -> Optional[ObstructionWitness]:
    return detect_cor(d) or detect_thm1(d) or detect_thm2(d)


def scan_closure_for_obstruction(d0: Diagram, node_cap=None, poset=None) -> Optional[ObstructionWitness]:
    """First witness anywhere in KD(d0), in BFS node order.

    The cheap three-row check runs over every node before the general ones.
    """
    p = poset if poset is not None else kd_closure(d0, node_cap=node_cap)
    for d in p.nodes:
        w = detect_cor(d)
        if w is not None:
            return w
    for d in p.nodes:
        w = detect_thm1(d) or detect_thm2(d)
        if w is not None:
            return w
    return None
