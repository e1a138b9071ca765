"""KD(D0): the Kohnert closure of a diagram and its poset structure."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .diagram import DEFAULT_MAX_COORD, Diagram, normalize
from .errors import PreconditionError, ResourceLimitError
from .poset import Poset, RankCertificate, transitive_reduction

DEFAULT_NODE_CAP = 1_000_000


def default_node_cap() -> int:
    env = os.environ.get("KOHNERT_NODE_CAP")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise PreconditionError(f"KOHNERT_NODE_CAP must be an integer, got {env!r}") from None
        if cap < 1:
            raise PreconditionError("KOHNERT_NODE_CAP must be positive")
        return cap
    return DEFAULT_NODE_CAP


class KohnertPoset(Poset):
    """The poset on KD(root) ordered by reachability under Kohnert moves.

    ``nodes`` are in BFS-layer order (layer = fewest moves from the root),
    canonical order within a layer, so ``nodes[0]`` is the root.
    ``move_succ[i]`` lists the nodes one nontrivial move below node ``i``.
    """

    def __init__(self, nodes, move_succ):
        super().__init__(nodes)
        self.move_succ = [list(vs) for vs in move_succ]
        self._rowsums = [d.rowsum() for d in self.nodes]

    @property
    def root(self) -> Diagram:
        return self.nodes[0]

    def move_edges(self) -> list[tuple[Diagram, Diagram]]:
        return [(self.nodes[u], self.nodes[v]) for u, vs in enumerate(self.move_succ) for v in vs]

    def _compute_covers(self):
        return transitive_reduction(self.move_succ, self._rowsums)

    def minimal_elements(self) -> list[Diagram]:
        # fixed by every move; no reduction needed
        return [self.nodes[i] for i, vs in enumerate(self.move_succ) if not vs]

    def is_bounded(self) -> bool:
        return len(self.minimal_elements()) == 1

    def b_value(self) -> int:
        return min(d.rowsum() for d in self.minimal_elements())

    def _below(self, i):
        seen = {i}
        stack = [i]
        while stack:
            x = stack.pop()
            for y in self.move_succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def interval(self, a, b) -> "KohnertPoset":
        keep = self.interval_indices(a, b)
        # keep b first so it stays the root
        ib = self.index(b)
        keep.remove(ib)
        keep.insert(0, ib)
        pos = {i: k for k, i in enumerate(keep)}
        succ = [[pos[v] for v in self.move_succ[i] if v in pos] for i in keep]
        return KohnertPoset([self.nodes[i] for i in keep], succ)


def kd_closure(d0: Diagram, node_cap: Optional[int] = None, max_coord: int = DEFAULT_MAX_COORD) -> KohnertPoset:
    """Breadth-first enumeration of every diagram reachable from ``d0``."""
    if node_cap is None:
        node_cap = default_node_cap()
    d0.check_bounds(max_coord)
    nodes = [d0]
    index = {d0: 0}
    succ: list[list[int]] = []
    frontier = [d0]
    while frontier:
        pending = []
        fresh = set()
        for d in frontier:
            outs = [y for _, y in d.successors()]
            pending.append(outs)
            for y in outs:
                if y not in index:
                    fresh.add(y)
        if len(index) + len(fresh) > node_cap:
            raise ResourceLimitError(f"closure of {d0!r} exceeds the node cap {node_cap}")
        layer = sorted(fresh)
        for y in layer:
            index[y] = len(nodes)
            nodes.append(y)
        for outs in pending:
            succ.append(sorted(index[y] for y in outs))
        frontier = layer
    return KohnertPoset(nodes, succ)


def minimal_elements(p: KohnertPoset) -> list[Diagram]:
    return p.minimal_elements()


def hasse(p: Poset) -> list[tuple]:
    return p.cover_edges()


def is_bounded(p: Poset) -> bool:
    return p.is_bounded()


def is_ranked(p: Poset) -> RankCertificate:
    return p.rank_certificate()


def order_leq(p: Poset, a, b) -> bool:
    return p.leq(a, b)


def interval(p: Poset, a, b) -> Poset:
    return p.interval(a, b)


def maximal_chain_lengths(p: Poset, cap: Optional[int] = None) -> set[int]:
    return p.maximal_chain_lengths() if cap is None else p.maximal_chain_lengths(cap)


def b_of(p: KohnertPoset) -> int:
    return p.b_value()


@dataclass
class AnalysisReport:
    node_count: Optional[int]
    min_count: int
    bounded: bool
    ranked: bool
    b_value: int
    rank_certificate: Optional[RankCertificate] = None
    minimals: Optional[list] = None
    family: str = "generic"
    normalized: bool = False
    # when ranked by a closed form: rank(D) = rowsum(D) - rank_offset
    rank_offset: Optional[int] = None
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def analyze(d0: Diagram, node_cap: Optional[int] = None, max_coord: int = DEFAULT_MAX_COORD) -> AnalysisReport:
    """Brute-force report: enumerate KD(d0) and decide everything exactly."""
    nd = normalize(d0)
    p = kd_closure(nd, node_cap=node_cap, max_coord=max_coord)
    mins = p.minimal_elements()
    cert = p.rank_certificate()
    return AnalysisReport(
        node_count=len(p),
        min_count=len(mins),
        bounded=len(mins) == 1,
        ranked=cert.ranked,
        b_value=p.b_value(),
        rank_certificate=cert,
        minimals=sorted(mins),
        normalized=nd != d0,
    )
