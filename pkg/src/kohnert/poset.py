"""Finite posets given by a cover DAG, with rankedness and chain analysis.

Edges are stored top-down: ``down[i]`` lists the elements covered by
element ``i``.  Everything here works on integer indices; elements are only
used at the API boundary.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Any, Hashable, Iterable, Optional, Sequence

from .errors import PreconditionError, ResourceLimitError, UnknownNodeError

DEFAULT_CHAIN_CAP = 10_000


def transitive_reduction(succ: Sequence[Sequence[int]], level: Sequence[int]) -> list[list[int]]:
    """Keep ``u -> v`` only if ``v`` is not reachable from ``u`` in two or more steps.

    ``level`` must strictly decrease along every edge; it bounds each search.
    """
    reduced = []
    for u, targets in enumerate(succ):
        if len(targets) < 2:
            reduced.append(list(targets))
            continue
        tset = set(targets)
        floor = min(level[v] for v in targets)
        implied = set()
        seen = set()
        stack = [x for w in targets for x in succ[w]]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            if x in tset:
                implied.add(x)
            if level[x] > floor:
                stack.extend(succ[x])
        reduced.append([v for v in targets if v not in implied])
    return reduced


def heights(down: Sequence[Sequence[int]]) -> list[int]:
    """Longest downward path length from each node (a strict potential)."""
    order = _topological(down)
    h = [0] * len(down)
    for u in order:  # sinks first
        if down[u]:
            h[u] = 1 + max(h[v] for v in down[u])
    return h


def _topological(down: Sequence[Sequence[int]]) -> list[int]:
    ts = TopologicalSorter({u: list(vs) for u, vs in enumerate(down)})
    try:
        return list(ts.static_order())
    except CycleError as exc:
        raise PreconditionError(f"relation contains a cycle: {exc.args[1]}") from None


@dataclass
class RankWitness:
    """Why no rank function exists.

    ``edge`` is the cover ``(upper, lower)`` where propagation hit a
    contradiction.  ``chains`` holds two saturated chains, top first, that
    share both endpoints but differ in length; it is filled whenever such a
    pair starts at a maximal element (always the case for Kohnert posets).
    """

    edge: tuple[Any, Any]
    chains: Optional[tuple[list, list]] = None


@dataclass
class RankCertificate:
    ranked: bool
    ranks: Optional[dict] = None
    witness: Optional[RankWitness] = None


def rank_propagation(down: Sequence[Sequence[int]]):
    """Return ``(ranks, None)`` or ``(None, (upper, lower))``.

    Each cover forces a rank difference of one; ranks are propagated over the
    undirected Hasse graph and every component is shifted to start at 0.
    """
    n = len(down)
    up = [[] for _ in range(n)]
    for u, vs in enumerate(down):
        for v in vs:
            up[v].append(u)
    rank = [None] * n
    for seed in range(n):
        if rank[seed] is not None:
            continue
        rank[seed] = 0
        comp = [seed]
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for y in down[x]:
                if rank[y] is None:
                    rank[y] = rank[x] - 1
                    comp.append(y)
                    queue.append(y)
                elif rank[y] != rank[x] - 1:
                    return None, (x, y)
            for y in up[x]:
                if rank[y] is None:
                    rank[y] = rank[x] + 1
                    comp.append(y)
                    queue.append(y)
                elif rank[y] != rank[x] + 1:
                    return None, (y, x)
        low = min(rank[i] for i in comp)
        for i in comp:
            rank[i] -= low
    return rank, None


def unequal_chains(down: Sequence[Sequence[int]], tops: Iterable[int]):
    """Two saturated chains from a common top to a common node with different lengths."""
    order = _topological(down)[::-1]  # sources first
    for top in tops:
        short: dict[int, tuple[int, int]] = {top: (0, -1)}
        long: dict[int, tuple[int, int]] = {top: (0, -1)}
        for u in order:
            if u not in short:
                continue
            for v in down[u]:
                s, l = short[u][0] + 1, long[u][0] + 1
                if v not in short or s < short[v][0]:
                    short[v] = (s, u)
                if v not in long or l > long[v][0]:
                    long[v] = (l, u)
        for v in order:
            if v in short and short[v][0] != long[v][0]:
                return _trace(short, v), _trace(long, v)
    return None


def _trace(table, v):
    path = []
    while v != -1:
        path.append(v)
        v = table[v][1]
    return path[::-1]


def chain_lengths(down: Sequence[Sequence[int]], sources: Iterable[int]) -> set[int]:
    """Lengths (edge counts) of all maximal chains starting at ``sources``."""
    memo: dict[int, frozenset] = {}
    for u in _topological(down):  # sinks first
        if not down[u]:
            memo[u] = frozenset((0,))
        else:
            acc = set()
            for v in down[u]:
                acc.update(l + 1 for l in memo[v])
            memo[u] = frozenset(acc)
    out: set[int] = set()
    for s in sources:
        out |= memo[s]
    return out


class Poset:
    """A finite poset presented by a cover DAG over ``nodes``."""

    def __init__(self, nodes: Sequence[Hashable], down: Sequence[Sequence[int]] | None = None):
        self.nodes = list(nodes)
        self._index = {x: i for i, x in enumerate(self.nodes)}
        if len(self._index) != len(self.nodes):
            raise PreconditionError("duplicate poset elements")
        self._down = None if down is None else [list(vs) for vs in down]
        self._up = None

    @classmethod
    def from_relations(cls, relations: Iterable[tuple[Hashable, Hashable]], elements=()):
        """Build from pairs ``(x, y)`` meaning ``x < y``; redundant pairs are reduced away."""
        relations = list(relations)
        nodes: list = []
        seen = set()
        for x in list(elements) + [z for pair in relations for z in pair]:
            if x not in seen:
                seen.add(x)
                nodes.append(x)
        index = {x: i for i, x in enumerate(nodes)}
        succ = [set() for _ in nodes]
        for lo, hi in relations:
            if lo == hi:
                continue
            succ[index[hi]].add(index[lo])
        succ = [sorted(s) for s in succ]
        down = transitive_reduction(succ, heights(succ))
        return cls(nodes, down)

    # -- structure ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownNodeError(f"{x!r} is not an element of this poset") from None

    @property
    def down(self) -> list[list[int]]:
        if self._down is None:
            self._down = self._compute_covers()
        return self._down

    @property
    def up(self) -> list[list[int]]:
        if self._up is None:
            up = [[] for _ in self.nodes]
            for u, vs in enumerate(self.down):
                for v in vs:
                    up[v].append(u)
            self._up = up
        return self._up

    def _compute_covers(self) -> list[list[int]]:
        raise NotImplementedError

    def cover_edges(self) -> list[tuple[Any, Any]]:
        """Cover pairs ``(upper, lower)``."""
        return [(self.nodes[u], self.nodes[v]) for u, vs in enumerate(self.down) for v in vs]

    def minimal_elements(self) -> list:
        return [self.nodes[i] for i, vs in enumerate(self.down) if not vs]

    def maximal_elements(self) -> list:
        return [self.nodes[i] for i, us in enumerate(self.up) if not us]

    def is_bounded(self) -> bool:
        return len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    def leq(self, a, b) -> bool:
        """``a <= b``."""
        ia, ib = self.index(a), self.index(b)
        return ia in self._below(ib)

    def _below(self, i: int) -> set[int]:
        seen = {i}
        stack = [i]
        while stack:
            x = stack.pop()
            for y in self.down[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def _above(self, i: int) -> set[int]:
        seen = {i}
        stack = [i]
        while stack:
            x = stack.pop()
            for y in self.up[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def interval_indices(self, a, b) -> list[int]:
        ia, ib = self.index(a), self.index(b)
        below = self._below(ib)
        if ia not in below:
            raise PreconditionError(f"{a!r} is not below {b!r}")
        return sorted(below & self._above(ia))

    def interval(self, a, b) -> "Poset":
        keep = self.interval_indices(a, b)
        pos = {i: k for k, i in enumerate(keep)}
        down = [[pos[v] for v in self.down[i] if v in pos] for i in keep]
        return Poset([self.nodes[i] for i in keep], down)

    # -- ranks and chains -----------------------------------------------

    def rank_certificate(self) -> RankCertificate:
        ranks, bad = rank_propagation(self.down)
        if ranks is not None:
            return RankCertificate(True, {x: ranks[i] for i, x in enumerate(self.nodes)})
        tops = [i for i, us in enumerate(self.up) if not us]
        pair = unequal_chains(self.down, tops)
        chains = None
        if pair is not None:
            chains = tuple([self.nodes[i] for i in c] for c in pair)
        edge = (self.nodes[bad[0]], self.nodes[bad[1]])
        return RankCertificate(False, None, RankWitness(edge, chains))

    def is_ranked(self) -> bool:
        return self.rank_certificate().ranked

    def maximal_chain_lengths(self, cap: int = DEFAULT_CHAIN_CAP) -> set[int]:
        if len(self.nodes) > cap:
            raise ResourceLimitError(f"{len(self.nodes)} nodes exceed the chain-enumeration cap {cap}")
        tops = [i for i, us in enumerate(self.up) if not us]
        return chain_lengths(self.down, tops)

    def is_rank_labeling(self, labels: dict) -> bool:
        """True if ``labels`` drops by exactly one across every cover."""
        return all(labels[u] == labels[v] + 1 for u, v in self.cover_edges())
