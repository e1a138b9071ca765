"""Slow, obviously-correct reference implementations used only by the tests.

Everything works on frozensets of (row, col) tuples and shares no code with
the package under test.
"""

from collections import deque
from itertools import combinations

import networkx as nx


def move(cells, r):
    """Kohnert move straight from the definition."""
    row = [c for (rr, c) in cells if rr == r]
    if not row:
        return cells
    c = max(row)
    for target in range(r - 1, 0, -1):
        if (target, c) not in cells:
            return (cells - {(r, c)}) | {(target, c)}
    return cells


def closure(cells):
    cells = frozenset(cells)
    seen = {cells}
    edges = set()
    queue = deque([cells])
    while queue:
        d = queue.popleft()
        for r in {rr for rr, _ in d}:
            e = frozenset(move(d, r))
            if e != d:
                edges.add((d, e))
                if e not in seen:
                    seen.add(e)
                    queue.append(e)
    return seen, edges


def move_graph(cells):
    nodes, edges = closure(cells)
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    g.add_edges_from(edges)
    return g


def hasse(cells):
    return nx.transitive_reduction(move_graph(cells))


def minimals(cells):
    g = move_graph(cells)
    return {d for d in g if g.out_degree(d) == 0}


def ranked(h):
    """A rank function exists iff every cycle of the undirected cover graph has zero signed length."""
    und = nx.Graph()
    und.add_nodes_from(h)
    und.add_edges_from(h.edges)
    for cycle in nx.cycle_basis(und):
        total = 0
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            total += 1 if h.has_edge(a, b) else -1
        if total:
            return False
    return True


def is_rank_labeling(h, labels):
    return all(labels[u] == labels[v] + 1 for u, v in h.edges)


def rowsum(cells):
    return sum(r for r, _ in cells)


def normalize(cells):
    cols = sorted({c for _, c in cells})
    pos = {c: i + 1 for i, c in enumerate(cols)}
    return frozenset((r, pos[c]) for r, c in cells)


def grid_corpus(rows, cols, max_cells=None):
    """Normalized subsets of the grid, by brute force over cell subsets."""
    box = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    limit = len(box) if max_cells is None else max_cells
    out = set()
    for k in range(limit + 1):
        for sub in combinations(box, k):
            out.add(normalize(sub))
    return out


def pure_by_brute_force(a):
    """Purity straight from the three defining patterns."""
    for i, j, k in combinations(range(len(a)), 3):
        x, y, z = a[i], a[j], a[k]
        if x < y < z or x < z < y or x + 1 < y == z:
            return False
    return True


def key_cells(a):
    return frozenset((i, j) for i, ai in enumerate(a, 1) for j in range(1, ai + 1))
