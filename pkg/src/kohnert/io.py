"""Text formats for diagrams, plus JSON and DOT exporters.

Grid format: one line per row, highest row first, ``X`` for a cell and
``.`` for a gap; trailing dots may be omitted.  The last line is row 1.
Pair-list format: comma separated ``(row,col)`` tokens, optionally wrapped
in braces; ``{}`` is the empty diagram.
"""

from __future__ import annotations

import json
import re
from typing import Optional

from .closure import AnalysisReport, KohnertPoset
from .diagram import Diagram
from .errors import ParseError

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _locate(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def parse_pairs(text: str) -> Diagram:
    body = text.strip()
    if not body:
        raise ParseError("empty input", 1, 1)
    start = text.index(body[0])
    end = start + len(body)
    if body[0] == "{":
        if body[-1] != "}":
            raise ParseError("unbalanced '{'", *_locate(text, start))
        start, end = start + 1, end - 1
    cells = []
    pos = start
    expect_pair = True
    while True:
        while pos < end and text[pos].isspace():
            pos += 1
        if pos >= end:
            break
        if expect_pair:
            m = _PAIR.match(text, pos, end)
            if not m:
                raise ParseError(f"expected '(row,col)', found {text[pos]!r}", *_locate(text, pos))
            r, c = int(m.group(1)), int(m.group(2))
            if r < 1 or c < 1:
                raise ParseError(f"coordinates are 1-based, got ({r},{c})", *_locate(text, pos))
            cells.append((r, c))
            pos = m.end()
            expect_pair = False
        else:
            if text[pos] != ",":
                raise ParseError(f"expected ',', found {text[pos]!r}", *_locate(text, pos))
            pos += 1
            expect_pair = True
    if cells and expect_pair:
        raise ParseError("trailing ','", *_locate(text, end))
    if not cells and body not in ("{}",) and not body.startswith("{"):
        raise ParseError("no cells found", *_locate(text, start))
    return Diagram(cells)


def parse_grid(text: str) -> Diagram:
    lines = text.splitlines()
    # whitespace-only lines at either end carry no rows
    while lines and not lines[-1].strip():
        lines.pop()
    first = 0
    while first < len(lines) and not lines[first].strip():
        first += 1
    if first == len(lines):
        raise ParseError("empty input", 1, 1)
    rows = lines[first:]
    cells = []
    height = len(rows)
    for k, line in enumerate(rows):
        r = height - k
        for j, ch in enumerate(line.rstrip()):
            if ch in "Xx":
                cells.append((r, j + 1))
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r} in grid", first + k + 1, j + 1)
    return Diagram(cells)


def parse_json_diagram(text: str) -> Diagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if isinstance(data, dict):
        data = data.get("cells", data.get("diagram"))
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) and v >= 1 for v in p) for p in data
    ):
        raise ParseError("expected a list of [row, col] pairs with positive integers", 1, 1)
    return Diagram(tuple(p) for p in data)


def detect_format(text: str) -> str:
    s = text.lstrip()
    if s.startswith("[") or s.startswith('{"') or s.startswith("{\n") and '"' in s:
        return "json"
    if "(" in s or s.startswith("{"):
        return "pairs"
    return "grid"


def parse_diagram(text: str, fmt: str = "auto") -> Diagram:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "grid":
        return parse_grid(text)
    if fmt == "pairs":
        return parse_pairs(text)
    if fmt == "json":
        return parse_json_diagram(text)
    raise ValueError(f"unknown format {fmt!r}")


def parse_composition(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    if parts == [""]:
        return ()
    out = []
    for k, p in enumerate(parts, 1):
        if not re.fullmatch(r"\d+", p):
            raise ParseError(f"composition entry {k} is not a non-negative integer: {p!r}", 1, 1)
        out.append(int(p))
    return tuple(out)


def render_grid(d: Diagram) -> str:
    if not d.columns:
        return "."
    lines = []
    for r in range(d.num_rows, 0, -1):
        row = "".join("X" if (r, c) in d else "." for c in range(1, d.num_cols + 1))
        lines.append(row.rstrip(".") or ".")
    return "\n".join(lines)


def render_pairs(d: Diagram) -> str:
    if not d.columns:
        return "{}"
    return ",".join(f"({r},{c})" for r, c in sorted(d.cells))


def cells_json(d: Diagram) -> list[list[int]]:
    return [[r, c] for r, c in d.cells]


# -- exporters -------------------------------------------------------------


def closure_to_dict(p: KohnertPoset, with_nodes: bool = True) -> dict:
    out: dict = {"node_count": len(p), "root": cells_json(p.root)}
    if with_nodes:
        out["nodes"] = [cells_json(d) for d in p.nodes]
    return out


def hasse_to_dict(p: KohnertPoset) -> dict:
    idx = {d: i for i, d in enumerate(p.nodes)}
    cert = p.rank_certificate()
    out = {
        "nodes": [cells_json(d) for d in p.nodes],
        "edges": [[idx[u], idx[v]] for u, v in p.cover_edges()],
        "ranked": cert.ranked,
    }
    if cert.ranked:
        out["ranks"] = [cert.ranks[d] for d in p.nodes]
    return out


def to_dot(p: KohnertPoset, name: str = "kohnert") -> str:
    """Cover DAG, edges pointing down; ranked posets get one ``rank=same`` group per level."""
    idx = {d: i for i, d in enumerate(p.nodes)}
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
    for i, d in enumerate(p.nodes):
        lines.append(f'  n{i} [label="{render_pairs(d)}"];')
    for u, v in p.cover_edges():
        lines.append(f"  n{idx[u]} -> n{idx[v]};")
    cert = p.rank_certificate()
    if cert.ranked:
        levels: dict[int, list[int]] = {}
        for d, k in cert.ranks.items():
            levels.setdefault(k, []).append(idx[d])
        for k in sorted(levels, reverse=True):
            members = "; ".join(f"n{i}" for i in sorted(levels[k]))
            lines.append(f"  {{ rank=same; {members}; }}  // rank {k}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_to_dict(rep: AnalysisReport, include_ranks: bool = True) -> dict:
    out: dict = {
        "family": rep.family,
        "normalized": rep.normalized,
        "node_count": rep.node_count,
        "min_count": rep.min_count,
        "bounded": rep.bounded,
        "ranked": rep.ranked,
        "b_value": rep.b_value,
    }
    if rep.minimals is not None:
        out["minimals"] = [cells_json(d) for d in rep.minimals]
    if rep.rank_offset is not None:
        out["rank_rule"] = {"rowsum_minus": rep.rank_offset}
    cert = rep.rank_certificate
    if cert is not None:
        c: dict = {"ranked": cert.ranked}
        if cert.ranked and include_ranks:
            c["ranks"] = [{"diagram": cells_json(d), "rank": k} for d, k in sorted(cert.ranks.items())]
        if cert.witness is not None:
            w = cert.witness
            c["inconsistent_edge"] = [cells_json(w.edge[0]), cells_json(w.edge[1])]
            if w.chains is not None:
                c["chains"] = [[cells_json(d) for d in ch] for ch in w.chains]
        out["rank_certificate"] = c
    if rep.details:
        out["details"] = rep.details
    if rep.notes:
        out["notes"] = list(rep.notes)
    return out


def render_report(rep: AnalysisReport) -> str:
    yn = {True: "yes", False: "no"}
    lines = [
        f"family:     {rep.family}",
        f"nodes:      {rep.node_count if rep.node_count is not None else '(not enumerated)'}",
        f"minimals:   {rep.min_count}",
        f"bounded:    {yn[rep.bounded]}",
        f"ranked:     {yn[rep.ranked]}",
        f"b:          {rep.b_value}",
    ]
    if rep.rank_offset is not None:
        lines.append(f"rank rule:  rank(D) = rowsum(D) - {rep.rank_offset}")
    if rep.minimals is not None and len(rep.minimals) <= 20:
        for d in rep.minimals:
            lines.append(f"  min: {render_pairs(d)}")
    cert = rep.rank_certificate
    if cert is not None and cert.witness is not None:
        u, v = cert.witness.edge
        lines.append(f"conflict at cover {render_pairs(u)} -> {render_pairs(v)}")
        if cert.witness.chains:
            for ch in cert.witness.chains:
                lines.append(f"  chain of length {len(ch) - 1}: " + " > ".join(render_pairs(d) for d in ch))
    for key in ("pattern", "decomposition", "profile", "obstruction"):
        if key in rep.details:
            lines.append(f"{key}: {json.dumps(rep.details[key])}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj)


def load_text(path: Optional[str], stdin) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()
