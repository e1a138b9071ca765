"""Brute-force cross-checks of the closed-form results over exhaustive corpora.

Each claim id maps to a checker that walks a corpus, compares a closed form
(or structural statement) with what enumeration of KD(D0) shows, and
records every mismatch.  Sweeps never stop early.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterator, Optional

from .closure import KohnertPoset, kd_closure
from .diagram import Diagram
from .errors import BoundExceededError, PreconditionError
from .families.checkered import (
    checkered,
    checkered_phi,
    checkered_phi_inv,
    checkered_report,
    dm,
    er_sequence,
    is_in_kd_dm,
    kd_dm_count,
    kd_dm_members,
    match_checkered,
    property_star_holds,
)
from .families.key import (
    composition_of,
    forbidden_pair_pattern,
    forbidden_triple,
    is_pure,
    key_diagram,
    key_min,
    pure_decompose,
    row_swap_member,
)
from .families.one_column import is_one_per_column, one_per_column_min, one_per_column_report
from .families.two_row import (
    is_two_row,
    two_row_b,
    two_row_is_minimal,
    two_row_min_count,
    two_row_profile,
    two_row_report,
)
from .io import render_pairs
from .obstruction import scan_closure_for_obstruction
from .polynomial import is_multiplicity_free, kohnert_polynomial

GRID_GUARD = 20
COMPOSITION_GUARD = 100_000
CHECKERED_GUARD = 6
DM_GUARD = 6

FALSIFIER = Diagram([(2, 1), (3, 1), (1, 2), (2, 2)])


@dataclass(frozen=True)
class CorpusSpec:
    """Bounds for a sweep.  Grid fields drive diagram corpora; the rest drive
    composition and checkered parameter grids."""

    max_rows: int = 3
    max_cols: int = 4
    max_cells: Optional[int] = None
    family: Optional[str] = None
    max_entry: int = 3
    length: int = 4
    max_n: int = 5
    max_m: int = 3
    allow_large: bool = False

    def __post_init__(self):
        for name in ("max_rows", "max_cols", "max_entry", "length", "max_n", "max_m"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be positive")
        if self.max_cells is not None and self.max_cells < 0:
            raise PreconditionError("max_cells must be non-negative")


@dataclass
class VerifyOutcome:
    claim: str
    instances: int = 0
    failures: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, expected, actual) -> None:
        self.failures.append((instance, expected, actual))

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "instances": self.instances,
            "failures": [{"instance": str(i), "expected": _plain(e), "actual": _plain(a)} for i, e, a in self.failures],
            "gaps": [str(g) for g in self.gaps],
            "data": {str(k): _plain(v) for k, v in self.data.items()},
        }


def _plain(v):
    if isinstance(v, Diagram):
        return render_pairs(v)
    if isinstance(v, (list, tuple, set, frozenset)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return v


# -- corpora ----------------------------------------------------------------


def _guard_grid(spec: CorpusSpec) -> None:
    if spec.max_rows * spec.max_cols > GRID_GUARD and not spec.allow_large:
        raise BoundExceededError(
            f"{spec.max_rows}x{spec.max_cols} grid exceeds the {GRID_GUARD}-cell enumeration guard"
        )


def _family_test(family: Optional[str]) -> Callable[[Diagram], bool]:
    tests = {
        None: lambda d: True,
        "generic": lambda d: True,
        "one-col": is_one_per_column,
        "two-row": is_two_row,
        "key": lambda d: composition_of(d) is not None,
        "checkered": lambda d: match_checkered(d) is not None,
    }
    if family not in tests:
        raise PreconditionError(f"unknown family filter {family!r}")
    return tests[family]


def enumerate_corpus(spec: CorpusSpec) -> Iterator[Diagram]:
    """Every normalized diagram fitting in the grid, in canonical order."""
    _guard_grid(spec)
    R, C = spec.max_rows, spec.max_cols
    limit = spec.max_cells if spec.max_cells is not None else R * C
    keep = _family_test(spec.family)
    col_mask = (1 << R) - 1
    seen = set()
    for mask in range(1 << (R * C)):
        if mask.bit_count() > limit:
            continue
        cols = tuple(m for m in ((mask >> (k * R)) & col_mask for k in range(C)) if m)
        seen.add(cols)
    out = [Diagram.from_columns(cols) for cols in seen]
    out.sort()
    return (d for d in out if keep(d))


def one_column_corpus(max_rows: int, max_cols: int) -> Iterator[Diagram]:
    for k in range(max_cols + 1):
        for rows in product(range(1, max_rows + 1), repeat=k):
            yield Diagram((r, c) for c, r in enumerate(rows, 1))


def two_row_corpus(max_rows: int, max_cols: int) -> Iterator[Diagram]:
    """Normalized diagrams with exactly two nonempty rows, generated column by column."""
    for r1, r2 in combinations(range(1, max_rows + 1), 2):
        for k in range(1, max_cols + 1):
            for states in product((1, 2, 3), repeat=k):
                if all(s == 1 for s in states) or all(s == 2 for s in states):
                    continue
                bits = {1: 1 << (r1 - 1), 2: 1 << (r2 - 1), 3: (1 << (r1 - 1)) | (1 << (r2 - 1))}
                yield Diagram.from_columns(bits[s] for s in states)


def composition_corpus(spec: CorpusSpec) -> Iterator[tuple[int, ...]]:
    if (spec.max_entry + 1) ** spec.length > COMPOSITION_GUARD and not spec.allow_large:
        raise BoundExceededError("composition grid exceeds the enumeration guard")
    return product(range(spec.max_entry + 1), repeat=spec.length)


def checkered_grid(spec: CorpusSpec, skip_empty: bool = True):
    if spec.max_n > CHECKERED_GUARD and not spec.allow_large:
        raise BoundExceededError(f"checkered n above {CHECKERED_GUARD} is not desk scale")
    for n in range(1, spec.max_n + 1):
        for v in (1, 2):
            if skip_empty and n == 1 and v == 2:
                continue
            yield n, v


@lru_cache(maxsize=20_000)
def _closure(d: Diagram) -> KohnertPoset:
    return kd_closure(d)


# -- generic claims -----------------------------------------------------------


def _decreasing_columns(spec, out):
    for d in enumerate_corpus(spec):
        cc = d.column_counts()
        if all(x >= y for x, y in zip(cc, cc[1:])):
            out.instances += 1
            if not _closure(d).is_bounded():
                out.fail(d, True, False)


def _descendants(p: KohnertPoset) -> list[int]:
    """Bitset of nodes weakly below each node (indices follow BFS order)."""
    n = len(p)
    below = [0] * n
    for u in range(n - 1, -1, -1):  # BFS order: successors come later
        acc = 1 << u
        for v in p.move_succ[u]:
            acc |= below[v]
        below[u] = acc
    return below


def _interval_agreement(spec, out):
    for d0 in enumerate_corpus(spec):
        p = _closure(d0)
        out.instances += 1
        below = _descendants(p)
        n = len(p)
        above = [0] * n
        for u in range(n):
            b = below[u]
            while b:
                low = b & -b
                above[low.bit_length() - 1] |= 1 << u
                b ^= low
        R = max(x.num_rows for x in p.nodes)
        C = max((x.num_cols for x in p.nodes), default=0)
        for i in range(n):
            for j in range(n):
                if i == j or not below[i] >> j & 1:
                    continue
                members = [p.nodes[k] for k in range(n) if (below[i] & above[j]) >> k & 1]
                d1, d2 = p.nodes[i], p.nodes[j]
                for c in range(1, C + 1):
                    m1 = d1.columns[c - 1] if c <= d1.num_cols else 0
                    m2 = d2.columns[c - 1] if c <= d2.num_cols else 0
                    for r in range(1, R + 1):
                        for part, sel in (("above", lambda m: m >> (r - 1)), ("below", lambda m: m & ((1 << r) - 1))):
                            if sel(m1) != sel(m2):
                                continue
                            for x in members:
                                mx = x.columns[c - 1] if c <= x.num_cols else 0
                                if sel(mx) != sel(m1):
                                    out.fail((d0, d1, d2, c, r, part), sel(m1), sel(mx))


def _soundness(spec, out):
    for d in enumerate_corpus(spec):
        p = _closure(d)
        out.instances += 1
        w = scan_closure_for_obstruction(d, poset=p)
        if w is not None:
            if not w.validate():
                out.fail(d, "self-validating witness", w.to_dict())
            if p.is_ranked():
                out.fail(d, "not ranked", "ranked")


def _chain_criterion(spec, out):
    for d in enumerate_corpus(spec):
        p = _closure(d)
        if not p.is_bounded():
            continue
        out.instances += 1
        single = len(p.maximal_chain_lengths(cap=len(p))) == 1
        if single != p.is_ranked():
            out.fail(d, p.is_ranked(), single)


# -- one cell per column -----------------------------------------------------


def _one_col(spec, out):
    for d in one_column_corpus(spec.max_rows, spec.max_cols):
        out.instances += 1
        p = _closure(d)
        rep = one_per_column_report(d)
        mins = p.minimal_elements()
        if mins != [one_per_column_min(d)]:
            out.fail(d, [one_per_column_min(d)], mins)
        if not p.is_ranked():
            out.fail(d, "ranked", "not ranked")
        labels = {x: x.rowsum() - rep.b_value for x in p.nodes}
        if not p.is_rank_labeling(labels) or p.b_value() != rep.b_value:
            out.fail(d, "rowsum - b labels every cover", "labeling fails")


# -- two rows ----------------------------------------------------------------


def _two_row_sweep(spec, out, check):
    for d in two_row_corpus(spec.max_rows, spec.max_cols):
        out.instances += 1
        check(d, _closure(d), out)


def _tr_min_count(d, p, out):
    got = len(p.minimal_elements())
    if got != two_row_min_count(d):
        out.fail(d, two_row_min_count(d), got)


def _tr_bounded(d, p, out):
    if two_row_report(d).bounded != p.is_bounded():
        out.fail(d, two_row_report(d).bounded, p.is_bounded())


def _tr_ranked(d, p, out):
    if two_row_report(d).ranked != p.is_ranked():
        out.fail(d, two_row_report(d).ranked, p.is_ranked())
    elif p.is_ranked():
        b = two_row_b(d)
        if not p.is_rank_labeling({x: x.rowsum() - b for x in p.nodes}):
            out.fail(d, "rowsum - b labels every cover", "labeling fails")


def _tr_b(d, p, out):
    if two_row_b(d) != p.b_value():
        out.fail(d, two_row_b(d), p.b_value())


def _tr_ranked_bounded(d, p, out):
    if p.is_ranked() and not p.is_bounded():
        out.fail(d, "bounded", "not bounded")


def _tr_minimal(d, p, out):
    mins = set(p.minimal_elements())
    for x in p.nodes:
        if two_row_is_minimal(d, x) != (x in mins):
            out.fail((d, x), x in mins, not x in mins)


def _tr_base(d, p, out):
    prof = two_row_profile(d)
    if prof.r1 == 1:
        return
    target = Diagram([(2, c) for c in prof.cols_r1] + [(3, c) for c in prof.cols_r2])
    if target not in p:
        out.fail(d, target, "absent")


# -- key diagrams ------------------------------------------------------------


def _key_sweep(spec, out, check):
    for a in composition_corpus(spec):
        out.instances += 1
        check(a, out)


def _key_bounded(a, out):
    mins = _closure(key_diagram(a)).minimal_elements()
    if mins != [key_min(a)]:
        out.fail(a, [key_min(a)], mins)


def _key_ranked(a, out):
    ranked = _closure(key_diagram(a)).is_ranked()
    if ranked != is_pure(a):
        out.fail(a, is_pure(a), ranked)


def _key_rank_function(a, out):
    if not is_pure(a):
        return
    p = _closure(key_diagram(a))
    b = key_min(a).rowsum()
    labels = {x: x.rowsum() - b for x in p.nodes}
    cert = p.rank_certificate()
    if not p.is_rank_labeling(labels) or cert.ranks != labels:
        out.fail(a, "rowsum - b equals the rank function", "mismatch")


def _key_consequences(a, out):
    if not is_pure(a):
        return
    n = len(a)
    for i, j in combinations(range(n), 2):
        gap = a[j] - a[i]
        later = a[j + 1:]
        if gap == 1 and any(x > a[j] for x in later):
            out.fail((a, i + 1, j + 1), f"entries after {j + 1} at most {a[j]}", later)
        if gap > 1 and any(x > a[i] for x in later):
            out.fail((a, i + 1, j + 1), f"entries after {j + 1} at most {a[i]}", later)


def _key_row_swap(a, out):
    p = _closure(key_diagram(a))
    for i, j in combinations(range(1, len(a) + 1), 2):
        if a[i - 1] < a[j - 1]:
            d = row_swap_member(a, i, j)
            if d not in p:
                out.fail((a, i, j), "member", "absent")


def _key_scans(a, out):
    if (forbidden_triple(a) is None) != (forbidden_pair_pattern(a) is None):
        out.fail(a, forbidden_triple(a), forbidden_pair_pattern(a))


def _key_decomposition(a, out):
    if is_pure(a):
        dec = pure_decompose(a)
        if not dec.is_valid_for(a):
            out.fail(a, "valid typed decomposition", dec.parts)


def _poly_mf(a, out):
    if is_pure(a):
        poly = kohnert_polynomial(key_diagram(a))
        if not is_multiplicity_free(poly):
            out.fail(a, "multiplicity free", str(poly))


def _poly_homogeneous(spec, out):
    for d in enumerate_corpus(spec):
        out.instances += 1
        degs = {sum(e) for e, _ in kohnert_polynomial(d).terms()}
        if degs != {len(d)}:
            out.fail(d, {len(d)}, degs)


# -- checkered ---------------------------------------------------------------


def _ch_sweep(spec, out, check, skip_empty=True):
    for n, v in checkered_grid(spec, skip_empty):
        out.instances += 1
        check(n, v, _closure(checkered(n, v)), out)


def _ch_ranked(n, v, p, out):
    if p.is_ranked() != checkered_report(n, v).ranked:
        out.fail((n, v), checkered_report(n, v).ranked, p.is_ranked())


def _ch_min_count(n, v, p, out):
    got = len(p.minimal_elements())
    if got != checkered_report(n, v).min_count:
        out.fail((n, v), checkered_report(n, v).min_count, got)


def _ch_bounded(n, v, p, out):
    if p.is_bounded() != checkered_report(n, v).bounded:
        out.fail((n, v), checkered_report(n, v).bounded, p.is_bounded())


def _ch_bijection(n, v, p, out):
    if n % 2 == 0:
        return
    m = n // 2
    mins = p.minimal_elements()
    images = set()
    for t in mins:
        d = checkered_phi(t, n, v)
        images.add(d)
        if checkered_phi_inv(d, n, v) != t:
            out.fail((n, v, t), t, checkered_phi_inv(d, n, v))
    target = set(_closure(dm(m)).nodes) if m else {Diagram()}
    if images != target:
        out.fail((n, v), sorted(target), sorted(images))


def _ch_star(n, v, p, out):
    if n % 2 == 0:
        return
    for t in p.nodes:
        if not property_star_holds(t, n):
            out.fail((n, v, t), True, False)


def _dm_count(spec, out):
    if spec.max_m > DM_GUARD and not spec.allow_large:
        raise BoundExceededError(f"m above {DM_GUARD} is not desk scale")
    counts = {}
    for m in range(1, spec.max_m + 1):
        out.instances += 1
        got = len(_closure(dm(m)))
        counts[m] = got
        if got != kd_dm_count(m):
            out.fail(m, kd_dm_count(m), got)
    out.data["counts"] = counts


def _dm_er(spec, out):
    if spec.max_m > DM_GUARD and not spec.allow_large:
        raise BoundExceededError(f"m above {DM_GUARD} is not desk scale")
    for m in range(1, spec.max_m + 1):
        out.instances += 1
        nodes = _closure(dm(m)).nodes
        seen = {er_sequence(t, m) for t in nodes}
        expected = set(product(range(1, m + 2), repeat=m))
        expected = {s for s in expected if all(x <= y for x, y in zip(s, s[1:]))}
        if seen != expected:
            out.fail(m, sorted(expected), sorted(seen))
        if not all(is_in_kd_dm(t, m) for t in nodes):
            out.fail(m, "every node passes is_in_kd_dm", "some node fails")
        if set(kd_dm_members(m)) != set(nodes):
            out.fail(m, "generated members equal the closure", "differ")


# -- falsifier and probe -------------------------------------------------------


def _falsifier(spec, out):
    p = _closure(FALSIFIER)
    out.instances = 1
    b = p.b_value()
    labels = {x: x.rowsum() - b for x in p.nodes}
    valid = p.is_rank_labeling(labels)
    out.data.update(b=b, ranked=p.is_ranked(), labeling_valid=valid, node_count=len(p))
    if valid:
        out.fail(FALSIFIER, "rowsum - b is not a rank labeling", "it is")


Runner = Callable[[CorpusSpec, VerifyOutcome], None]


def _each(sweep, check) -> Runner:
    return lambda spec, out: sweep(spec, out, check)


TWO_ROW_DEFAULT = CorpusSpec(max_rows=4, max_cols=6)
GRID_3x3 = CorpusSpec(max_rows=3, max_cols=3)

# id -> (description, default spec, runner)
CLAIMS: dict[str, tuple[str, CorpusSpec, Runner]] = {
    "decreasing-columns-bounded": ("weakly decreasing column counts imply bounded", CorpusSpec(), _decreasing_columns),
    "interval-column-agreement": ("column agreement above/below a row persists through intervals", GRID_3x3, _interval_agreement),
    "obstruction-soundness": ("a detected obstruction implies not ranked", CorpusSpec(), _soundness),
    "bounded-ranked-iff-equal-chains": ("bounded posets: ranked iff all maximal chains have one length", CorpusSpec(), _chain_criterion),
    "one-col-closed-form": ("one cell per column: bounded, ranked, rank = rowsum - |D|", CorpusSpec(), _one_col),
    "two-row-min-count": ("two rows: |Min| formula", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_min_count)),
    "two-row-bounded": ("two rows: bounded characterization", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_bounded)),
    "two-row-ranked": ("two rows: ranked characterization and rank function", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_ranked)),
    "two-row-b": ("two rows: b formula", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_b)),
    "two-row-ranked-implies-bounded": ("two rows: ranked implies bounded", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_ranked_bounded)),
    "two-row-minimal-test": ("two rows: structural test for minimal elements", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_minimal)),
    "two-row-lifted-base": ("two rows: rows lifted to 2 and 3 stay reachable", TWO_ROW_DEFAULT, _each(_two_row_sweep, _tr_base)),
    "key-unique-minimal": ("key diagrams: unique minimal is D(sort a)", CorpusSpec(), _each(_key_sweep, _key_bounded)),
    "key-ranked-iff-pure": ("key diagrams: ranked iff pure", CorpusSpec(), _each(_key_sweep, _key_ranked)),
    "key-rank-function": ("pure compositions: rank = rowsum - b", CorpusSpec(), _each(_key_sweep, _key_rank_function)),
    "key-pure-later-rows": ("pure compositions: bounds on later rows", CorpusSpec(max_entry=4, length=6), _each(_key_sweep, _key_consequences)),
    "key-row-swap": ("swapping an ascending pair of rows stays in the closure", CorpusSpec(), _each(_key_sweep, _key_row_swap)),
    "key-pure-scans-agree": ("three-pattern and two-pattern purity scans agree", CorpusSpec(max_entry=5, length=6), _each(_key_sweep, _key_scans)),
    "key-pure-decomposition": ("pure decomposition satisfies its invariants", CorpusSpec(max_entry=5, length=6), _each(_key_sweep, _key_decomposition)),
    "checkered-ranked": ("checkered: ranked iff n <= 3", CorpusSpec(), _each(_ch_sweep, _ch_ranked)),
    "checkered-min-count": ("checkered: |Min| is C(2m,m) or 1", CorpusSpec(), _each(_ch_sweep, _ch_min_count)),
    "checkered-bounded": ("checkered: bounded iff n = 1 (variant 1) or n even", CorpusSpec(), _each(_ch_sweep, _ch_bounded)),
    "dm-closure-size": ("|KD(D_m)| = C(2m,m)", CorpusSpec(), _dm_count),
    "dm-er-sequences": ("KD(D_m) is exactly the weakly increasing hole sequences", CorpusSpec(), _dm_er),
    "checkered-phi-bijection": ("phi is a bijection Min(Ch_n) -> KD(D_m)", CorpusSpec(), _each(_ch_sweep, _ch_bijection)),
    "checkered-property-star": ("property (*) on every closure node", CorpusSpec(), _each(_ch_sweep, _ch_star)),
    "poly-pure-multiplicity-free": ("pure compositions give multiplicity-free polynomials", CorpusSpec(), _each(_key_sweep, _poly_mf)),
    "poly-homogeneous": ("every monomial has degree |D0|", GRID_3x3, _poly_homogeneous),
    "rank-falsifier": ("rowsum - b is not a rank labeling in general", CorpusSpec(), _falsifier),
}


def claim_ids() -> list[str]:
    return list(CLAIMS)


def default_spec(claim: str) -> CorpusSpec:
    if claim not in CLAIMS:
        raise KeyError(claim)
    return CLAIMS[claim][1]


def check_claim(claim: str, spec: Optional[CorpusSpec] = None, **overrides) -> VerifyOutcome:
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim id {claim!r}")
    _, default, runner = CLAIMS[claim]
    spec = spec or default
    if overrides:
        spec = replace(spec, **overrides)
    out = VerifyOutcome(claim)
    runner(spec, out)
    return out


def obstruction_gap_probe(spec: Optional[CorpusSpec] = None) -> VerifyOutcome:
    """Diagrams whose closure is not ranked although no known obstruction appears in it.

    The falsifier diagram is always examined and reported under ``data``.
    """
    spec = spec or CorpusSpec()
    out = VerifyOutcome("obstruction-gap-probe")
    for d in enumerate_corpus(spec):
        out.instances += 1
        p = _closure(d)
        if not p.is_ranked() and scan_closure_for_obstruction(d, poset=p) is None:
            out.gaps.append(d)
    p = _closure(FALSIFIER)
    b = p.b_value()
    w = scan_closure_for_obstruction(FALSIFIER, poset=p)
    out.data["interesting"] = [{
        "diagram": FALSIFIER,
        "ranked": p.is_ranked(),
        "rowsum_minus_b_is_rank": p.is_rank_labeling({x: x.rowsum() - b for x in p.nodes}),
        "obstruction": w.to_dict() if w else None,
    }]
    return out
