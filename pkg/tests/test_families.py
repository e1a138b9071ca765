from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from kohnert import Diagram, FamilyMismatchError, NotPureError, PreconditionError, ShapeError, kd_closure
from kohnert.families import analyze_auto, detect_family
from kohnert.families.checkered import (
    checkered,
    checkered_minimals,
    checkered_phi,
    checkered_phi_inv,
    checkered_report,
    diagram_from_er,
    dm,
    er_sequence,
    is_in_kd_dm,
    kd_dm_count,
    match_checkered,
    property_star_holds,
)
from kohnert.families.key import (
    forbidden_pair_pattern,
    forbidden_triple,
    is_pure,
    key_diagram,
    key_min,
    key_report,
    pure_decompose,
    row_swap_member,
)
from kohnert.families.one_column import is_one_per_column, one_per_column_report
from kohnert.families.two_row import (
    two_row_b,
    two_row_is_minimal,
    two_row_min_count,
    two_row_profile,
    two_row_report,
)

import oracle


def two_row(r1, cols1, r2, cols2):
    return Diagram([(r1, c) for c in cols1] + [(r2, c) for c in cols2])


FIG6 = two_row(2, (2, 3, 4, 6, 8, 11, 13), 4, (1, 4, 5, 7, 8, 9, 10, 12))

EXAMPLE_PURE = (25, 22, 18, 18, 17, 16, 14, 19, 13, 10, 8, 8, 7, 8, 8, 7, 8, 7, 5, 5, 6, 5, 6, 5, 4, 4, 6,
                2, 2, 2, 3, 3, 2, 3, 2, 3, 3)


# -- one cell per column ------------------------------------------------------


def test_one_per_column_predicate():
    assert is_one_per_column(Diagram([(2, 1), (3, 2), (2, 3)]))
    assert not is_one_per_column(Diagram([(1, 3), (2, 1), (2, 2), (3, 2)]))
    assert is_one_per_column(Diagram())


def test_one_per_column_reports():
    rep = one_per_column_report(Diagram([(2, 1), (3, 2), (2, 3)]))
    assert (rep.bounded, rep.ranked, rep.b_value, rep.min_count) == (True, True, 3, 1)
    assert rep.minimals == [Diagram([(1, 1), (1, 2), (1, 3)])]
    assert 7 - rep.rank_offset == 4
    assert one_per_column_report(Diagram([(1, 1)])).b_value == 1
    rep = one_per_column_report(Diagram([(5, 1)]))
    assert rep.minimals == [Diagram([(1, 1)])] and 5 - rep.rank_offset == 4
    with pytest.raises(FamilyMismatchError):
        one_per_column_report(Diagram([(1, 1), (2, 1)]))


# -- two rows ------------------------------------------------------------------


def test_figure_six_profile():
    p = two_row_profile(FIG6)
    assert (p.r1, p.r2) == (2, 4)
    assert p.both == {4, 8}
    assert p.only_r1 == {2, 3, 6, 11, 13} and p.only_r2 == {1, 5, 7, 9, 10, 12}
    assert p.left_r1 == {2, 3, 6} and p.right_r1 == {11, 13}
    assert p.left_r2 == {1, 5, 7} and p.right_r2 == {9, 10, 12}


def test_figure_six_closed_forms():
    assert two_row_min_count(FIG6) == 4
    assert two_row_b(FIG6) == 20
    rep = two_row_report(FIG6)
    assert not rep.bounded and not rep.ranked


def test_figure_six_minimals_by_brute_force():
    p = kd_closure(FIG6)
    mins = p.minimal_elements()
    assert len(mins) == 4 and p.b_value() == 20
    assert all(two_row_is_minimal(FIG6, m) for m in mins)
    assert not two_row_is_minimal(FIG6, FIG6)


def test_two_row_small_cases():
    p = two_row_profile(two_row(1, (1,), 2, (2,)))
    assert not p.both and not p.left_r1 and p.right_r1 == {1} and p.right_r2 == {2}
    p = two_row_profile(two_row(2, (1,), 3, (1,)))
    assert p.both == {1} and not (p.only_r1 | p.only_r2)
    assert two_row_min_count(two_row(2, (1,), 3, (2,))) == 1
    assert two_row_b(two_row(1, (1, 2), 3, (3,))) == 3
    assert two_row_b(two_row(2, (1,), 3, (1,))) == 3
    rep = two_row_report(two_row(1, (1, 2, 3), 4, (2,)))
    assert rep.bounded and rep.ranked
    rep = two_row_report(two_row(2, (1, 2), 3, (1, 2)))
    assert rep.bounded and not rep.ranked
    assert not kd_closure(two_row(2, (1, 2), 3, (1, 2))).is_ranked()
    with pytest.raises(FamilyMismatchError):
        two_row_profile(Diagram([(1, 1)]))


def test_two_row_minimal_rejects_bad_left_order():
    # left single-cell columns of row r1 must sit weakly decreasing: heights (1, 2) fail
    d0 = two_row(2, (1, 2, 3), 3, (3,))
    bad = Diagram([(1, 1), (2, 2), (1, 3), (2, 3)])
    good = Diagram([(2, 1), (1, 2), (1, 3), (2, 3)])
    mins = set(kd_closure(d0).minimal_elements())
    assert bad not in kd_closure(d0)
    assert not two_row_is_minimal(d0, bad)
    assert good in mins and two_row_is_minimal(d0, good)


def test_two_row_ranked_not_bounded():
    # the closed forms and brute force agree: ranked with two minimal elements
    d0 = two_row(2, (1, 2), 3, (2,))
    rep = two_row_report(d0)
    p = kd_closure(d0)
    assert rep.ranked and p.is_ranked()
    assert rep.min_count == 2 == len(p.minimal_elements())


# -- key diagrams -----------------------------------------------------------------


def test_key_diagram_examples():
    assert key_diagram((0, 0, 0)) == Diagram()
    assert key_diagram((0, 3, 4, 2, 3)) == Diagram(
        [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3)]
    )
    assert key_diagram((0, 2, 2)) == dm(2)
    assert key_min((0, 3, 4, 2, 3)) == key_diagram((4, 3, 3, 2, 0))
    assert key_min((3, 1)) == key_diagram((3, 1))
    assert key_min((0, 2)) == Diagram([(1, 1), (1, 2)])
    with pytest.raises(PreconditionError):
        key_diagram((1, -1))


def test_purity_examples():
    assert is_pure(EXAMPLE_PURE)
    assert not is_pure((0, 1, 2))
    assert not is_pure((0, 2, 1))
    assert forbidden_triple((0, 2, 1)) == (1, 2, 3)
    assert forbidden_pair_pattern((0, 2, 1)) == (1, 2, 3)
    assert is_pure((1, 2, 2))
    assert is_pure(()) and is_pure((4,))


def test_decomposition_of_worked_example():
    dec = pure_decompose(EXAMPLE_PURE)
    assert dec.compositions() == [
        (25, 22, 18, 18, 17, 16, 14, 19),
        (13, 10, 8, 8),
        (7, 8, 8, 7, 8, 7),
        (5, 5, 6, 5, 6, 5, 4, 4, 6),
        (2, 2, 2, 3, 3, 2, 3, 2, 3, 3),
    ]
    assert dec.types() == ["iii", "i", "ii", "iv", "ii"]
    assert dec.is_valid_for(EXAMPLE_PURE)


def test_decomposition_small_cases():
    assert pure_decompose((5, 3, 1)).parts == (((5, 3, 1), "i"),)
    assert pure_decompose((2, 3, 2, 3)).parts == (((2, 3, 2, 3), "ii"),)
    # a prefix entry as large as the ascent top splits off a decreasing block first
    assert pure_decompose((3, 2, 3)).types() == ["i", "ii"]
    assert pure_decompose(()).parts == ()
    with pytest.raises(NotPureError):
        pure_decompose((0, 1, 2))


def test_key_reports():
    rep = key_report((0, 3, 4, 2, 3))
    assert rep.bounded and not rep.ranked and rep.b_value == 27
    rep = key_report((2, 2))
    assert rep.ranked and rep.b_value == 6 and rep.rank_offset == 6
    rep = key_report((1, 0))
    assert rep.bounded and rep.ranked and rep.b_value == 1


def test_row_swap():
    assert row_swap_member((1, 3), 1, 2) == key_diagram((3, 1))
    assert row_swap_member((0, 3, 4, 2, 3), 1, 2) == key_diagram((3, 0, 4, 2, 3))
    assert key_diagram((3, 1)) in kd_closure(key_diagram((1, 3)))
    with pytest.raises(PreconditionError):
        row_swap_member((3, 1), 1, 2)
    with pytest.raises(PreconditionError):
        row_swap_member((1, 3), 2, 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 5), max_size=7))
def test_purity_scans_and_decomposition(a):
    a = tuple(a)
    assert is_pure(a) == oracle.pure_by_brute_force(a)
    assert (forbidden_triple(a) is None) == (forbidden_pair_pattern(a) is None)
    if is_pure(a):
        dec = pure_decompose(a)
        assert dec.is_valid_for(a)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_key_against_brute_force(a):
    a = tuple(a)
    cells = oracle.key_cells(a)
    mins = oracle.minimals(cells)
    assert mins == {frozenset(key_min(a).cells)}
    assert oracle.ranked(oracle.hasse(cells)) == is_pure(a)


# -- checkered ----------------------------------------------------------------------


def test_checkered_constructors():
    assert checkered(3, 1) == Diagram([(1, 1), (1, 3), (3, 1), (3, 3), (2, 2)])
    assert checkered(1, 2) == Diagram()
    assert checkered(2, 1) == Diagram([(1, 1), (2, 2)])
    assert checkered(2, 2) == Diagram([(1, 2), (2, 1)])
    assert match_checkered(checkered(5, 2)) == (5, 2)
    assert match_checkered(Diagram([(1, 1), (1, 2)])) is None
    with pytest.raises(PreconditionError):
        checkered(0, 1)
    with pytest.raises(PreconditionError):
        checkered(3, 3)


def test_er_sequences():
    assert er_sequence(dm(3), 3) == (1, 1, 1)
    assert er_sequence(Diagram([(1, 1)]), 1) == (2,)
    assert er_sequence(Diagram([(1, 1), (2, 1), (1, 2), (3, 2)]), 2) == (3, 2)
    assert is_in_kd_dm(diagram_from_er((1, 2, 2), 3), 3)
    assert not is_in_kd_dm(diagram_from_er((3, 2), 2), 2)
    assert is_in_kd_dm(dm(2), 2)
    with pytest.raises(ShapeError):
        er_sequence(Diagram([(1, 1)]), 2)
    with pytest.raises(ShapeError):
        er_sequence(Diagram([(1, 1), (4, 1)]), 2)


def test_kd_dm_count():
    assert [kd_dm_count(m) for m in (1, 2, 3)] == [2, 6, 20]


def test_checkered_reports():
    rep = checkered_report(3, 1)
    assert (rep.min_count, rep.bounded, rep.ranked) == (2, False, True)
    rep = checkered_report(4, 1)
    assert (rep.min_count, rep.bounded, rep.ranked) == (1, True, False)
    rep = checkered_report(5, 2)
    assert (rep.min_count, rep.bounded, rep.ranked) == (6, False, False)
    rep = checkered_report(1, 2)
    assert rep.bounded and rep.ranked and rep.min_count == 1 and rep.notes


@pytest.mark.parametrize("n,v", [(n, v) for n in range(1, 6) for v in (1, 2)])
def test_checkered_minimals_and_b_by_brute_force(n, v):
    p = kd_closure(checkered(n, v))
    assert sorted(p.minimal_elements()) == checkered_minimals(n, v)
    assert p.b_value() == checkered_report(n, v).b_value


def test_phi_examples():
    assert checkered_phi(Diagram([(1, 1)]), 1, 1) == Diagram()
    assert checkered_phi_inv(Diagram(), 1, 1) == Diagram([(1, 1)])
    for v in (1, 2):
        mins = kd_closure(checkered(5, v)).minimal_elements()
        images = {checkered_phi(t, 5, v) for t in mins}
        assert images == set(kd_closure(dm(2)).nodes)
        for t in mins:
            assert checkered_phi_inv(checkered_phi(t, 5, v), 5, v) == t


def test_phi_preconditions():
    with pytest.raises(PreconditionError):
        checkered_phi(checkered(5, 1), 5, 1)  # not minimal
    with pytest.raises(PreconditionError):
        checkered_phi(checkered(4, 1), 4, 1)  # even n
    with pytest.raises(PreconditionError):
        checkered_phi_inv(diagram_from_er((3, 2), 2), 5, 1)


def test_property_star():
    assert property_star_holds(checkered(5, 1), 5)
    assert property_star_holds(Diagram([(2, 1), (1, 3)]), 3)
    assert not property_star_holds(Diagram([(1, 1)]), 3)
    with pytest.raises(PreconditionError):
        property_star_holds(checkered(4, 1), 4)


# -- dispatch --------------------------------------------------------------------------


def test_family_detection_order():
    assert detect_family(Diagram([(2, 1), (3, 2), (2, 3)])) == "one-col"
    assert detect_family(two_row(1, (1, 2), 2, (1,))) == "two-row"
    assert detect_family(key_diagram((1, 3, 2))) == "key"
    assert detect_family(checkered(4, 2)) == "checkered"
    assert detect_family(Diagram([(1, 3), (2, 1), (2, 2), (3, 2)])) == "generic"


@pytest.mark.parametrize(
    "d",
    [
        Diagram([(2, 1), (3, 2), (2, 3)]),
        two_row(2, (1, 2), 3, (2,)),
        key_diagram((0, 2, 1, 2)),
        checkered(4, 1),
        checkered(3, 2),
        Diagram([(1, 3), (2, 1), (2, 2), (3, 2)]),
    ],
)
def test_closed_forms_agree_with_generic(d):
    fast = analyze_auto(d)
    slow = analyze_auto(d, force_generic=True)
    assert (fast.min_count, fast.bounded, fast.ranked, fast.b_value) == (
        slow.min_count, slow.bounded, slow.ranked, slow.b_value)


def test_analysis_normalizes_and_says_so():
    rep = analyze_auto(Diagram([(2, 2), (3, 4)]))
    assert rep.normalized and rep.notes
    assert not analyze_auto(Diagram([(1, 1)])).normalized
