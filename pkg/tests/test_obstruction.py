from itertools import product

from hypothesis import given, settings

from kohnert import Diagram, apply_sequence, kd_closure
from kohnert.families.checkered import checkered
from kohnert.families.key import key_diagram
from kohnert.obstruction import (
    cor_a_holds,
    cor_b_holds,
    detect_any,
    detect_cor,
    detect_thm1,
    detect_thm2,
    scan_closure_for_obstruction,
    thm1_holds,
    thm2_holds,
)

import oracle
from strategies import diagrams

# column 1 full on rows 2..4, (2,3) present, row 3 reaches right, holes at (1,1) and (1,3)
THM1_FIXTURE = Diagram([(2, 1), (3, 1), (4, 1), (2, 3), (3, 2), (1, 4)])
COR_A_FIXTURE = Diagram([(2, 1), (3, 1), (2, 2)])
COR_B_FIXTURE = Diagram([(2, 1), (3, 1), (1, 2), (3, 2)])


def test_thm1_fixture():
    assert thm1_holds(THM1_FIXTURE, r=2, rp=4, r1=1, r2=1, c=1, cp=3)
    w = detect_thm1(THM1_FIXTURE)
    assert w is not None and w.kind == "Thm1" and w.validate()
    assert not kd_closure(THM1_FIXTURE).is_ranked()


def test_thm1_conditions_fail_individually():
    base = set(THM1_FIXTURE.cells)
    args = dict(r=2, rp=4, r1=1, r2=1, c=1, cp=3)
    assert not thm1_holds(Diagram(base - {(3, 1)}), **args)  # (i) column gap
    assert not thm1_holds(Diagram(base | {(4, 2)}), **args)  # (ii) not rightmost
    assert not thm1_holds(Diagram(base - {(3, 2)}), **args)  # (iii) middle row stops at c
    assert not thm1_holds(Diagram(base | {(2, 2)}), **args)  # (iv) row r between c and c'
    assert not thm1_holds(Diagram(base | {(2, 5)}), **args)  # (iv) row r right of c'
    assert not thm1_holds(Diagram(base | {(1, 1)}), **args)  # (v) no hole below
    assert not thm1_holds(THM1_FIXTURE, **{**args, "r1": 2})  # r1 must be below r


def test_trivial_diagrams_have_no_witness():
    one = Diagram([(1, 1)])
    assert detect_thm1(one) is None and detect_thm2(one) is None and detect_cor(one) is None
    assert detect_thm2(Diagram([(1, 1), (2, 1)])) is None


def test_cor_a_fixture_is_also_thm1():
    w = detect_cor(COR_A_FIXTURE)
    assert w.kind == "CorA" and w.params == {"rs": 1, "c1": 1, "c2": 2}
    assert thm1_holds(COR_A_FIXTURE, r=2, rp=3, r1=1, r2=1, c=1, cp=2)
    assert detect_thm1(COR_A_FIXTURE) is not None


def test_cor_b_fixture_is_also_thm2():
    w = detect_cor(COR_B_FIXTURE)
    assert w.kind == "CorB" and w.params == {"rs": 1, "c1": 1, "c2": 2}
    w2 = detect_thm2(COR_B_FIXTURE)
    assert w2 is not None and w2.params["r"] == 1 and w2.params["rp"] == 3


def test_key_recipe_produces_cor_a():
    # one move at row 3 of D((0,1,2))
    d = apply_sequence(key_diagram((0, 1, 2)), [3])
    assert d == COR_A_FIXTURE
    assert detect_cor(d).kind == "CorA"


def test_two_row_recipe_produces_cor_b():
    d0 = Diagram([(2, 1), (2, 2), (3, 1), (3, 2)])
    d = apply_sequence(d0, [2])
    assert cor_b_holds(d, 1, 1, 2)
    assert detect_cor(d).kind == "CorB"


def test_checkered_move_produces_cor_b():
    d = apply_sequence(checkered(5, 1), [4])
    assert {(2, 4), (3, 4), (1, 5), (3, 5)} <= set(d.cells)
    assert cor_b_holds(d, 1, 4, 5)
    w = detect_cor(d)
    assert w is not None and w.validate()


def test_closure_scans():
    assert scan_closure_for_obstruction(checkered(4, 1)) is not None
    assert scan_closure_for_obstruction(Diagram([(2, 1), (3, 2), (2, 3)])) is None
    assert scan_closure_for_obstruction(key_diagram((2, 2))) is None


def test_witness_json():
    w = detect_cor(COR_A_FIXTURE)
    assert w.to_dict() == {"kind": "CorA", "params": {"rs": 1, "c1": 1, "c2": 2}, "diagram": [[2, 1], [3, 1], [2, 2]]}


@settings(max_examples=300, deadline=None)
@given(diagrams(max_row=4, max_col=4, max_size=8))
def test_specialisations(d):
    for rs, c1, c2 in product(range(1, 4), range(1, 5), range(1, 5)):
        if cor_a_holds(d, rs, c1, c2):
            assert thm1_holds(d, rs + 1, rs + 2, rs, rs, c1, c2)
        if cor_b_holds(d, rs, c1, c2):
            assert thm2_holds(d, rs, rs + 2, c1, c2)
    w = detect_any(d)
    if w is not None:
        assert w.validate()


@settings(max_examples=150, deadline=None)
@given(diagrams(max_row=4, max_col=3, max_size=6))
def test_soundness_against_oracle(d):
    w = scan_closure_for_obstruction(d)
    if w is not None:
        assert w.validate()
        assert w.diagram in kd_closure(d)
        assert not oracle.ranked(oracle.hasse(d.cells))
