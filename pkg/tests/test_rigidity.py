"""Rigidity classifiers and the non-rigidity witness search."""

import pytest

from srk import (
    Bracket,
    ClassSum,
    Quadric,
    QuadricDiagram,
    canonical_index,
    classify_og,
    expand,
    find_nonrigid_witness,
    og_rigid_a,
    og_rigid_b,
    og_rigid_class,
    validate_og,
    x_counts,
    z_counts,
)
from srk.errors import PositionOutOfRange, SearchBudgetExceeded


def test_counts():
    x = validate_og(3, 9, [1, 4], [1])
    assert x_counts(x) == (1,)
    assert z_counts(x) == (1, 0)


def test_rigid_a_examples():
    assert og_rigid_a(validate_og(2, 6, [1], [1]), 1).kind == "rigid"
    assert og_rigid_a(validate_og(3, 7, [2, 3], [0]), 2).kind == "rigid"
    v = og_rigid_a(validate_og(3, 7, [1, 2], [2]), 2)
    assert v.kind == "disputed" and v.note
    with pytest.raises(PositionOutOfRange):
        og_rigid_a(validate_og(2, 6, [1], [1]), 2)


def test_rigid_a_clauses():
    # consecutive-gap pattern with nothing between: not rigid
    assert og_rigid_a(validate_og(2, 8, [2, 4], []), 1).token() == "not_rigid:MT-1"
    # non-essential position reported as such
    assert og_rigid_a(validate_og(2, 8, [1, 2], []), 1).kind == "not_essential"


def test_rigid_b_examples():
    assert og_rigid_b(validate_og(2, 6, [1], [1]), 1).token() == "rigid:B-RIGID"
    assert og_rigid_b(validate_og(2, 9, [2], [3]), 1).kind == "not_rigid"
    assert og_rigid_b(validate_og(3, 7, [1, 2], [2]), 1).kind == "rigid"
    assert og_rigid_b(validate_og(2, 6, [2], [0]), 1).kind == "not_essential"


def test_rigid_b_contested_threshold_is_disputed():
    # x_1 sits exactly one above the arithmetic threshold at odd n;
    # the expansion of 100]00}00 concretely moves the flag element
    v = og_rigid_b(validate_og(2, 7, [2], [2]), 1)
    assert v.kind == "disputed"
    witness = QuadricDiagram(7, (Bracket(3),), (Quadric(5, 1),))
    assert expand(witness) == ClassSum.single(validate_og(2, 7, [2], [2]))


def test_rigid_b_vacuous_construction_is_disputed():
    # a_s = n/2 leaves no room for the deformation the arithmetic predicts
    assert og_rigid_b(validate_og(2, 6, [3], [1]), 1).kind == "disputed"


def test_rigid_class_examples():
    assert og_rigid_class(validate_og(2, 6, [1], [1])) == (True, True)
    assert og_rigid_class(validate_og(2, 9, [2], [3])) == (False, True)
    assert og_rigid_class(validate_og(3, 7, [2, 3], [0])) == (True, True)


def test_classify_report_shape():
    rep = classify_og(validate_og(3, 7, [1, 2], [2]))
    assert [v.token() for v in rep.a_verdicts][1].startswith("disputed")
    assert rep.class_rigid is False
    assert "SMALL-N-REGIME" in rep.warnings and "DISPUTED-A2" in rep.warnings
    js = rep.to_json_dict()
    assert js["space"] == "OG" and js["z"] == [0, 1] and js["x"] == [2]
    rep2 = classify_og(validate_og(3, 7, [2, 3], [0]))
    assert "NO-ESSENTIAL-B" in rep2.warnings and rep2.class_rigid


def test_witness_found_for_small_ambient_counterexample():
    x = validate_og(3, 7, [1, 2], [2])
    w = find_nonrigid_witness(x, ("a", 2))
    assert w == QuadricDiagram(7, (Bracket(1), Bracket(3)), (Quadric(5, 1),))
    assert expand(w) == ClassSum.single(x)


def test_witness_found_for_loose_corank_condition():
    x = validate_og(2, 9, [2], [3])
    w = find_nonrigid_witness(x, ("b", 1))
    assert w == QuadricDiagram(9, (Bracket(2),), (Quadric(6, 2),))
    assert expand(w) == ClassSum.single(x)


def test_witness_absent_for_rigid_position():
    assert find_nonrigid_witness(validate_og(2, 6, [1], [1]), ("a", 1)) is None


def test_witness_respects_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_nonrigid_witness(validate_og(2, 9, [2], [3]), ("b", 1), budget=2)


def test_witness_position_validation():
    x = validate_og(2, 6, [1], [1])
    with pytest.raises(PositionOutOfRange):
        find_nonrigid_witness(x, ("a", 2))
    with pytest.raises(PositionOutOfRange):
        find_nonrigid_witness(x, ("c", 1))


def test_witness_for_rewritten_boundary_position():
    # the boundary condition b = n/2 - 1 is queried through its bracket form
    x = validate_og(2, 8, [2], [3])
    assert find_nonrigid_witness(x, ("b", 1)) is None
