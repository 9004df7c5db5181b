"""Quadric diagrams: structure, admissibility conditions, text grammar."""

import pytest
from hypothesis import given, strategies as st

from srk import (
    Bracket,
    Quadric,
    QuadricDiagram,
    check_conditions,
    digits,
    enumerate_diagrams,
    parse_diagram,
    print_diagram,
)
from srk.errors import (
    DiagramSyntaxError,
    InconsistentDigits,
    InvalidDiagram,
    MarkerMisplaced,
)


def D(m, brackets=(), quadrics=()):
    return QuadricDiagram(
        m,
        tuple(Bracket(*b) if isinstance(b, tuple) else Bracket(b) for b in brackets),
        tuple(Quadric(*q) for q in quadrics),
    )


@pytest.mark.parametrize(
    "m,brackets,quadrics",
    [
        (6, [2, 2], []),                    # duplicate bracket
        (6, [(2, True)], []),               # prime away from m/2
        (6, [], [(4, 5)]),                  # corank above dimension
        (6, [], [(5, 1), (5, 0)]),          # braces collide / d not decreasing
        (6, [], [(6, 1), (5, 0)]),          # coranks decreasing
        (6, [5], [(4, 0)]),                 # bracket right of smallest brace
        (7, [3], [(5, 0)]),                 # bracket cannot lie on Q_5^0
        (6, [], []),                        # nothing at all
    ],
)
def test_structural_rejections(m, brackets, quadrics):
    with pytest.raises(InvalidDiagram):
        D(m, brackets, quadrics)


def test_check_conditions_examples():
    assert check_conditions(D(6, [2], [(5, 0)])).ok
    rep_a1 = check_conditions(D(6, [2], [(4, 2)]))
    assert rep_a1.failed() == ["A1"]
    rep_a2 = check_conditions(D(6, [2], [(5, 1)]))
    assert rep_a2.failed() == ["A2"]
    assert rep_a2.x == (0,)


def test_condition3_tail_clause():
    # equal coranks above r_1 force a unit step between their braces
    bad = D(9, [], [(7, 1), (5, 2), (3, 2)])
    assert "3" in check_conditions(bad).failed()
    good = D(9, [], [(7, 1), (5, 2), (4, 2)])
    assert "3" not in check_conditions(good).failed()


def test_condition3_first_clause_warns_when_deciding():
    # all coranks equal a bracket dimension, but the gap rule fails
    rep = check_conditions(D(9, [1], [(7, 1), (6, 1), (5, 1)]))
    assert rep.conditions["3"][0]
    assert "COND3-FIRST-CLAUSE" in rep.warnings


def test_digits_examples():
    assert digits(D(6, [1], [(5, 1)])) == [1, 0, 0, 0, 0, 0]
    assert digits(D(6, [2], [(5, 0)])) == [0, 0, 0, 0, 0, 0]
    assert digits(D(13, [], [(6, 1), (5, 2)])) == [1, 2] + [0] * 11


def test_parse_examples():
    assert parse_diagram("00]000}0") == D(6, [2], [(5, 0)])
    assert parse_diagram("1]00]00}00") == D(7, [1, 3], [(5, 1)])
    assert parse_diagram("00]0]'000") == D(6, [2, (3, True)], [])


def test_parse_verbose_and_canonical_forms():
    d = D(6, [2], [(5, 0)])
    assert print_diagram(d) == "00]000}0"
    verbose = print_diagram(d, form="verbose")
    assert verbose == "m=6 k=2 a=2 q=5:0"
    assert parse_diagram(verbose) == d
    bare = D(6, [2, (3, True)], [])
    assert print_diagram(bare, form="verbose") == "m=6 k=2 a=2,3' q=-"
    assert parse_diagram("m=6 k=2 a=2,3' q=-") == bare
    assert parse_diagram("m=6 k=2 a=- q=6:0,5:1") == D(6, [], [(6, 0), (5, 1)])


@pytest.mark.parametrize(
    "text,err",
    [
        ("]000", DiagramSyntaxError),
        ("00x0", DiagramSyntaxError),
        ("0]1}", InconsistentDigits),   # nonzero digit after a zero
        ("1]00", InconsistentDigits),   # digit exceeds the brace count
        ("21]000}0}", InconsistentDigits),
        ("0]'000", MarkerMisplaced),
        ("m=6 k=3 a=2 q=5:0", DiagramSyntaxError),  # declared k mismatch
        ("m=8 k=1 a=3' q=-", MarkerMisplaced),
    ],
)
def test_parse_rejects(text, err):
    with pytest.raises(err):
        parse_diagram(text)


def test_syntax_error_carries_position():
    with pytest.raises(DiagramSyntaxError) as exc:
        parse_diagram("00!0")
    assert exc.value.position == 2


_POOL = [
    d
    for k in range(1, 4)
    for m in range(2 * k, 10)
    for d in enumerate_diagrams(k, m, admissible_only=False)
]


def test_pool_is_reasonably_large():
    assert len(_POOL) > 400


@given(st.sampled_from(_POOL))
def test_print_parse_roundtrip(d):
    assert parse_diagram(print_diagram(d)) == d
    assert parse_diagram(print_diagram(d, form="verbose")) == d


@given(st.sampled_from(_POOL))
def test_digit_blocks_are_contiguous(d):
    digs = digits(d)
    for j, q in enumerate(d.quadrics, start=1):
        prev = d.quadrics[j - 2].r if j >= 2 else 0
        assert [pos for pos in range(1, d.m + 1) if digs[pos - 1] == j] == list(
            range(prev + 1, q.r + 1)
        )


def test_enumeration_is_deterministic_and_admissible():
    first = list(enumerate_diagrams(2, 7))
    second = list(enumerate_diagrams(2, 7))
    assert first == second
    assert all(check_conditions(d).ok for d in first)
