"""Cross-module invariants checked by exhaustive enumeration."""

import pytest

from srk import (
    check_conditions,
    diagram_to_og,
    enumerate_diagrams,
    enumerate_og,
    expand,
    og_to_diagram,
    step,
)
from srk.errors import AlreadyTerminal, ValidationError
from srk.orthogonal import needs_rewrite


def _schubert_like(D):
    return all(q.d + q.r == D.m for q in D.quadrics)


def test_terminal_diagrams_are_exactly_the_valid_indices():
    """A terminal diagram passes the admissibility conditions iff it decodes
    to a valid index (exhaustive over structurally valid diagrams)."""
    for k in range(1, 4):
        for m in range(2 * k, 10):
            for D in enumerate_diagrams(k, m, admissible_only=False):
                if not _schubert_like(D):
                    continue
                try:
                    diagram_to_og(D)
                    decodes = True
                except ValidationError:
                    decodes = False
                assert decodes == check_conditions(D).ok, str(D)


def test_schubert_diagrams_of_enumerated_indices_are_admissible():
    for k in range(1, 4):
        for n in range(2 * k, 10):
            for x in enumerate_og(k, n):
                D = og_to_diagram(x)
                assert check_conditions(D).ok
                if not needs_rewrite(x):
                    assert diagram_to_og(D) == x


def test_step_children_remain_admissible():
    for k in range(1, 4):
        for m in range(2 * k, 9):
            for D in enumerate_diagrams(k, m, admissible_only=True):
                try:
                    _, children = step(D)
                except AlreadyTerminal:
                    continue
                for child in children:
                    assert check_conditions(child).ok, f"{D} -> {child}"


def test_expansion_coefficients_positive_and_deterministic():
    for k in range(1, 3):
        for m in range(2 * k, 9):
            for D in enumerate_diagrams(k, m, admissible_only=True):
                S = expand(D)
                assert S == expand(D)
                assert all(c >= 1 for _, c in S)


def test_out_of_family_derivation_fails_loudly():
    """With four quadrics and a non-monotone d+r profile, a corank bump can
    break the corank-profile condition; the engine must refuse rather than
    silently drop the branch.  This cannot happen with three or fewer
    quadrics (covered exhaustively elsewhere)."""
    from srk import parse_diagram
    from srk.errors import EngineInvariantError

    exotic = parse_diagram("344000}0}0}0}")
    assert check_conditions(exotic).ok
    with pytest.raises(EngineInvariantError):
        expand(exotic)


def test_pushforward_terms_share_one_dimension_per_index():
    from srk import pushforward
    from srk.grassmannian import gr_dimension

    for k in range(1, 4):
        for n in range(2 * k, 10):
            for x in enumerate_og(k, n):
                dims = {gr_dimension(t) for t, _ in pushforward(x)}
                assert len(dims) == 1, str(x)


def test_progress_along_derivations():
    """Along every root-to-leaf path, quadric sums never decrease and the
    same diagram never repeats."""
    from srk import expand as _expand

    for seed in ("00]000}0", "m=7 k=2 a=2 q=7:0", "m=9 k=2 a=- q=8:0,7:1"):
        from srk import parse_diagram

        _, root = _expand(parse_diagram(seed), trace=True)

        def walk(node, seen):
            if node.diagram is not None:
                key = node.diagram
                assert key not in seen, f"cycle at {key}"
                seen = seen | {key}
            for child in node.children:
                walk(child, seen)

        walk(root, frozenset())
