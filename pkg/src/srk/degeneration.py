"""The degeneration engine: class expansion of quadric diagrams.

One degeneration step picks the quadric kappa whose dimension-plus-corank sum
last drops, and produces one or both of

  D^a -- raise the corank of quadric kappa by one (a digit change), then
         repair: discard if (A3) fails; while (A2) fails, raise the corank
         again and slide the kappa-th brace one step left; if (A1) fails the
         rank-<=-2 quadric degenerates into a pair of linear spaces, so the
         brace becomes a bracket one position to the left (two copies, the
         second primed when the new rightmost bracket sits at position m/2
         of an even ambient);
  D^b -- in D^a, move the leftmost bracket lying right of position
         r_kappa + 1 onto that position, then repair (A2) by repeatedly
         demoting the digit at the offending bracket and sliding the matching
         brace left, giving up if two braces collide.

Which branches are taken follows the gap test on x_kappa, y_kappa and n_s.
Iterating until every surviving diagram is terminal (d_j + r_j = n for all j)
expands the class into Schubert classes of OG(k,n).  Treating the ambient as
2n+1 instead (terminal = no quadrics left) computes the pushforward of the
class to the ordinary Grassmannian G(k,n).

Diagrams are immutable; expansion is deterministic and side-effect free, so
results may be cached and shared across threads.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .classsum import ClassSum
from .diagrams import (
    Bracket,
    Quadric,
    QuadricDiagram,
    check_conditions,
    print_diagram,
)
from .errors import (
    AlreadyTerminal,
    DepthExceeded,
    EngineInvariantError,
    InvalidDiagram,
    NotAdmissible,
)
from .grassmannian import GrIndex
from .orthogonal import OgIndex, diagram_to_og, og_merge_prime, og_to_diagram


@dataclass(frozen=True)
class BranchDecision:
    """Why a step chose D^a, D^b, or both."""

    kappa: int
    x_kappa: int
    y_kappa: int | None
    n_s_le_r: bool
    gap_test: bool
    chosen: str  # "DaOnly" | "DbOnly" | "Both" | "Terminal"
    ambiguous_y: bool = False  # the two readings of the y guard disagree


@dataclass
class TraceNode:
    """One node of a derivation trace."""

    diagram: QuadricDiagram | None
    rule: str  # Root | Da | Db | FixA2 | FixA1Split | FixB | Discard
    note: str | None = None
    children: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule,
            "diagram": None if self.diagram is None else print_diagram(self.diagram),
            "note": self.note,
            "children": [c.to_json_dict() for c in self.children],
        }

    def render(self, indent: int = 0) -> str:
        label = "(discarded)" if self.diagram is None else print_diagram(self.diagram)
        line = "  " * indent + f"{self.rule}: {label}"
        if self.note:
            line += f"  [{self.note}]"
        return "\n".join([line] + [c.render(indent + 1) for c in self.children])


def _is_terminal(D: QuadricDiagram, push: bool) -> bool:
    if push:
        return not D.quadrics
    return all(s == D.m for s in D.sums)


def kappa(D: QuadricDiagram, pushforward: bool = False) -> int:
    """Index of the quadric the next degeneration acts on.

    The largest j whose sum d_j + r_j drops below its predecessor's, or 1
    when no sum drops; raises AlreadyTerminal when nothing is left to do in
    the active mode.
    """
    if _is_terminal(D, pushforward):
        raise AlreadyTerminal(f"{print_diagram(D)} is terminal")
    sums = D.sums
    drops = [j for j in range(2, D.q + 1) if sums[j - 1] < sums[j - 2]]
    return max(drops) if drops else 1


def _raise_corank(quadrics: tuple, j1: int) -> tuple:
    """Set the digit right after block j1 to j1: r_{j1} grows by one and any
    empty blocks above absorb (r_j := max(r_j, r_{j1} + 1) for j >= j1)."""
    pos = quadrics[j1 - 1].r + 1
    return tuple(
        Quadric(q.d, max(q.r, pos)) if j >= j1 else q
        for j, q in enumerate(quadrics, start=1)
    )


def _try_build(m, brackets, quadrics):
    try:
        return QuadricDiagram(m, tuple(brackets), tuple(quadrics))
    except InvalidDiagram:
        return None


def _discard(node, why):
    if node is not None:
        node.children.append(TraceNode(None, "Discard", note=why))


def _cond(rep, label):
    return rep.conditions[label][0]


def _fix_a2(cur: QuadricDiagram, kap: int):
    """One (A2) repair: raise quadric kappa's corank and slide its brace left."""
    if kap > cur.q:
        return None, "fix target quadric no longer present"
    nq = list(_raise_corank(cur.quadrics, kap))
    nq[kap - 1] = Quadric(nq[kap - 1].d - 1, nq[kap - 1].r)
    built = _try_build(cur.m, cur.brackets, nq)
    if built is None:
        return None, "structural collision while repairing (A2)"
    return built, None


def _split_a1(cur: QuadricDiagram, ambient: int):
    """Degenerate the innermost quadric into a bracket one position left;
    returns the two copies, the second primed when the rule applies."""
    dq = cur.quadrics[-1].d
    new_dim = dq - 1
    if new_dim < 1:
        return None, "no room left of the innermost brace"
    if new_dim in cur.bracket_dims:
        _warnings.warn(
            f"discarding branch of {print_diagram(cur)}: (A1) split would place "
            f"a second bracket at {new_dim}",
            RuntimeWarning,
            stacklevel=2,
        )
        return None, f"bracket collision at {new_dim}"
    brackets = tuple(sorted(cur.brackets + (Bracket(new_dim, False),)))
    base = _try_build(cur.m, brackets, cur.quadrics[:-1])
    if base is None:
        return None, "structural collision while splitting (A1)"
    second = base
    if ambient % 2 == 0 and 2 * base.brackets[-1].dim == ambient:
        primed = base.brackets[:-1] + (Bracket(base.brackets[-1].dim, True),)
        second = QuadricDiagram(base.m, primed, base.quadrics)
    return (base, second), None


def _algorithm1(D0: QuadricDiagram, kap: int, ambient: int, node):
    """Repair loop for D^a; returns surviving (diagram, trace node) pairs."""
    out = []
    work = [(D0, node)]
    while work:
        cur, cur_node = work.pop(0)
        for _ in range(4 * cur.m + 8):
            rep = check_conditions(cur)
            if not _cond(rep, "A3"):
                _discard(cur_node, f"(A3) fails: {rep.witness('A3')}")
                break
            if not _cond(rep, "A2"):
                fixed, why = _fix_a2(cur, kap)
                if fixed is None:
                    _discard(cur_node, why)
                    break
                child = TraceNode(fixed, "FixA2") if cur_node is not None else None
                if cur_node is not None:
                    cur_node.children.append(child)
                cur, cur_node = fixed, child
                continue
            if not _cond(rep, "A1"):
                pair, why = _split_a1(cur, ambient)
                if pair is None:
                    _discard(cur_node, why)
                    break
                if cur_node is not None:
                    for copy in pair:
                        child = TraceNode(copy, "FixA1Split")
                        cur_node.children.append(child)
                        work.append((copy, child))
                else:
                    work.extend((copy, None) for copy in pair)
                break
            if not rep.ok:
                # the corank rules repair (A1)-(A3) only; a corank bump can
                # break condition (3) when four or more quadrics carry a
                # non-monotone d+r profile, which lies outside the family the
                # rewriting rules preserve
                raise EngineInvariantError(
                    f"{print_diagram(cur)} fails {rep.failed()} after repairs; "
                    "the derivation left the admissible family"
                )
            out.append((cur, cur_node))
            break
        else:
            raise EngineInvariantError(f"(A2) repair loop stuck on {print_diagram(cur)}")
    return out


def _algorithm1_pairs(D, kap, ambient, trace):
    Da = _try_build(D.m, D.brackets, _raise_corank(D.quadrics, kap))
    if Da is None:
        _discard(trace, "corank bump not representable")
        return []
    node = None
    if trace is not None:
        node = TraceNode(Da, "Da")
        trace.children.append(node)
    return _algorithm1(Da, kap, ambient, node)


def derive_and_fix_a(D: QuadricDiagram, pushforward: bool = False, _trace=None):
    """Diagrams derived from D^a: usually 0, 1, or 2 of them."""
    kap = kappa(D, pushforward)
    ambient = 2 * D.m + 1 if pushforward else D.m
    return [d for d, _ in _algorithm1_pairs(D, kap, ambient, _trace)]


def _algorithm2(Db: QuadricDiagram, node):
    """Repair loop for D^b; returns (diagram, node) or (None, None)."""
    cur, cur_node = Db, node
    for _ in range(4 * Db.m + 8):
        viols = [
            v
            for v in cur.bracket_dims
            for r in cur.rs
            if v - r == 1
        ]
        if not viols:
            break
        p = min(viols)
        i = cur.digit_at(p)
        if i <= 1:
            _discard(cur_node, f"(A2) at bracket {p} has no brace to move")
            return None, None
        if cur.quadrics[i - 2].r != p - 1:
            _discard(cur_node, "digit bookkeeping off while repairing (A2)")
            return None, None
        nq = list(_raise_corank(cur.quadrics, i - 1))
        nq[i - 2] = Quadric(nq[i - 2].d - 1, nq[i - 2].r)
        built = _try_build(cur.m, cur.brackets, nq)
        if built is None:
            _discard(cur_node, "two braces would collide")
            return None, None
        child = TraceNode(built, "FixB") if cur_node is not None else None
        if cur_node is not None:
            cur_node.children.append(child)
        cur, cur_node = built, child
    else:
        raise EngineInvariantError(f"(A2) repair loop stuck on {print_diagram(cur)}")
    rep = check_conditions(cur)
    if not rep.ok:
        _discard(cur_node, f"inadmissible after repairs: {rep.failed()}")
        return None, None
    return cur, cur_node


def _derive_b_pair(D, kap, trace):
    quadrics = _raise_corank(D.quadrics, kap)
    Da = _try_build(D.m, D.brackets, quadrics)
    if Da is None:
        _discard(trace, "corank bump not representable")
        return None, None
    p = Da.quadrics[kap - 1].r
    movable = [b for b in Da.brackets if b.dim > p]
    if not movable:
        return None, None
    keep = [b for b in Da.brackets if b is not movable[0]]
    brackets = tuple(sorted(keep + [Bracket(p, False)]))
    Db = _try_build(Da.m, brackets, Da.quadrics)
    if Db is None:
        _discard(trace, "moved bracket collides")
        return None, None
    node = None
    if trace is not None:
        node = TraceNode(Db, "Db")
        trace.children.append(node)
    return _algorithm2(Db, node)


def derive_and_fix_b(D: QuadricDiagram, pushforward: bool = False, _trace=None):
    """The diagram derived from D^b, or None when there is no bracket to move
    or the repair gives up."""
    kap = kappa(D, pushforward)
    out, _ = _derive_b_pair(D, kap, _trace)
    return out


def _step_impl(D: QuadricDiagram, push: bool, trace):
    kap = kappa(D, push)
    ambient = 2 * D.m + 1 if push else D.m
    r_kap = D.quadrics[kap - 1].r
    dims = D.bracket_dims
    x_kap = sum(1 for v in dims if v <= r_kap)
    n_s = dims[-1] if dims else 0
    n_s_le_r = n_s <= r_kap

    y_kap = None
    gap_test = False
    ambiguous = False
    if not n_s_le_r:
        n_next = dims[x_kap]  # x_kap < s here
        below = [j for j in range(1, D.q + 1) if D.rs[j - 1] <= n_next]
        y_all = max(below)
        y_kap = y_all if any(r >= n_next for r in D.rs) else D.q + 1
        gap = n_next - r_kap - 1
        gap_test = gap > y_kap - kap
        ambiguous = gap_test != (gap > y_all - kap)

    if n_s_le_r or gap_test:
        chosen = "DaOnly"
        pairs = _algorithm1_pairs(D, kap, ambient, trace)
    else:
        bumped = _try_build(D.m, D.brackets, _raise_corank(D.quadrics, kap))
        da_ok = bumped is not None and _cond(check_conditions(bumped), "A3")
        if not da_ok:
            chosen = "DbOnly"
            b, bnode = _derive_b_pair(D, kap, trace)
            pairs = [(b, bnode)] if b is not None else []
        else:
            chosen = "Both"
            pairs = _algorithm1_pairs(D, kap, ambient, trace)
            b, bnode = _derive_b_pair(D, kap, trace)
            if b is not None:
                pairs.append((b, bnode))
    decision = BranchDecision(kap, x_kap, y_kap, n_s_le_r, gap_test, chosen, ambiguous)
    if trace is not None:
        note = f"κ={kap} x={x_kap} y={y_kap} → {chosen}"
        if ambiguous:
            note += " (y-guard readings disagree)"
        trace.note = note if trace.note is None else f"{trace.note}; {note}"
    return decision, pairs


def step(D: QuadricDiagram, pushforward: bool = False):
    """One degeneration step: the branch decision and the derived diagrams."""
    decision, pairs = _step_impl(D, pushforward, None)
    return decision, [d for d, _ in pairs]


def _terminal_basis(D: QuadricDiagram, push: bool):
    if push:
        return GrIndex(D.k, D.m, D.bracket_dims)
    return diagram_to_og(D)


def _depth_limit(D: QuadricDiagram) -> int:
    return 4 * (D.k * D.m + 8)


def _expand_node(D, push, node, depth, limit):
    if depth > limit:
        raise DepthExceeded(f"derivation deeper than {limit} at {print_diagram(D)}")
    if _is_terminal(D, push):
        return ClassSum.single(_terminal_basis(D, push))
    _, pairs = _step_impl(D, push, node)
    acc = {}
    for child, child_node in pairs:
        rep = check_conditions(child)
        if not rep.ok:
            raise EngineInvariantError(
                f"emitted diagram {print_diagram(child)} fails {rep.failed()}"
            )
        if node is None:
            sub = _expand_cached(child, push)
        else:
            sub = _expand_node(child, push, child_node, depth + 1, limit)
        for basis, coeff in sub:
            acc[basis] = acc.get(basis, 0) + coeff
    return ClassSum(acc)


@lru_cache(maxsize=None)
def _expand_cached(D, push):
    return _expand_node(D, push, None, 0, _depth_limit(D))


def _entry_check(D: QuadricDiagram):
    rep = check_conditions(D)
    if not rep.ok:
        raise NotAdmissible(
            f"{print_diagram(D)} fails conditions {rep.failed()}", report=rep
        )
    if D.brackets and 2 * D.bracket_dims[-1] > D.m:
        raise NotAdmissible(
            f"bracket {D.bracket_dims[-1]} exceeds the isotropic bound in ambient {D.m}",
            report=rep,
        )
    if any(d + r > D.m for d, r in D.quadrics):
        raise NotAdmissible(
            f"a quadric of {print_diagram(D)} does not fit in ambient {D.m}",
            report=rep,
        )


def expand(D: QuadricDiagram, trace: bool = False):
    """Expand a restriction-variety diagram into OG(k, m) Schubert classes.

    Returns the ClassSum, or (ClassSum, TraceNode) when ``trace`` is set.
    Deterministic: terms accumulate into the canonical basis order no matter
    how the tree is walked.
    """
    _entry_check(D)
    root = TraceNode(D, "Root") if trace else None
    try:
        result = _expand_node(D, False, root, 0, _depth_limit(D))
    except RecursionError:
        raise DepthExceeded(f"derivation of {print_diagram(D)} does not bottom out")
    return (result, root) if trace else result


def pushforward_diagram(D: QuadricDiagram, trace: bool = False):
    """Class of the diagram's variety inside the ordinary Grassmannian G(k, m),
    computed by running the engine with the ambient treated as 2m + 1."""
    _entry_check(D)
    root = TraceNode(D, "Root") if trace else None
    try:
        result = _expand_node(D, True, root, 0, _depth_limit(D))
    except RecursionError:
        raise DepthExceeded(f"pushforward of {print_diagram(D)} does not bottom out")
    return (result, root) if trace else result


def pushforward(x: OgIndex, trace: bool = False):
    """Type-A class of the Schubert variety named by ``x`` under the inclusion
    of OG(k,n) into G(k,n)."""
    return pushforward_diagram(og_to_diagram(x), trace=trace)


def merge_primes(S: ClassSum) -> ClassSum:
    """Replace every primed basis element by its unprimed twin (display form)."""
    return S.map_basis(og_merge_prime)
