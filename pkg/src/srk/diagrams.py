"""Quadric diagrams: the bracket/brace/digit encoding of restriction varieties.

A restriction variety in OG(k,n) is cut out by a flag of isotropic subspaces
F_{n_1} c ... c F_{n_s} and sub-quadrics Q_{d_q}^{r_q} c ... c Q_{d_1}^{r_1}
(d = dimension of the spanning linear space, r = corank).  Its diagram is a
string of m digits (m = ambient dimension) with a bracket ``]`` after the
n_i-th digit for each isotropic space and a brace ``}`` after the d_j-th digit
for each quadric; the l-th digit equals j when r_{j-1} < l <= r_j (r_0 = 0)
and 0 when l > r_q.  When m is even, an isotropic space of dimension m/2 in
the second family is marked ``]'``.

Admissibility conditions checked here, by label:

  (1)   coranks nested inward: r_1 <= ... <= r_q and r_j <= d_j;
  (2)   flag/singular-locus containment pattern -- encoded by the diagram
        itself, recorded as convention-satisfied;
  (3)   either all coranks equal r_1 with r_1 among the bracket dimensions,
        or r_t - r_i >= t - i - 1 for all t > i, with an extra constraint on
        consecutive equal coranks above r_1;
  (A1)  r_q <= d_q - 3;
  (A2)  n_i - r_j != 1 for every bracket/quadric pair;
  (A3)  x_j >= k - j + 1 - floor((d_j - r_j)/2), where x_j = #{i : n_i <= r_j}.

Diagrams are immutable; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .errors import (
    DiagramSyntaxError,
    InconsistentDigits,
    InvalidDiagram,
    MarkerMisplaced,
)


class Bracket(NamedTuple):
    dim: int
    prime: bool = False


class Quadric(NamedTuple):
    d: int
    r: int


@dataclass(frozen=True)
class QuadricDiagram:
    """Structurally valid diagram; admissibility is a separate check."""

    m: int
    brackets: tuple  # of Bracket, dims strictly increasing
    quadrics: tuple  # of Quadric, d strictly decreasing, r nondecreasing

    def __post_init__(self):
        object.__setattr__(
            self, "brackets", tuple(Bracket(*b) for b in self.brackets)
        )
        object.__setattr__(
            self, "quadrics", tuple(Quadric(*q) for q in self.quadrics)
        )
        if self.m < 1:
            raise InvalidDiagram(f"need m >= 1, got {self.m}")
        if not self.brackets and not self.quadrics:
            raise InvalidDiagram("diagram needs at least one bracket or brace")
        dims = self.bracket_dims
        if any(x >= y for x, y in zip(dims, dims[1:])):
            raise InvalidDiagram(f"bracket dims must strictly increase: {dims}")
        if dims and (dims[0] < 1 or dims[-1] > self.m):
            raise InvalidDiagram(f"bracket dims must lie in 1..{self.m}: {dims}")
        for b in self.brackets:
            if b.prime and 2 * b.dim != self.m:
                raise InvalidDiagram(
                    f"prime marker only allowed at dimension {self.m}/2, got {b.dim}"
                )
        ds, rs = self.ds, self.rs
        if any(x <= y for x, y in zip(ds, ds[1:])):
            raise InvalidDiagram(f"quadric dims must strictly decrease: {ds}")
        if any(x > y for x, y in zip(rs, rs[1:])):
            raise InvalidDiagram(f"coranks must be nondecreasing: {rs}")
        for d, r in self.quadrics:
            if not (1 <= d <= self.m):
                raise InvalidDiagram(f"quadric dim {d} outside 1..{self.m}")
            if not (0 <= r <= d):
                raise InvalidDiagram(f"corank {r} outside 0..{d}")
        if dims and ds and dims[-1] > ds[-1]:
            raise InvalidDiagram(
                f"largest bracket {dims[-1]} sticks out of smallest brace {ds[-1]}"
            )
        # flag existence: an isotropic space inside Q_d^r has dimension at
        # most r + (d - r)/2, i.e. floor((d + r)/2)
        if dims:
            top = dims[-1]
            for d, r in self.quadrics:
                if top > (d + r) // 2:
                    raise InvalidDiagram(
                        f"bracket {top} cannot lie isotropically inside Q_{d}^{r}"
                    )

    @property
    def s(self) -> int:
        return len(self.brackets)

    @property
    def q(self) -> int:
        return len(self.quadrics)

    @property
    def k(self) -> int:
        return self.s + self.q

    @property
    def bracket_dims(self) -> tuple:
        return tuple(b.dim for b in self.brackets)

    @property
    def ds(self) -> tuple:
        return tuple(q.d for q in self.quadrics)

    @property
    def rs(self) -> tuple:
        return tuple(q.r for q in self.quadrics)

    @property
    def sums(self) -> tuple:
        return tuple(q.d + q.r for q in self.quadrics)

    @property
    def sort_key(self):
        return (self.s, self.brackets, self.quadrics)

    def digit_at(self, pos: int) -> int:
        """Digit at 1-based position pos: the j with r_{j-1} < pos <= r_j."""
        for j, q in enumerate(self.quadrics, start=1):
            if pos <= q.r:
                return j
        return 0

    def __str__(self):
        return print_diagram(self)


def digits(D: QuadricDiagram) -> list:
    """The m digits of the diagram as a list of ints."""
    out = [0] * D.m
    prev = 0
    for j, q in enumerate(D.quadrics, start=1):
        for pos in range(prev + 1, q.r + 1):
            out[pos - 1] = j
        prev = max(prev, q.r)
    return out


@dataclass
class AdmissibilityReport:
    """Per-condition verdicts; ``witness`` describes the first violation."""

    conditions: dict = field(default_factory=dict)  # label -> (passed, witness)
    x: tuple = ()
    warnings: tuple = ()

    @property
    def ok(self) -> bool:
        return all(passed for passed, _ in self.conditions.values())

    def failed(self) -> list:
        return [label for label, (p, _) in self.conditions.items() if not p]

    def witness(self, label: str):
        return self.conditions[label][1]


def x_profile(D: QuadricDiagram) -> tuple:
    """x_j = number of brackets with n_i <= r_j."""
    dims = D.bracket_dims
    return tuple(sum(1 for v in dims if v <= q.r) for q in D.quadrics)


def check_conditions(D: QuadricDiagram) -> AdmissibilityReport:
    """Evaluate conditions (1)-(3) and (A1)-(A3); verdicts, not exceptions."""
    rep = AdmissibilityReport(x=x_profile(D))
    warnings = []
    ds, rs, dims = D.ds, D.rs, D.bracket_dims
    q = D.q

    # (1): nondecreasing coranks, r_j <= d_j.  The constructor enforces this,
    # so it can fail only for reports built on hypothetical data; keep the
    # check so the report is self-contained.
    ok1, wit1 = True, None
    for j in range(1, q):
        if rs[j] < rs[j - 1]:
            ok1, wit1 = False, f"r_{j + 1} < r_{j}"
            break
    rep.conditions["1"] = (ok1, wit1)

    # (2): the containment pattern between flag elements and singular loci is
    # exactly what the digit/bracket layout encodes.
    rep.conditions["2"] = (True, "convention: encoded by the diagram")

    # (3)
    first = bool(rs) and all(r == rs[0] for r in rs) and rs[0] in dims
    second, wit3 = True, None
    for i in range(q):
        for t in range(i + 1, q):
            if rs[t] - rs[i] < t - i - 1:
                second, wit3 = False, f"r_{t + 1} - r_{i + 1} < {t - i - 1}"
                break
        if not second:
            break
    if second:
        for t in range(1, q):
            if rs[t] == rs[t - 1] > rs[0]:
                if ds[t - 1] - ds[t] != 1:
                    second, wit3 = False, f"d_{t} - d_{t + 1} != 1"
                    break
                bad = next(
                    (
                        i
                        for i in range(t, q - 1)
                        if ds[i] - ds[i + 1] != rs[i + 1] - rs[i]
                    ),
                    None,
                )
                if bad is not None:
                    second, wit3 = False, f"d_{bad + 1} - d_{bad + 2} != r gap"
                    break
    if q == 0:
        rep.conditions["3"] = (True, None)
    else:
        rep.conditions["3"] = (first or second, None if first or second else wit3)
        if first and not second:
            # the verdict hinges on reading "r_i = r_1 = n_{r_1}" as
            # "all coranks equal r_1 and r_1 is a bracket dimension"
            warnings.append("COND3-FIRST-CLAUSE")

    # (A1)
    if q == 0:
        rep.conditions["A1"] = (True, None)
    else:
        ok = rs[-1] <= ds[-1] - 3
        rep.conditions["A1"] = (ok, None if ok else f"r_q = {rs[-1]} > {ds[-1] - 3}")

    # (A2)
    okA2, witA2 = True, None
    for v in dims:
        for j, r in enumerate(rs, start=1):
            if v - r == 1:
                okA2, witA2 = False, f"bracket {v} = r_{j} + 1"
                break
        if not okA2:
            break
    rep.conditions["A2"] = (okA2, witA2)

    # (A3)
    okA3, witA3 = True, None
    for j in range(1, q + 1):
        d, r = ds[j - 1], rs[j - 1]
        need = D.k - j + 1 - (d - r) // 2
        if rep.x[j - 1] < need:
            okA3, witA3 = False, f"x_{j} = {rep.x[j - 1]} < {need}"
            break
    rep.conditions["A3"] = (okA3, witA3)

    rep.warnings = tuple(warnings)
    return rep


# --- text forms ------------------------------------------------------------

def print_diagram(D: QuadricDiagram, form: str = "canonical") -> str:
    """Render a diagram; ``form`` is "compact", "verbose", or "canonical".

    Canonical output is the compact string whenever every digit fits a single
    character, otherwise the verbose form.
    """
    if form not in ("compact", "verbose", "canonical"):
        raise ValueError(f"unknown form {form!r}")
    compact_ok = D.q <= 9
    if form == "canonical":
        form = "compact" if compact_ok else "verbose"
    if form == "compact":
        if not compact_ok:
            raise ValueError("diagram has digits > 9; use the verbose form")
        digs = digits(D)
        out = []
        for pos in range(1, D.m + 1):
            out.append(str(digs[pos - 1]))
            for b in D.brackets:
                if b.dim == pos:
                    out.append("]'" if b.prime else "]")
            for qq in D.quadrics:
                if qq.d == pos:
                    out.append("}")
        return "".join(out)
    a_part = (
        ",".join(f"{b.dim}'" if b.prime else str(b.dim) for b in D.brackets) or "-"
    )
    q_part = ",".join(f"{q.d}:{q.r}" for q in D.quadrics) or "-"
    return f"m={D.m} k={D.k} a={a_part} q={q_part}"


def _parse_compact(text: str) -> QuadricDiagram:
    digs = []
    brackets = []
    braces = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isdigit():
            digs.append(int(ch))
            i += 1
        elif ch == "]":
            if not digs:
                raise DiagramSyntaxError(i, "bracket before any digit")
            prime = i + 1 < len(text) and text[i + 1] == "'"
            brackets.append(Bracket(len(digs), prime))
            i += 2 if prime else 1
        elif ch == "}":
            if not digs:
                raise DiagramSyntaxError(i, "brace before any digit")
            braces.append(len(digs))
            i += 1
        else:
            raise DiagramSyntaxError(i, f"unexpected character {ch!r}")
    if not digs:
        raise DiagramSyntaxError(0, "no digits")
    m = len(digs)
    q = len(braces)
    seen_zero = False
    prev = 0
    for pos, v in enumerate(digs, start=1):
        if v == 0:
            seen_zero = True
            continue
        if seen_zero:
            raise InconsistentDigits(f"nonzero digit after a zero at position {pos}")
        if v < prev:
            raise InconsistentDigits(f"digit {v} after {prev} at position {pos}")
        if v > q:
            raise InconsistentDigits(f"digit {v} exceeds the brace count {q}")
        prev = v
    rs = [sum(1 for v in digs if 1 <= v <= j) for j in range(1, q + 1)]
    ds = sorted(braces, reverse=True)
    for b in brackets:
        if b.prime and 2 * b.dim != m:
            raise MarkerMisplaced(f"]' after digit {b.dim}, but m = {m}")
    quadrics = tuple(Quadric(d, r) for d, r in zip(ds, rs))
    return QuadricDiagram(m, tuple(sorted(brackets)), quadrics)


def _parse_verbose(text: str) -> QuadricDiagram:
    fields = {}
    for tok in text.split():
        if "=" not in tok:
            raise DiagramSyntaxError(text.index(tok), f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        fields[key] = val
    for key in ("m", "k", "a", "q"):
        if key not in fields:
            raise DiagramSyntaxError(0, f"missing field {key}=")
    try:
        m = int(fields["m"])
        k = int(fields["k"])
    except ValueError as exc:
        raise DiagramSyntaxError(0, str(exc)) from None
    brackets = []
    if fields["a"] != "-":
        for part in fields["a"].split(","):
            prime = part.endswith("'")
            try:
                dim = int(part.rstrip("'"))
            except ValueError:
                raise DiagramSyntaxError(text.index(part), f"bad bracket {part!r}") from None
            if prime and 2 * dim != m:
                raise MarkerMisplaced(f"]' at dimension {dim}, but m = {m}")
            brackets.append(Bracket(dim, prime))
    quadrics = []
    if fields["q"] != "-":
        for part in fields["q"].split(","):
            try:
                d, r = part.split(":")
                quadrics.append(Quadric(int(d), int(r)))
            except ValueError:
                raise DiagramSyntaxError(text.index(part), f"bad quadric {part!r}") from None
    D = QuadricDiagram(m, tuple(brackets), tuple(quadrics))
    if D.k != k:
        raise DiagramSyntaxError(0, f"declared k={k} but diagram has k={D.k}")
    return D


def parse_diagram(text: str) -> QuadricDiagram:
    """Parse either text form; the inverse of ``print_diagram`` on its output."""
    stripped = text.strip()
    if not stripped:
        raise DiagramSyntaxError(0, "empty input")
    if stripped.startswith("m="):
        return _parse_verbose(stripped)
    return _parse_compact(stripped)


# --- enumeration -----------------------------------------------------------

def _quadric_profiles(q, m, min_d):
    """All (d, r) chains: d strictly decreasing >= min_d, r nondecreasing,
    r_j <= d_j and d_j + r_j <= m.  Deterministic order."""
    if q == 0:
        yield ()
        return
    for dset in combinations(range(min_d, m + 1), q):
        ds = tuple(reversed(dset))  # d_1 > ... > d_q

        def fill(j, prev_r, acc):
            if j == q:
                yield tuple(acc)
                return
            cap = min(ds[j], m - ds[j])
            for r in range(prev_r, cap + 1):
                acc.append(r)
                yield from fill(j + 1, r, acc)
                acc.pop()

        for rs in fill(0, 0, []):
            yield tuple(Quadric(d, r) for d, r in zip(ds, rs))


def enumerate_diagrams(k: int, m: int, admissible_only: bool = True):
    """Every diagram with k parts in ambient m, in canonical order.

    Brackets range over isotropic dimensions (<= m/2, primed variants when a
    bracket sits exactly at m/2), quadrics over chains with d_j + r_j <= m.
    With ``admissible_only`` the conditions (1)-(3), (A1)-(A3) must all pass.
    """
    half = m // 2
    for s in range(0, k + 1):
        q = k - s
        for dims in combinations(range(1, half + 1), s):
            variants = [tuple(Bracket(v) for v in dims)]
            if dims and 2 * dims[-1] == m:
                variants.append(
                    tuple(Bracket(v) for v in dims[:-1]) + (Bracket(dims[-1], True),)
                )
            min_d = dims[-1] if dims else 1
            for brackets in variants:
                for quadrics in _quadric_profiles(q, m, min_d):
                    try:
                        D = QuadricDiagram(m, brackets, quadrics)
                    except InvalidDiagram:
                        continue
                    if admissible_only and not check_conditions(D).ok:
                        continue
                    yield D
