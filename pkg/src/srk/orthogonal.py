"""Schubert indices for the orthogonal Grassmannian OG(k,n).

An index is a pair of increasing sequences (a_1 < ... < a_s ; b_1 < ... <
b_{k-s}) with a_i <= n/2, b_j <= n/2 - 1 and a_i != b_j + 1 for all pairs.
The a-parts ask for incidence with isotropic subspaces F_{a_i}, the b-parts
for incidence with orthogonal complements F_{b_j}^perp.  When n is even and
a_s = n/2, a prime marker picks the second family of maximal isotropic
subspaces.

The fundamental class needs s = 0 (every condition vacuous), so s = 0 is
admitted here even though the classical definition starts at s = 1; the
Weyl-group enumeration counts only come out right with it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagrams import Bracket, Quadric, QuadricDiagram, check_conditions
from .errors import (
    BadArity,
    BadPrime,
    Bounds,
    NoIsotropicRoom,
    NotDiagramRepresentable,
    NotSchubertDiagram,
    NotStrictlyIncreasing,
    SplitsIntoTwo,
)


@dataclass(frozen=True)
class OgIndex:
    """A Schubert index for OG(k,n); immutable and validated on construction."""

    k: int
    n: int
    a: tuple
    b: tuple
    prime: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        k, n, a, b = self.k, self.n, self.a, self.b
        if n < 2 * k:
            raise NoIsotropicRoom(f"OG({k},{n}): need n >= 2k")
        if len(a) + len(b) != k:
            raise BadArity(f"got {len(a)} + {len(b)} parts for k = {k}")
        if any(not isinstance(v, int) for v in a + b):
            raise Bounds(f"parts must be integers: a={a}, b={b}")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise NotStrictlyIncreasing(f"a must strictly increase: {a}")
        if any(x >= y for x, y in zip(b, b[1:])):
            raise NotStrictlyIncreasing(f"b must strictly increase: {b}")
        if a and (a[0] < 1 or 2 * a[-1] > n):
            raise Bounds(f"need 1 <= a_i <= n/2: {a}")
        if b and (b[0] < 0 or 2 * b[-1] > n - 2):
            raise Bounds(f"need 0 <= b_j <= n/2 - 1: {b}")
        if self.prime and not (n % 2 == 0 and a and 2 * a[-1] == n):
            raise BadPrime(f"prime marker needs n even and a_s = n/2: a={a}, n={n}")
        for i, av in enumerate(a, start=1):
            for j, bv in enumerate(b, start=1):
                if av == bv + 1:
                    split = (
                        (a[: i - 1] + (av - 1,) + a[i:], b),
                        (a, b[: j - 1] + (bv + 1,) + b[j:]),
                    )
                    raise SplitsIntoTwo(i, j, split)

    @property
    def s(self) -> int:
        return len(self.a)

    @property
    def sort_key(self):
        return (self.s, self.a, int(self.prime), self.b)

    def __str__(self):
        parts = [f"{v}'" if self.prime and i == self.s else str(v)
                 for i, v in enumerate(self.a, start=1)]
        sub = ",".join(parts)
        sup = ",".join(str(v) for v in self.b)
        out = "σ"
        if sub:
            out += f"_{sub}" if len(self.a) == 1 and not self.prime else f"_{{{sub}}}"
        if sup:
            out += f"^{sup}" if len(self.b) == 1 else f"^{{{sup}}}"
        return out


def validate_og(k: int, n: int, a, b, prime: bool = False, s=None) -> OgIndex:
    """Validate the data and return the index.

    When a_i = b_j + 1 the locus is a union of two Schubert varieties; the
    raised ``SplitsIntoTwo`` carries both replacement indices as a diagnostic.
    """
    if s is not None and s != len(tuple(a)):
        raise BadArity(f"declared s={s} but a has {len(tuple(a))} parts")
    return OgIndex(k, n, tuple(a), tuple(b), prime)


def og_essential(x: OgIndex) -> tuple:
    """(essential a-positions, essential b-positions), both 1-based sets.

    a_i (i < s) is essential iff a_{i+1} != a_i + 1; a_s is essential except
    in the single degenerate case n = 2k, a_s = b_{k-s} + 2 = k.  b_j is
    essential iff b_{j-1} != b_j - 1 with the sentinel b_0 = -1, which makes
    the vacuous condition b_1 = 0 non-essential.
    """
    ess_a = set()
    for i in range(1, x.s):
        if x.a[i] != x.a[i - 1] + 1:
            ess_a.add(i)
    if x.s:
        degenerate = (
            x.n == 2 * x.k
            and x.b
            and x.a[-1] == x.b[-1] + 2
            and x.a[-1] == x.k
        )
        if not degenerate:
            ess_a.add(x.s)
    ess_b = set()
    for j in range(1, len(x.b) + 1):
        prev = x.b[j - 2] if j >= 2 else -1
        if prev != x.b[j - 1] - 1:
            ess_b.add(j)
    return ess_a, ess_b


def needs_rewrite(x: OgIndex) -> bool:
    """True when n is even and b_{k-s} = n/2 - 1, i.e. the largest b-condition
    names a single maximal isotropic space of the second family."""
    return x.n % 2 == 0 and bool(x.b) and x.b[-1] == x.n // 2 - 1


def canonical_index(x: OgIndex) -> OgIndex:
    """Rewrite the even-n boundary condition b_{k-s} = n/2 - 1 as a primed
    bracket a_{s+1} = n/2; identity on everything else."""
    if not needs_rewrite(x):
        return x
    # a_i != b_j + 1 already guarantees no existing a_s = n/2
    return OgIndex(x.k, x.n, x.a + (x.n // 2,), x.b[:-1], prime=True)


def og_to_diagram(x: OgIndex, rewrite: bool = True) -> QuadricDiagram:
    """The Schubert diagram: brackets at the a-parts and quadrics
    (n - b_j, b_j) for the b-parts.

    The even-n boundary case b_{k-s} = n/2 - 1 has no admissible quadric form
    (it would need d - r = 2) and is first rewritten to its primed-bracket
    synonym unless ``rewrite`` is disabled.
    """
    if needs_rewrite(x):
        if not rewrite:
            raise NotDiagramRepresentable(
                f"b = {x.b[-1]} = n/2 - 1 with n = {x.n} even; enable rewrite"
            )
        x = canonical_index(x)
    brackets = tuple(
        Bracket(v, x.prime and i == x.s) for i, v in enumerate(x.a, start=1)
    )
    quadrics = tuple(Quadric(x.n - v, v) for v in x.b)
    D = QuadricDiagram(x.n, brackets, quadrics)
    rep = check_conditions(D)
    if not rep.ok:
        raise NotSchubertDiagram(
            f"{x} produced an inadmissible diagram (failed {rep.failed()})"
        )
    return D


def diagram_to_og(D: QuadricDiagram) -> OgIndex:
    """Inverse of ``og_to_diagram`` on its image: requires d_j + r_j = m."""
    for j, qq in enumerate(D.quadrics, start=1):
        if qq.d + qq.r != D.m:
            raise NotSchubertDiagram(
                f"quadric {j} has d + r = {qq.d + qq.r} != {D.m}"
            )
    prime = any(b.prime for b in D.brackets)
    x = OgIndex(D.k, D.m, D.bracket_dims, D.rs, prime)
    if needs_rewrite(x):
        # not in the image: the boundary condition b = m/2 - 1 is always
        # rendered as a primed bracket, never as a quadric
        raise NotSchubertDiagram(
            f"quadric with corank {x.b[-1]} = m/2 - 1 must appear as a primed bracket"
        )
    return x


def og_dimension(x: OgIndex) -> int:
    """Dimension, read off the type-A pushforward of the class.

    Expands the index through the degeneration engine and returns the common
    dimension of the resulting ordinary Schubert classes, asserting that all
    terms agree.
    """
    from .degeneration import pushforward  # circular at module load time
    from .errors import EngineInvariantError
    from .grassmannian import gr_dimension

    terms = pushforward(x)
    dims = {gr_dimension(t) for t, _ in terms}
    if len(dims) != 1:
        raise EngineInvariantError(f"inhomogeneous pushforward for {x}: {dims}")
    return dims.pop()


def og_merge_prime(x: OgIndex) -> OgIndex:
    """The unprimed twin of a primed index; identity when unprimed."""
    return replace(x, prime=False) if x.prime else x
