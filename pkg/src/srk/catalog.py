"""Index enumeration and the JSONL classification catalog.

``enumerate_og`` walks every Schubert index of OG(k,n) exactly once in
canonical order.  When n is even, an index whose largest b-part equals
n/2 - 1 names the same class as a primed-bracket index (the orthogonal
complement of F_{n/2-1} is a single chosen maximal isotropic space), so only
the bracket form is emitted; the counts then match the Weyl-group quotient
orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from itertools import combinations

from .errors import NoIsotropicRoom, OutOfBounds, SchemaError
from .grassmannian import (
    GrIndex,
    gr_dimension,
    gr_envelope,
    gr_essential,
    gr_rigid_class,
    gr_rigid_index,
)
from .orthogonal import OgIndex, og_dimension, og_essential
from .rigidity import classify_og


def enumerate_gr(k: int, n: int):
    """Every Schubert index of G(k,n), lexicographically."""
    if not (1 <= k <= n):
        raise OutOfBounds(f"need 1 <= k <= n, got k={k}, n={n}")
    for a in combinations(range(1, n + 1), k):
        yield GrIndex(k, n, a)


def enumerate_og(k: int, n: int):
    """Every Schubert index of OG(k,n) exactly once, canonical order.

    s runs over 0..k, primed variants are included, indices with
    a_i = b_j + 1 (unions of two Schubert varieties) are excluded, and
    even-n synonyms with b_{k-s} = n/2 - 1 are skipped in favor of their
    primed-bracket form.
    """
    if k < 1:
        raise OutOfBounds(f"need k >= 1, got {k}")
    if n < 2 * k:
        raise NoIsotropicRoom(f"OG({k},{n}): need n >= 2k")
    half = n // 2
    b_top = (n - 2) // 2
    for s in range(0, k + 1):
        for a in combinations(range(1, half + 1), s):
            primes = [False]
            if s and n % 2 == 0 and 2 * a[-1] == n:
                primes.append(True)
            for prime in primes:
                for b in combinations(range(0, b_top + 1), k - s):
                    if any(av == bv + 1 for av in a for bv in b):
                        continue
                    if n % 2 == 0 and b and b[-1] == n // 2 - 1:
                        continue
                    yield OgIndex(k, n, a, b, prime)


_FIELD_ORDER = (
    "space",
    "k",
    "n",
    "a",
    "b",
    "prime",
    "dim",
    "essential_a",
    "essential_b",
    "rigid_a",
    "rigid_b",
    "class_rigid",
    "envelope",
    "warnings",
)


@dataclass(frozen=True)
class CatalogRecord:
    """One classified index; ``envelope`` is set only for G, the b-side
    fields only for OG."""

    space: str
    k: int
    n: int
    a: tuple
    b: tuple | None
    prime: bool | None
    dim: int
    essential_a: tuple
    essential_b: tuple | None
    rigid_a: tuple
    rigid_b: tuple | None
    class_rigid: bool
    envelope: tuple | None
    warnings: tuple

    @property
    def sort_key(self):
        return (
            self.space,
            self.k,
            self.n,
            len(self.a),
            self.a,
            int(bool(self.prime)),
            self.b or (),
        )

    def to_json_line(self) -> str:
        out = {}
        for name in _FIELD_ORDER:
            value = getattr(self, name)
            out[name] = list(value) if isinstance(value, tuple) else value
        return json.dumps(out, separators=(",", ":"))


def build_record(x) -> CatalogRecord:
    """Classify one index into a catalog record."""
    if isinstance(x, GrIndex):
        ess = tuple(sorted(gr_essential(x)))
        return CatalogRecord(
            space="G",
            k=x.k,
            n=x.n,
            a=x.a,
            b=None,
            prime=None,
            dim=gr_dimension(x),
            essential_a=ess,
            essential_b=None,
            rigid_a=tuple(gr_rigid_index(x, i).token() for i in range(1, x.k + 1)),
            rigid_b=None,
            class_rigid=gr_rigid_class(x),
            envelope=gr_envelope(x).a,
            warnings=(),
        )
    if isinstance(x, OgIndex):
        rep = classify_og(x)
        ess_a, ess_b = og_essential(x)
        return CatalogRecord(
            space="OG",
            k=x.k,
            n=x.n,
            a=x.a,
            b=x.b,
            prime=x.prime,
            dim=og_dimension(x),
            essential_a=tuple(sorted(ess_a)),
            essential_b=tuple(sorted(ess_b)),
            rigid_a=tuple(v.token() for v in rep.a_verdicts),
            rigid_b=tuple(v.token() for v in rep.b_verdicts),
            class_rigid=rep.class_rigid,
            envelope=None,
            warnings=rep.warnings,
        )
    raise TypeError(f"cannot build a record from {type(x).__name__}")


def write_catalog(records, path) -> None:
    """Write records as JSON Lines, sorted canonically; byte-deterministic."""
    ordered = sorted(records, key=lambda r: r.sort_key)
    with open(path, "w", encoding="utf-8") as fh:
        for rec in ordered:
            fh.write(rec.to_json_line() + "\n")


def _record_from_dict(obj: dict, line_no: int) -> CatalogRecord:
    names = {f.name for f in fields(CatalogRecord)}
    if set(obj) != names:
        raise SchemaError(line_no, f"fields {sorted(set(obj) ^ names)} mismatched")
    kwargs = {}
    for name, value in obj.items():
        kwargs[name] = tuple(value) if isinstance(value, list) else value
    try:
        return CatalogRecord(**kwargs)
    except TypeError as exc:
        raise SchemaError(line_no, str(exc)) from None


def read_catalog(path):
    """Read a JSONL catalog back; inverse of ``write_catalog``."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(line_no, exc.msg) from None
            if not isinstance(obj, dict):
                raise SchemaError(line_no, "expected a JSON object")
            out.append(_record_from_dict(obj, line_no))
    return out
