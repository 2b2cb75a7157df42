"""Immutable uniform hypergraphs with structural predicates and file I/O.

A hypergraph here is always r-uniform: every edge is a set of exactly r
distinct vertices, vertices are integers in [0, n).  Edges are stored as
sorted tuples.  An optional partite layout splits a subset of the vertices
into disjoint parts; when present, every edge must be a transversal of the
layout (one vertex per part).

The text format is line oriented:

    n=<int> r=<int> m=<int>
    part <j> <v1> <v2> ...     (optional, one line per part, j = 1,2,...)
    e <v1> ... <vr>            (m lines)

``#`` starts a comment anywhere on a line.  Canonical output sorts the edge
lines lexicographically; the in-memory edge order is preserved so callers can
keep class bookkeeping stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "Hypergraph",
    "DegreeProfile",
    "MatchingDecomposition",
    "LinearityReport",
    "read_hypergraph",
    "write_hypergraph",
    "is_linear",
    "regularity_profile",
    "matching_decomposition",
    "packing_bound",
]


class Hypergraph:
    """An r-uniform hypergraph on vertices 0..n-1.

    Instances are immutable after construction and safe to share.  Edges are
    sorted tuples of distinct vertex ids; duplicate edges are rejected.

    Raises:
        ValueError: on non-uniform edges, out-of-range vertices, duplicate
            edges, or an edge that does not meet every layout part exactly
            once.
    """

    __slots__ = ("n", "r", "edges", "parts", "_masks", "_edge_set")

    def __init__(
        self,
        n: int,
        r: int,
        edges: Iterable[Sequence[int]],
        parts: Optional[Sequence[Iterable[int]]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if r < 2:
            raise ValueError("uniformity r must be at least 2")
        clean = []
        seen = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"edge {tuple(e)} does not have {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {t} has a vertex outside [0, {n})")
            if t in seen:
                raise ValueError(f"duplicate edge {t}")
            seen.add(t)
            clean.append(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", tuple(clean))
        if parts is not None:
            psets = tuple(frozenset(p) for p in parts)
            cover = set()
            for p in psets:
                if cover & p:
                    raise ValueError("layout parts are not disjoint")
                cover |= p
            if cover and (min(cover) < 0 or max(cover) >= n):
                raise ValueError("layout vertex outside [0, n)")
            for t in clean:
                for p in psets:
                    if sum(1 for v in t if v in p) != 1:
                        raise ValueError(
                            f"edge {t} does not meet every part exactly once"
                        )
            object.__setattr__(self, "parts", psets)
        else:
            object.__setattr__(self, "parts", None)
        object.__setattr__(self, "_masks", None)
        object.__setattr__(self, "_edge_set", frozenset(clean))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> tuple:
        """Bitmask of each edge (bit v set iff vertex v is in the edge)."""
        if self._masks is None:
            masks = tuple(sum(1 << v for v in e) for e in self.edges)
            object.__setattr__(self, "_masks", masks)
        return self._masks

    def has_edge(self, e: Sequence[int]) -> bool:
        return tuple(sorted(e)) in self._edge_set

    def replace_edges(self, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        """A copy with a different edge list on the same vertex set."""
        return Hypergraph(self.n, self.r, edges, self.parts)

    def canonical(self) -> "Hypergraph":
        """A copy with edges in lexicographic order."""
        return Hypergraph(self.n, self.r, sorted(self.edges), self.parts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.r == other.r
            and self.edges == other.edges
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.n, self.r, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m})"


@dataclass(frozen=True)
class LinearityReport:
    """Outcome of the pairwise-intersection check.

    ``witness`` is a pair of edge indices sharing ``shared`` (two or more
    vertices) when the family is not linear.
    """

    ok: bool
    witness: Optional[tuple] = None
    shared: Optional[tuple] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple
    min_degree: int
    max_degree: int
    is_regular: bool
    k: Optional[int]


@dataclass(frozen=True)
class MatchingDecomposition:
    """A partition of the edge list into perfect matchings.

    ``classes`` holds tuples of edge indices; each class covers every vertex
    exactly once.
    """

    classes: tuple


def packing_bound(n: int, r: int) -> int:
    """Max conceivable size of a linear r-uniform family on n vertices."""
    return (n * (n - 1)) // (r * (r - 1))


def is_linear(h: Hypergraph) -> LinearityReport:
    """Check that every two edges share at most one vertex.

    Runs in O(m * r^2) by hashing vertex pairs: any pair of vertices that
    appears in two edges is exactly a linearity violation.
    """
    seen: dict = {}
    for idx, e in enumerate(h.edges):
        for i in range(h.r):
            for j in range(i + 1, h.r):
                key = (e[i], e[j])
                other = seen.get(key)
                if other is not None:
                    a = set(h.edges[other]) & set(e)
                    return LinearityReport(False, (other, idx), tuple(sorted(a)))
                seen[key] = idx
    return LinearityReport(True)


def regularity_profile(h: Hypergraph) -> DegreeProfile:
    degs = [0] * h.n
    for e in h.edges:
        for v in e:
            degs[v] += 1
    lo = min(degs) if degs else 0
    hi = max(degs) if degs else 0
    regular = lo == hi
    return DegreeProfile(tuple(degs), lo, hi, regular, hi if regular else None)


def _signature_classes(h: Hypergraph) -> Optional[list]:
    """Group edges into translation-coherent classes under a partite layout.

    For layouts whose parts all have equal size s, each edge induces an
    offset signature (position in part j minus position in part 1, mod s).
    Edges sharing a signature form the natural candidate parallel classes;
    the grouping is returned only if it is a genuine decomposition.
    """
    if h.parts is None or not h.parts:
        return None
    sizes = {len(p) for p in h.parts}
    if len(sizes) != 1:
        return None
    s = sizes.pop()
    if s == 0 or sum(len(p) for p in h.parts) != h.n:
        return None
    pos = {}
    for p in h.parts:
        for rank, v in enumerate(sorted(p)):
            pos[v] = rank
    part_of = {}
    for j, p in enumerate(h.parts):
        for v in p:
            part_of[v] = j
    groups: dict = {}
    for idx, e in enumerate(h.edges):
        by_part = sorted(e, key=lambda v: part_of[v])
        if [part_of[v] for v in by_part] != list(range(len(h.parts))):
            return None
        base = pos[by_part[0]]
        sig = tuple((pos[v] - base) % s for v in by_part[1:])
        groups.setdefault(sig, []).append(idx)
    classes = list(groups.values())
    for cls in classes:
        covered = set()
        for idx in cls:
            covered.update(h.edges[idx])
        if len(covered) != h.n or len(cls) * h.r != h.n:
            return None
    return classes


def matching_decomposition(h: Hypergraph, budget: int = 2_000_000):
    """Partition the edges into perfect matchings, or report failure.

    Tries a translation-coherent fast path for equal-part layouts first,
    then falls back to exact-cover backtracking with a node budget.  Returns
    (MatchingDecomposition, None) on success and (None, reason) otherwise.
    """
    if h.n == 0 or h.m == 0:
        return MatchingDecomposition(()), None
    if h.n % h.r != 0:
        return None, "r does not divide n"
    per_class = h.n // h.r
    if h.m % per_class != 0:
        return None, "edge count not a multiple of n/r"
    prof = regularity_profile(h)
    if not prof.is_regular:
        return None, "not regular"
    fast = _signature_classes(h)
    if fast is not None:
        ordered = sorted(fast, key=lambda cls: h.edges[cls[0]])
        return MatchingDecomposition(tuple(tuple(c) for c in ordered)), None

    masks = h.edge_masks()
    full = (1 << h.n) - 1
    by_vertex = [[] for _ in range(h.n)]
    for idx, e in enumerate(h.edges):
        for v in e:
            by_vertex[v].append(idx)

    nodes = 0
    classes: list = []
    current: list = []
    used = [False] * h.m

    class _Budget(Exception):
        pass

    def fill_class(covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget()
        if covered == full:
            return assign_rest()
        v = ((covered + 1) & ~covered).bit_length() - 1  # lowest uncovered vertex
        for idx in by_vertex[v]:
            if used[idx] or (masks[idx] & covered):
                continue
            used[idx] = True
            current.append(idx)
            if fill_class(covered | masks[idx]):
                return True
            current.pop()
            used[idx] = False
        return False

    def assign_rest() -> bool:
        classes.append(tuple(current))
        current.clear()
        if len(classes) * per_class == h.m:
            return True
        if fill_class(0):
            return True
        current.extend(classes.pop())
        return False

    try:
        ok = fill_class(0)
    except _Budget:
        return None, "no decomposition found within budget"
    if not ok:
        return None, "no decomposition exists"
    return MatchingDecomposition(tuple(classes)), None


def read_hypergraph(text) -> Hypergraph:
    """Parse the text format.  Accepts a string or a readable stream."""
    if hasattr(text, "read"):
        text = text.read()
    n = r = m = None
    parts: dict = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            fields = {}
            for tok in tokens:
                if "=" not in tok:
                    raise ValueError(f"line {lineno}: malformed header token {tok!r}")
                key, _, val = tok.partition("=")
                try:
                    fields[key] = int(val)
                except ValueError:
                    raise ValueError(f"line {lineno}: non-integer header value {tok!r}")
            if sorted(fields) != ["m", "n", "r"]:
                raise ValueError(f"line {lineno}: header must define n, r and m")
            n, r, m = fields["n"], fields["r"], fields["m"]
            continue
        if tokens[0] == "part":
            if len(tokens) < 2:
                raise ValueError(f"line {lineno}: part line needs an index")
            j = int(tokens[1])
            if j in parts:
                raise ValueError(f"line {lineno}: duplicate part {j}")
            parts[j] = [int(t) for t in tokens[2:]]
            continue
        if tokens[0] == "e":
            vs = [int(t) for t in tokens[1:]]
            if len(vs) != r:
                raise ValueError(f"line {lineno}: edge has {len(vs)} vertices, expected {r}")
            if len(set(vs)) != len(vs):
                raise ValueError(f"line {lineno}: repeated vertex in edge")
            if any(v < 0 or v >= n for v in vs):
                raise ValueError(f"line {lineno}: vertex out of range")
            key = tuple(sorted(vs))
            edges.append((lineno, key))
            continue
        raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing header line")
    seen = set()
    for lineno, key in edges:
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    if len(edges) != m:
        raise ValueError(f"header declares m={m} but found {len(edges)} edges")
    layout = None
    if parts:
        if sorted(parts) != list(range(1, len(parts) + 1)):
            raise ValueError("part indices must be 1..k contiguous")
        layout = [parts[j] for j in sorted(parts)]
    return Hypergraph(n, r, [e for _, e in edges], layout)


def write_hypergraph(h: Hypergraph) -> str:
    """Canonical text form: header, parts, then edges sorted lexicographically."""
    lines = [f"n={h.n} r={h.r} m={h.m}"]
    if h.parts is not None:
        for j, p in enumerate(h.parts, start=1):
            lines.append("part " + str(j) + " " + " ".join(str(v) for v in sorted(p)))
    for e in sorted(h.edges):
        lines.append("e " + " ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"
