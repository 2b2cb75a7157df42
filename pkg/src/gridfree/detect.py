"""Exact detection and counting of forbidden configurations.

The configurations handled here are the ones the rest of the package cares
about when certifying a hypergraph:

* Grid(a, b): disjoint families A (a pairwise-disjoint edges) and B
  (b pairwise-disjoint edges) with |A_i meet B_j| = 1 for every pair.
* Triangle: three edges with pairwise singleton intersections in three
  distinct vertices.
* PairI2: two edges sharing at least two vertices (the linearity breaker).
* Pasch and G6: four triples with pairwise singleton intersections in six
  distinct vertices (the two names describe the same six-point pattern,
  one matcher serves both).
* G7: two disjoint triples plus two triples crossing both and meeting each
  other in a seventh, outside vertex.
* Mitre: three triples through a common center meeting only there, plus
  two disjoint triples picking one non-center vertex from each.
* PrStar(r): edges A, B sharing a single vertex d, plus r-1 pairwise
  disjoint edges each meeting A and B exactly once, away from d.

Searches are exact backtracking with an explicit node budget and a
three-valued outcome: found (validated witness), absent (exhaustive), or
unknown (budget ran out).  Budget exhaustion is never reported as absence.
Counting uses the same enumerators; copies are unordered (a grid copy is an
unordered pair of families, so a=b instances are not double counted).

The triple-system patterns (Pasch/G6, G7, Mitre) cannot occur when r != 3:
their span constraints force r = 3, so the searchers return absent at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from .hypergraph import Hypergraph, is_linear

__all__ = [
    "ConfigKind",
    "ConfigWitness",
    "SearchResult",
    "CountResult",
    "SparseReport",
    "LatinReport",
    "ExtremalResult",
    "grid",
    "triangle",
    "pair_i2",
    "pasch",
    "g6",
    "g7",
    "mitre",
    "prstar",
    "parse_kind",
    "find_config",
    "count_config",
    "verify_witness",
    "check_vw_sparse",
    "steiner_e_sparse",
    "latin_subconfig",
    "exhaustive_extremal",
]


@dataclass(frozen=True)
class ConfigKind:
    name: str
    a: Optional[int] = None
    b: Optional[int] = None

    def __str__(self):
        if self.name == "grid":
            return f"grid:{self.a}x{self.b}"
        if self.name == "prstar":
            return f"prstar:{self.a}"
        return self.name


def grid(a: int, b: int) -> ConfigKind:
    """Grid(a, b); sides are stored with a <= b since copies are unordered."""
    if a < 1 or b < 1:
        raise ValueError("grid sides must be >= 1")
    return ConfigKind("grid", min(a, b), max(a, b))


def triangle() -> ConfigKind:
    return ConfigKind("triangle")


def pair_i2() -> ConfigKind:
    return ConfigKind("pairi2")


def pasch() -> ConfigKind:
    return ConfigKind("pasch")


def g6() -> ConfigKind:
    return ConfigKind("g6")


def g7() -> ConfigKind:
    return ConfigKind("g7")


def mitre() -> ConfigKind:
    return ConfigKind("mitre")


def prstar(r: int) -> ConfigKind:
    if r < 3:
        raise ValueError("prstar needs r >= 3")
    return ConfigKind("prstar", r)


def parse_kind(text: str) -> ConfigKind:
    """Parse 'grid:2x3', 'prstar:4', or a bare kind name."""
    t = text.strip().lower()
    if t.startswith("grid:"):
        parts = t[5:].split("x")
        if len(parts) != 2:
            raise ValueError(f"bad grid spec {text!r}, expected grid:AxB")
        return grid(int(parts[0]), int(parts[1]))
    if t.startswith("prstar:"):
        return prstar(int(t[7:]))
    simple = {
        "triangle": triangle,
        "pairi2": pair_i2,
        "pasch": pasch,
        "g6": g6,
        "g7": g7,
        "mitre": mitre,
    }
    if t in simple:
        return simple[t]()
    raise ValueError(f"unknown configuration kind {text!r}")


@dataclass
class ConfigWitness:
    """A concrete copy of a configuration, by edge index.

    role_map assigns edges to the configuration's roles (for a grid the
    a_side and b_side families); vertex_map names special vertices such as
    a mitre's center.  Witnesses re-validate via verify_witness, which reads
    only h.edges and does its own set arithmetic.
    """

    kind: ConfigKind
    edge_indices: tuple
    role_map: dict
    vertex_map: Optional[dict] = None


@dataclass(frozen=True)
class SearchResult:
    verdict: str  # "found" | "absent" | "unknown"
    witness: Optional[ConfigWitness]
    nodes: int


@dataclass(frozen=True)
class CountResult:
    verdict: str  # "counted" | "unknown"
    count: Optional[int]
    nodes: int


class _Budget(Exception):
    pass


class _Search:
    """Shared state for one search: masks, vertex index, meet-1 adjacency."""

    def __init__(self, h: Hypergraph, budget: Optional[int]):
        self.h = h
        self.budget = budget
        self.nodes = 0
        self.masks = h.edge_masks()
        by_vertex: list = [[] for _ in range(h.n)]
        for idx, e in enumerate(h.edges):
            for v in e:
                by_vertex[v].append(idx)
        self.by_vertex = by_vertex
        self._meet1: dict = {}

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Budget()

    def meet1(self, i: int) -> dict:
        """Map from edge index j to the single shared vertex, |e_i & e_j| = 1."""
        cached = self._meet1.get(i)
        if cached is not None:
            return cached
        out: dict = {}
        seen = {i}
        mi = self.masks[i]
        for v in self.h.edges[i]:
            for j in self.by_vertex[v]:
                if j in seen:
                    continue
                seen.add(j)
                inter = mi & self.masks[j]
                if inter.bit_count() == 1:
                    out[j] = inter.bit_length() - 1
        self._meet1[i] = out
        return out


def _iter_pairi2(s: _Search):
    buckets: dict = {}
    emitted = set()
    for idx, e in enumerate(s.h.edges):
        s.tick()
        for u, v in itertools.combinations(e, 2):
            bucket = buckets.setdefault((u, v), [])
            for j in bucket:
                if (j, idx) in emitted:
                    continue
                emitted.add((j, idx))
                inter = s.masks[j] & s.masks[idx]
                shared = tuple(t for t in s.h.edges[idx] if inter >> t & 1)
                yield ConfigWitness(
                    pair_i2(),
                    (j, idx),
                    {"pair": (j, idx)},
                    {"shared": shared},
                )
            bucket.append(idx)


def _iter_triangle(s: _Search):
    m = s.h.m
    for i in range(m):
        s.tick()
        mi = s.meet1(i)
        cands = sorted(j for j in mi if j > i)
        for j in cands:
            s.tick()
            mj = s.meet1(j)
            for k in cands:
                if k <= j or k not in mj:
                    continue
                s.tick()
                x, y, z = mi[j], mi[k], mj[k]
                if x != y and x != z and y != z:
                    yield ConfigWitness(
                        triangle(),
                        (i, j, k),
                        {"edges": (i, j, k)},
                        {"shared": (x, y, z)},
                    )


def _iter_grid(s: _Search, a: int, b: int):
    h, masks = s.h, s.masks
    symmetric = a == b
    for i1 in range(h.m):
        s.tick()
        m1 = s.meet1(i1)
        bcands = sorted(j for j in m1 if j > i1) if symmetric else sorted(m1)

        def complete_a(acands, pos, amask, chosen_a, chosen_b):
            if len(chosen_a) == a - 1:
                a_side = (i1, *chosen_a)
                yield ConfigWitness(
                    grid(a, b),
                    tuple(sorted(a_side + chosen_b)),
                    {"a_side": a_side, "b_side": chosen_b},
                )
                return
            for t in range(pos, len(acands)):
                k = acands[t]
                if masks[k] & amask:
                    continue
                s.tick()
                yield from complete_a(
                    acands, t + 1, amask | masks[k], chosen_a + (k,), chosen_b
                )

        def choose_b(pos, bmask, chosen_b):
            if len(chosen_b) == b:
                maps = [s.meet1(j) for j in chosen_b]
                base = min(maps, key=len)
                acands = sorted(
                    k
                    for k in base
                    if k > i1
                    and not masks[k] & masks[i1]
                    and all(k in mp for mp in maps)
                )
                yield from complete_a(acands, 0, masks[i1], (), chosen_b)
                return
            for t in range(pos, len(bcands)):
                j = bcands[t]
                if masks[j] & bmask:
                    continue
                s.tick()
                yield from choose_b(t + 1, bmask | masks[j], chosen_b + (j,))

        yield from choose_b(0, 0, ())


def _iter_pasch(s: _Search):
    if s.h.r != 3:
        return
    m = s.h.m
    for i1 in range(m):
        s.tick()
        m1 = s.meet1(i1)
        cands = sorted(j for j in m1 if j > i1)
        for i2 in cands:
            s.tick()
            m2 = s.meet1(i2)
            for i3 in cands:
                if i3 <= i2 or i3 not in m2:
                    continue
                if m1[i2] == m1[i3] or m1[i2] == m2[i3] or m1[i3] == m2[i3]:
                    continue
                s.tick()
                m3 = s.meet1(i3)
                for i4 in cands:
                    if i4 <= i3 or i4 not in m2 or i4 not in m3:
                        continue
                    s.tick()
                    contacts = (m1[i2], m1[i3], m1[i4], m2[i3], m2[i4], m3[i4])
                    if len(set(contacts)) == 6:
                        yield ConfigWitness(
                            pasch(),
                            (i1, i2, i3, i4),
                            {"blocks": (i1, i2, i3, i4)},
                            {"span": tuple(sorted(set(contacts)))},
                        )


def _iter_g7(s: _Search):
    if s.h.r != 3:
        return
    masks, m = s.masks, s.h.m
    for i1 in range(m):
        s.tick()
        for i2 in range(i1 + 1, m):
            if masks[i1] & masks[i2]:
                continue
            s.tick()
            m1 = s.meet1(i1)
            m2 = s.meet1(i2)
            both = sorted(j for j in m1 if j in m2)
            outside = masks[i1] | masks[i2]
            for ta, ia in enumerate(both):
                s.tick()
                for ib in both[ta + 1 :]:
                    inter = masks[ia] & masks[ib]
                    if inter.bit_count() != 1:
                        continue
                    p = inter.bit_length() - 1
                    if outside >> p & 1:
                        continue
                    yield ConfigWitness(
                        g7(),
                        (i1, i2, ia, ib),
                        {"disjoint": (i1, i2), "cross": (ia, ib)},
                        {"apex": p},
                    )


def _iter_mitre(s: _Search):
    if s.h.r != 3:
        return
    masks = s.masks
    for center in range(s.h.n):
        through = s.by_vertex[center]
        if len(through) < 3:
            continue
        s.tick()
        cbit = 1 << center
        for i1, i2, i3 in itertools.combinations(through, 3):
            if (
                masks[i1] & masks[i2] != cbit
                or masks[i1] & masks[i3] != cbit
                or masks[i2] & masks[i3] != cbit
            ):
                continue
            s.tick()
            m1, m2, m3 = s.meet1(i1), s.meet1(i2), s.meet1(i3)
            cross = sorted(
                j
                for j in m1
                if j in m2 and j in m3 and not masks[j] & cbit
            )
            for ta, i4 in enumerate(cross):
                s.tick()
                for i5 in cross[ta + 1 :]:
                    if masks[i4] & masks[i5]:
                        continue
                    yield ConfigWitness(
                        mitre(),
                        (i1, i2, i3, i4, i5),
                        {"through_center": (i1, i2, i3), "cross": (i4, i5)},
                        {"center": center},
                    )


def _iter_prstar(s: _Search, rr: int):
    h, masks = s.h, s.masks
    for ia in range(h.m):
        s.tick()
        ma = s.meet1(ia)
        for ib in sorted(j for j in ma if j > ia):
            s.tick()
            d = ma[ib]
            mb = s.meet1(ib)
            cands = sorted(
                j
                for j in ma
                if j in mb and ma[j] != d and mb[j] != d
            )

            def pick(pos, used, chosen):
                if len(chosen) == rr - 1:
                    yield ConfigWitness(
                        prstar(rr),
                        tuple(sorted((ia, ib) + chosen)),
                        {"base": (ia, ib), "lines": chosen},
                        {"center": d},
                    )
                    return
                for t in range(pos, len(cands)):
                    j = cands[t]
                    if masks[j] & used:
                        continue
                    s.tick()
                    yield from pick(t + 1, used | masks[j], chosen + (j,))

            yield from pick(0, 0, ())


def _dispatch(s: _Search, kind: ConfigKind):
    if kind.name == "grid":
        return _iter_grid(s, kind.a, kind.b)
    if kind.name == "triangle":
        return _iter_triangle(s)
    if kind.name == "pairi2":
        return _iter_pairi2(s)
    if kind.name in ("pasch", "g6"):
        return _iter_pasch(s)
    if kind.name == "g7":
        return _iter_g7(s)
    if kind.name == "mitre":
        return _iter_mitre(s)
    if kind.name == "prstar":
        if s.h.r != kind.a:
            raise ValueError(
                f"prstar:{kind.a} needs a {kind.a}-uniform hypergraph, got r={s.h.r}"
            )
        return _iter_prstar(s, kind.a)
    raise ValueError(f"unknown configuration kind {kind.name!r}")


def find_config(
    h: Hypergraph, kind: ConfigKind, budget: Optional[int] = None
) -> SearchResult:
    """First copy of kind in h, in deterministic branch order.

    verdict is "found" with a re-validated witness, "absent" after an
    exhaustive search, or "unknown" when the node budget ran out.
    """
    s = _Search(h, budget)
    try:
        for w in _dispatch(s, kind):
            if not verify_witness(h, w):
                raise AssertionError(f"search produced an invalid witness: {w}")
            return SearchResult("found", w, s.nodes)
        return SearchResult("absent", None, s.nodes)
    except _Budget:
        return SearchResult("unknown", None, s.nodes)


def count_config(
    h: Hypergraph, kind: ConfigKind, budget: Optional[int] = None
) -> CountResult:
    """Exact number of unordered copies of kind in h."""
    s = _Search(h, budget)
    count = 0
    try:
        for w in _dispatch(s, kind):
            if not verify_witness(h, w):
                raise AssertionError(f"search produced an invalid witness: {w}")
            count += 1
        return CountResult("counted", count, s.nodes)
    except _Budget:
        return CountResult("unknown", None, s.nodes)


def verify_witness(h: Hypergraph, w: ConfigWitness) -> bool:
    """Re-validate a witness against the configuration definition.

    Uses only h.edges and plain set arithmetic, independent of the search
    machinery, so a bug in the enumerator cannot hide behind itself.
    """
    kind = w.kind

    def edge(i: int) -> set:
        return set(h.edges[i])

    idxs = list(w.edge_indices)
    if len(set(idxs)) != len(idxs):
        return False
    if kind.name == "pairi2":
        i, j = w.role_map["pair"]
        return i != j and len(edge(i) & edge(j)) >= 2
    if kind.name == "triangle":
        i, j, k = w.role_map["edges"]
        ij, ik, jk = edge(i) & edge(j), edge(i) & edge(k), edge(j) & edge(k)
        if not (len(ij) == len(ik) == len(jk) == 1):
            return False
        return len(ij | ik | jk) == 3
    if kind.name == "grid":
        a_side = w.role_map["a_side"]
        b_side = w.role_map["b_side"]
        if len(a_side) != kind.a or len(b_side) != kind.b:
            return False
        if set(a_side) & set(b_side):
            return False
        for side in (a_side, b_side):
            for x, y in itertools.combinations(side, 2):
                if edge(x) & edge(y):
                    return False
        for x in a_side:
            for y in b_side:
                if len(edge(x) & edge(y)) != 1:
                    return False
        return True
    if kind.name in ("pasch", "g6"):
        blocks = w.role_map["blocks"]
        if len(blocks) != 4:
            return False
        contacts = []
        for x, y in itertools.combinations(blocks, 2):
            inter = edge(x) & edge(y)
            if len(inter) != 1:
                return False
            contacts.append(next(iter(inter)))
        span = set()
        for x in blocks:
            span |= edge(x)
        return len(set(contacts)) == 6 and len(span) == 6
    if kind.name == "g7":
        i1, i2 = w.role_map["disjoint"]
        ia, ib = w.role_map["cross"]
        if edge(i1) & edge(i2):
            return False
        apex = edge(ia) & edge(ib)
        if len(apex) != 1 or apex & (edge(i1) | edge(i2)):
            return False
        for c in (ia, ib):
            for base in (i1, i2):
                if len(edge(c) & edge(base)) != 1:
                    return False
        return len(edge(i1) | edge(i2) | edge(ia) | edge(ib)) == 7
    if kind.name == "mitre":
        center = w.vertex_map["center"]
        t1, t2, t3 = w.role_map["through_center"]
        c1, c2 = w.role_map["cross"]
        for x, y in itertools.combinations((t1, t2, t3), 2):
            if edge(x) & edge(y) != {center}:
                return False
        if edge(c1) & edge(c2):
            return False
        for c in (c1, c2):
            if center in edge(c):
                return False
            for t in (t1, t2, t3):
                if len(edge(c) & edge(t)) != 1:
                    return False
        span = edge(t1) | edge(t2) | edge(t3) | edge(c1) | edge(c2)
        return len(span) == 7
    if kind.name == "prstar":
        ia, ib = w.role_map["base"]
        lines = w.role_map["lines"]
        base = edge(ia) & edge(ib)
        if len(base) != 1 or len(lines) != kind.a - 1:
            return False
        d = next(iter(base))
        for x, y in itertools.combinations(lines, 2):
            if edge(x) & edge(y):
                return False
        for c in lines:
            ca, cb = edge(c) & edge(ia), edge(c) & edge(ib)
            if len(ca) != 1 or len(cb) != 1 or d in ca or d in cb:
                return False
        return True
    raise ValueError(f"unknown configuration kind {kind.name!r}")


@dataclass(frozen=True)
class SparseReport:
    verdict: str  # "sparse" | "violation" | "unknown"
    witness: Optional[tuple]
    span: Optional[int]
    nodes: int

    def __bool__(self):
        return self.verdict == "sparse"


def check_vw_sparse(
    h: Hypergraph, e: int, v: int, budget: Optional[int] = None
) -> SparseReport:
    """True iff every e distinct edges of h span more than v vertices.

    A violation witness is the lexicographically least e-set of edge
    indices whose union has at most v vertices.
    """
    if e < 2:
        raise ValueError("sparseness needs e >= 2")
    masks = h.edge_masks()
    m = h.m
    nodes = 0

    def dfs(start, chosen, umask):
        nonlocal nodes
        if len(chosen) == e:
            return chosen, umask
        if m - start < e - len(chosen):
            return None
        for j in range(start, m):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _Budget()
            nu = umask | masks[j]
            if nu.bit_count() > v:
                continue
            hit = dfs(j + 1, chosen + (j,), nu)
            if hit is not None:
                return hit
        return None

    try:
        hit = dfs(0, (), 0)
    except _Budget:
        return SparseReport("unknown", None, None, nodes)
    if hit is None:
        return SparseReport("sparse", None, None, nodes)
    chosen, umask = hit
    return SparseReport("violation", chosen, umask.bit_count(), nodes)


def steiner_e_sparse(
    h: Hypergraph, e: int, budget: Optional[int] = None
) -> SparseReport:
    """Sparseness check at the Steiner threshold: e edges must span more
    than e(r-2)+2 vertices.  Requires h to be a Steiner system (every pair
    of vertices in exactly one edge)."""
    if not is_steiner(h):
        raise ValueError("hypergraph is not a Steiner system")
    return check_vw_sparse(h, e, e * (h.r - 2) + 2, budget)


def is_steiner(h: Hypergraph) -> bool:
    """Every pair of vertices lies in exactly one edge."""
    if not is_linear(h).ok:
        return False
    pairs_covered = h.m * h.r * (h.r - 1) // 2
    return pairs_covered == h.n * (h.n - 1) // 2


@dataclass(frozen=True)
class LatinReport:
    present: bool
    rows: Optional[tuple] = None
    cols: Optional[tuple] = None
    symbols: Optional[tuple] = None

    def __bool__(self):
        return self.present


def latin_subconfig(square: Sequence[Sequence]) -> LatinReport:
    """Search a latin square for the three-row, three-column pattern whose
    off-diagonal entries pair up symmetrically:

        .  a  b
        a  .  c
        b  c  .

    Diagonal cells are unconstrained.  Returns the first instance in
    row-then-column lexicographic order.
    """
    n = len(square)
    rows = [tuple(r) for r in square]
    if any(len(r) != n for r in rows):
        raise ValueError("not a square array")
    symbols = set(rows[0]) if n else set()
    for r in rows:
        if set(r) != symbols or len(set(r)) != n:
            raise ValueError("not a latin square: bad row")
    for j in range(n):
        col = {rows[i][j] for i in range(n)}
        if col != symbols:
            raise ValueError("not a latin square: bad column")
    for i1, i2, i3 in itertools.combinations(range(n), 3):
        for j1, j2, j3 in itertools.combinations(range(n), 3):
            if (
                rows[i1][j2] == rows[i2][j1]
                and rows[i1][j3] == rows[i3][j1]
                and rows[i2][j3] == rows[i3][j2]
            ):
                return LatinReport(
                    True,
                    (i1, i2, i3),
                    (j1, j2, j3),
                    (rows[i1][j2], rows[i1][j3], rows[i2][j3]),
                )
    return LatinReport(False)


@dataclass(frozen=True)
class ExtremalResult:
    size: int
    family: tuple


def exhaustive_extremal(
    n: int,
    r: int,
    forbidden: Iterable[Union[ConfigKind, Callable[[Hypergraph], bool]]],
    size_guard: int = 130,
) -> ExtremalResult:
    """Exact maximum edge count of an r-uniform family on n vertices that
    avoids every listed configuration, with one witness family.

    forbidden entries are ConfigKinds, or callables taking a Hypergraph and
    returning True when a violation is present.  Intended for tiny n; the
    guard rejects candidate spaces larger than size_guard edges.
    """
    forbidden = list(forbidden)
    cands = list(itertools.combinations(range(n), r))
    if len(cands) > size_guard:
        raise ValueError(
            f"candidate space {len(cands)} exceeds the guard {size_guard}"
        )

    def clean(family) -> bool:
        trial = Hypergraph(n, r, family)
        for f in forbidden:
            if isinstance(f, ConfigKind):
                res = find_config(trial, f)
                if res.verdict != "absent":
                    return False
            elif f(trial):
                return False
        return True

    best_size = 0
    best_family: tuple = ()

    def dfs(idx, family):
        nonlocal best_size, best_family
        if len(family) > best_size:
            best_size = len(family)
            best_family = tuple(family)
        if idx == len(cands) or len(family) + len(cands) - idx <= best_size:
            return
        e = cands[idx]
        family.append(e)
        if clean(family):
            dfs(idx + 1, family)
        family.pop()
        dfs(idx + 1, family)

    dfs(0, [])
    return ExtremalResult(best_size, best_family)
