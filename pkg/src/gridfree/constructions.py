"""Explicit families: slope-set transversal designs, the pencil, Sidon
graphs, the xor Steiner triple system on 15 points, the six crossing
lines over Z_q, the recursive grid-free family, and random unions of
parallel classes.

Vertex encoding for all partite constructions: part j (1-based) holds
vertices (j-1)*q .. j*q - 1, so the point (j, y) has id (j-1)*q + y.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .deletion import PurgeReport, _as_probability, _bernoulli, purge_edges
from .detect import grid
from .hypergraph import Hypergraph, is_linear
from .numbers import IntSet, greedy_pattern_set, largest_prime_leq, SIDON_MOD_Q

__all__ = [
    "transversal",
    "small_slope_set",
    "pencil",
    "sidon_graph",
    "pg32_sts15",
    "crossing_lines_r3",
    "recursive_gridfree",
    "RecursiveReport",
    "random_classes",
    "ClassSample",
]


def _slope_list(slopes, q: int) -> list:
    if isinstance(slopes, IntSet):
        if slopes.modulus is not None and slopes.modulus != q:
            raise ValueError(
                f"slope set has modulus {slopes.modulus}, expected {q}"
            )
        ms = list(slopes.elements)
    else:
        ms = list(slopes)
    if len({m % q for m in ms}) != len(ms):
        raise ValueError("duplicate slopes mod q")
    return ms


def transversal(q: int, r: int, slopes) -> Hypergraph:
    """The family of lines A(y, m) = {(j, y + (j-1)m) : 1 <= j <= r} over
    Z_q, one edge per intercept y and slope m.  Edges are grouped by
    slope, so each slope block is a perfect matching (a parallel class).
    """
    if r < 2:
        raise ValueError("uniformity must be >= 2")
    if q < r:
        raise ValueError("modulus must be >= uniformity")
    ms = _slope_list(slopes, q)
    edges = []
    for m in ms:
        for y in range(q):
            edges.append(tuple(j * q + (y + j * m) % q for j in range(r)))
    parts = tuple(range(j * q, (j + 1) * q) for j in range(r))
    return Hypergraph(r * q, r, edges, parts=parts)


def small_slope_set(q: int, r: int) -> IntSet:
    """All slopes of centered magnitude below q/(4r): {0, 1, ..., k-1}
    with k = ceil(q/(4r)); collapses to {0} when q <= 4r."""
    if r < 2 or q < r:
        raise ValueError("need q >= r >= 2")
    k = -(-q // (4 * r))
    return IntSet(tuple(range(k)), modulus=q)


def pencil(n: int, r: int) -> Hypergraph:
    """All r-subsets of [0, n) that meet the fixed set {0, ..., r-2}.

    Any r pairwise-disjoint edges would need r distinct vertices inside
    an (r-1)-set, so the family contains no Grid(r, r).
    """
    if r < 2 or n < r:
        raise ValueError("need n >= r >= 2")
    s_top = r - 1
    edges = [
        c for c in itertools.combinations(range(n), r) if c[0] < s_top
    ]
    return Hypergraph(n, r, edges)


def sidon_graph(q: int) -> Hypergraph:
    """Bipartite graph on 2q vertices from a greedy mod-q Sidon slope
    set: edges {(1, y), (2, y + m)}.  Distinct slope differences force
    girth above 4."""
    if q < 2:
        raise ValueError("modulus must be >= 2")
    m = greedy_pattern_set(q, (SIDON_MOD_Q,))
    return transversal(q, 2, m)


def pg32_sts15() -> Hypergraph:
    """The Steiner triple system on the 15 nonzero vectors of a
    4-dimensional binary space: all triples {u, v, u xor v}; vertex id
    is the vector value minus 1."""
    edges = []
    for u in range(1, 16):
        for v in range(u + 1, 16):
            w = u ^ v
            if v < w:
                edges.append((u - 1, v - 1, w - 1))
    return Hypergraph(15, 3, edges)


def crossing_lines_r3(y: int, m: int, a: int, b: int, q: int) -> Hypergraph:
    """Six lines over the 3-part vertex set forming two crossing
    families: intercepts (y+4a+2b, y-2a+2b, y-2a-4b), first family
    slopes (m-3a, m-3b, m+3a+3b), second (m-3a-3b, m+3a, m+3b).

    All six slopes must be distinct mod q and every cross pair must meet
    in exactly one of the three columns, else ValueError.
    """
    if a <= 0 or b <= 0:
        raise ValueError("parameters a, b must be positive")
    if q < 3:
        raise ValueError("modulus must be >= 3")
    intercepts = (y + 4 * a + 2 * b, y - 2 * a + 2 * b, y - 2 * a - 4 * b)
    slopes_p = (m - 3 * a, m - 3 * b, m + 3 * a + 3 * b)
    slopes_r = (m - 3 * a - 3 * b, m + 3 * a, m + 3 * b)
    six = [s % q for s in slopes_p + slopes_r]
    if len(set(six)) != 6:
        raise ValueError("coincident slopes")

    def line(y0, m0):
        return tuple(j * q + (y0 + j * m0) % q for j in range(3))

    edges = [line(intercepts[i], slopes_p[i]) for i in range(3)]
    edges += [line(intercepts[k], slopes_r[k]) for k in range(3)]
    sets = [set(e) for e in edges]
    for i in range(3):
        for k in range(3, 6):
            if len(sets[i] & sets[k]) != 1:
                raise ValueError("a cross pair does not meet exactly once")
    for fam in (range(3), range(3, 6)):
        fam = list(fam)
        for x in range(3):
            for z in range(x + 1, 3):
                if sets[fam[x]] & sets[fam[z]]:
                    raise ValueError("lines within a family intersect")
    parts = tuple(range(j * q, (j + 1) * q) for j in range(3))
    return Hypergraph(3 * q, 3, edges, parts=parts)


@dataclass(frozen=True)
class RecursiveReport:
    """Accounting for one level of the recursive grid-free build.

    g[t] counts purged grids whose edges all came from the same origin:
    t=0 the base transversal, t=j (1-based) entirely inside part j;
    g_mixed counts grids spanning both.  size is the final edge count,
    base_size + sum(child_sizes) - deleted."""

    n: int
    r: int
    q: Optional[int]
    base_size: int
    child_sizes: tuple
    g: tuple
    g_mixed: int
    deleted: int
    size: int
    purge: Optional[PurgeReport]
    child_reports: tuple


def recursive_gridfree(n: int, r: int, seed: int):
    """Grid-free family by recursion: a full transversal design over the
    largest prime q <= n//r, a recursively built copy inside each part
    under a seeded shuffle, then one edge deleted per surviving
    Grid(r, r).  Output is verified linear and grid-free.  Returns
    (Hypergraph, RecursiveReport)."""
    if r < 4:
        raise ValueError("recursion needs uniformity >= 4")
    if n < r:
        raise ValueError("need n >= r")
    s = n // r
    q = largest_prime_leq(s) if s >= 2 else None
    if q is None or q < r:
        # no admissible prime at this scale: empty family, trivially fine
        report = RecursiveReport(
            n, r, q, 0, (), tuple([0] * (r + 1)), 0, 0, 0, None, ()
        )
        return Hypergraph(n, r, ()), report

    base = transversal(q, r, range(q))
    origin: dict = {}
    edges: list = []
    for e in base.edges:
        # part j of the q-grid maps into [j*s, j*s + q) of the n-grid
        g_e = tuple(j * s + (v - j * q) for j, v in enumerate(e))
        origin[g_e] = 0
        edges.append(g_e)

    child_sizes = []
    child_reports = []
    perm_rng = random.Random(seed * 1_000_003)
    for j in range(r):
        child, child_rep = recursive_gridfree(s, r, seed * 1_000_003 + j + 1)
        child_sizes.append(child.m)
        child_reports.append(child_rep)
        perm = list(range(s))
        perm_rng.shuffle(perm)
        for e in child.edges:
            g_e = tuple(sorted(j * s + perm[v] for v in e))
            origin[g_e] = j + 1
            edges.append(g_e)

    h = Hypergraph(n, r, edges)

    def classify(cur: Hypergraph, w) -> object:
        tags = {origin[cur.edges[i]] for i in w.edge_indices}
        if len(tags) == 1:
            return tags.pop()
        return "mixed"

    purged, rep = purge_edges(h, (grid(r, r),), classify=classify, seed=seed)
    if not rep.complete:
        raise AssertionError("grid purge did not terminate")
    lin = is_linear(purged)
    if not lin.ok:
        raise AssertionError(f"recursive family is not linear: {lin.witness}")
    buckets = rep.by_bucket or {}
    g = tuple(buckets.get(t, 0) for t in range(r + 1))
    report = RecursiveReport(
        n=n,
        r=r,
        q=q,
        base_size=base.m,
        child_sizes=tuple(child_sizes),
        g=g,
        g_mixed=buckets.get("mixed", 0),
        deleted=rep.deleted,
        size=purged.m,
        purge=rep,
        child_reports=tuple(child_reports),
    )
    return purged, report


@dataclass(frozen=True)
class ClassSample:
    """A union of parallel classes of the 3-partite line family:
    class (alpha, beta) holds the n edges {(1,y), (2,y+alpha), (3,y+beta)}.
    class_edges[i] lists the edges of classes[i]."""

    hypergraph: Hypergraph
    classes: tuple
    class_edges: tuple


def random_classes(n: int, p, seed: int) -> ClassSample:
    """Keep each of the n^2 parallel classes independently with exact
    probability p; classes are scanned in (alpha, beta) lexicographic
    order, one Bernoulli draw each."""
    if n < 2:
        raise ValueError("need n >= 2 for a 3-partite line family")
    f = _as_probability(p)
    rng = random.Random(seed)
    kept = []
    class_edges = []
    edges = []
    for alpha in range(n):
        for beta in range(n):
            if not _bernoulli(rng, f):
                continue
            cls = tuple(
                (y, n + (y + alpha) % n, 2 * n + (y + beta) % n)
                for y in range(n)
            )
            kept.append((alpha, beta))
            class_edges.append(cls)
            edges.extend(cls)
    parts = (range(n), range(n, 2 * n), range(2 * n, 3 * n))
    h = Hypergraph(3 * n, 3, edges, parts=parts)
    return ClassSample(h, tuple(kept), tuple(class_edges))
