"""Randomized deletion: sample a family, then delete one edge (or one
whole parallel class) per forbidden configuration until none remain.

The victim rule is fixed so runs are reproducible: per-edge mode deletes
the lexicographically last edge of the first witness the detector finds;
per-class mode deletes the least-indexed class containing a witness edge.
After a normal termination the output is re-checked: every listed kind
must be absent.  Keep probabilities are exact rationals and the sampling
draws one integer per decision, so identical (input, seed) pairs give
identical outputs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .detect import ConfigKind, find_config
from .hypergraph import Hypergraph

__all__ = [
    "PurgeReport",
    "sample_edges",
    "purge_edges",
    "purge_classes",
    "classes_union",
    "random_avoidance_construct",
    "config_h_exponent",
]


def _as_probability(p) -> Fraction:
    f = Fraction(p)
    if not 0 <= f <= 1:
        raise ValueError(f"keep probability {p} outside [0, 1]")
    return f


def _bernoulli(rng: random.Random, p: Fraction) -> bool:
    # exact: P(randrange(d) < n) = n/d
    return rng.randrange(p.denominator) < p.numerator


def sample_edges(h: Hypergraph, p, seed: int) -> Hypergraph:
    """Keep each edge independently with probability p (exact rational)."""
    f = _as_probability(p)
    rng = random.Random(seed)
    kept = tuple(e for e in h.edges if _bernoulli(rng, f))
    return h.replace_edges(kept)


@dataclass(frozen=True)
class PurgeReport:
    """Accounting for one purge run.

    Sizes count edges in per-edge mode and classes in per-class mode, so
    final_size = initial_size - deleted either way.  found maps each kind
    (by its string form) to the number of copies that triggered a
    deletion; log records every deletion as (kind, victim, bucket) where
    the victim is an edge tuple or a class index.  complete is False when
    a detector ran out of budget, in which case absence is NOT certified.
    """

    initial_size: int
    found: dict
    deleted: int
    final_size: int
    complete: bool
    log: tuple
    by_bucket: Optional[dict] = None
    seed: Optional[int] = None


def purge_edges(
    h: Hypergraph,
    kinds: Sequence[ConfigKind],
    budget: Optional[int] = None,
    classify: Optional[Callable[[Hypergraph, object], object]] = None,
    seed: Optional[int] = None,
):
    """Delete the lexicographically last edge of each found configuration
    until every listed kind is absent.  classify(h, witness), when given,
    buckets each deletion (the grid type accounting of the recursive
    construction).  Returns (hypergraph, PurgeReport)."""
    kinds = tuple(kinds)
    cur = h
    found = {str(k): 0 for k in kinds}
    log: list = []
    buckets: Optional[dict] = {} if classify is not None else None
    complete = True
    while True:
        for kind in kinds:
            res = find_config(cur, kind, budget=budget)
            if res.verdict == "unknown":
                complete = False
                break
            if res.verdict == "found":
                w = res.witness
                found[str(kind)] += 1
                victim_idx = max(w.edge_indices, key=lambda i: cur.edges[i])
                victim = cur.edges[victim_idx]
                bucket = None
                if classify is not None:
                    bucket = classify(cur, w)
                    buckets[bucket] = buckets.get(bucket, 0) + 1
                log.append((str(kind), victim, bucket))
                cur = cur.replace_edges(
                    cur.edges[:victim_idx] + cur.edges[victim_idx + 1 :]
                )
                break
        else:
            break  # a full pass found nothing: absence verified per kind
        if not complete:
            break
    report = PurgeReport(
        initial_size=h.m,
        found=found,
        deleted=len(log),
        final_size=cur.m,
        complete=complete,
        log=tuple(log),
        by_bucket=buckets,
        seed=seed,
    )
    return cur, report


def classes_union(n: int, r: int, classes: Sequence[Sequence[Sequence[int]]]) -> Hypergraph:
    """The union hypergraph of edge-disjoint parallel classes."""
    edges = [e for cls in classes for e in cls]
    return Hypergraph(n, r, edges)


def purge_classes(
    n: int,
    r: int,
    classes: Sequence[Sequence[Sequence[int]]],
    kinds: Sequence[ConfigKind],
    budget: Optional[int] = None,
    seed: Optional[int] = None,
):
    """Delete whole classes: while the union of the kept classes contains
    a listed configuration, drop the least-indexed class owning one of the
    witness edges.  Classes must be pairwise edge-disjoint.  Returns
    (kept class indices, PurgeReport); sizes in the report count classes."""
    kinds = tuple(kinds)
    norm = [tuple(tuple(sorted(e)) for e in cls) for cls in classes]
    seen: set = set()
    for cls in norm:
        for e in cls:
            if e in seen:
                raise ValueError(f"classes share edge {e}")
            seen.add(e)
    kept = list(range(len(norm)))
    found = {str(k): 0 for k in kinds}
    log: list = []
    complete = True
    while True:
        edges = []
        owner = []
        for ci in kept:
            for e in norm[ci]:
                edges.append(e)
                owner.append(ci)
        cur = Hypergraph(n, r, edges)
        hit = False
        for kind in kinds:
            res = find_config(cur, kind, budget=budget)
            if res.verdict == "unknown":
                complete = False
                break
            if res.verdict == "found":
                victim = min(owner[i] for i in res.witness.edge_indices)
                found[str(kind)] += 1
                log.append((str(kind), victim, None))
                kept.remove(victim)
                hit = True
                break
        if not complete or not hit:
            break
    report = PurgeReport(
        initial_size=len(norm),
        found=found,
        deleted=len(log),
        final_size=len(kept),
        complete=complete,
        log=tuple(log),
        seed=seed,
    )
    return tuple(kept), report


def random_avoidance_construct(
    n: int,
    r: int,
    kinds: Sequence[ConfigKind],
    p,
    seed: int,
    budget: Optional[int] = None,
):
    """Sample the complete r-partite r-graph on parts of size n//r at
    keep probability p, then purge the listed kinds edge-wise.  Returns
    (hypergraph, PurgeReport); the report's initial size is the sample."""
    if r < 2:
        raise ValueError("uniformity must be >= 2")
    s = n // r
    if s < 1:
        raise ValueError("parts would be empty")
    if s**r > 10**7:
        raise ValueError("complete r-partite ground set too large to sample")
    f = _as_probability(p)
    rng = random.Random(seed)
    edges = []
    for combo in itertools.product(range(s), repeat=r):
        if _bernoulli(rng, f):
            edges.append(tuple(j * s + combo[j] for j in range(r)))
    parts = tuple(range(j * s, (j + 1) * s) for j in range(r))
    h = Hypergraph(r * s, r, edges, parts=parts)
    out, rep = purge_edges(h, kinds, budget=budget)
    report = PurgeReport(
        initial_size=rep.initial_size,
        found=rep.found,
        deleted=rep.deleted,
        final_size=rep.final_size,
        complete=rep.complete,
        log=rep.log,
        by_bucket=rep.by_bucket,
        seed=seed,
    )
    return out, report


def config_h_exponent(kind: ConfigKind) -> Fraction:
    """The deletion-method exponent h = (r*e - v)/(e - 1) of a
    configuration with e edges and v vertices, as an exact rational.
    For grids this is ab/(a+b-1) independent of the uniformity."""
    if kind.name == "grid":
        return Fraction(kind.a * kind.b, kind.a + kind.b - 1)
    if kind.name == "pairi2":
        return Fraction(2)
    if kind.name == "triangle":
        return Fraction(3, 2)
    if kind.name in ("pasch", "g6"):
        return Fraction(2)
    if kind.name == "g7":
        return Fraction(5, 3)
    if kind.name == "mitre":
        return Fraction(2)
    if kind.name == "prstar":
        return Fraction(2 * kind.a - 1, kind.a)
    raise ValueError(f"no exponent for kind {kind}")
