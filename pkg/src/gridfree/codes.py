"""Union-free and cover-free families, superimposed-code reports, group testing.

A hypergraph doubles as a binary code: edge -> characteristic vector over
the n vertices.  The properties certified here:

* e-union-free: all unions of distinct nonempty subfamilies of size <= e
  are distinct.
* e-cover-free: no edge is contained in the union of e other edges.

Both checks are exact.  Union-freeness fingerprints every subfamily union
and confirms collisions against the actual vertex sets, so a hash collision
can never produce a false violation; cover-freeness does a tiny cover
search per edge.  Reports carry a three-valued verdict; budget exhaustion
is "unknown", never silently dropped.

Group testing uses the OR channel: the outcome of a defective edge set is
the bitwise OR of the codewords, and the cover decoder returns every edge
whose support lies inside the outcome.  When the family is e-cover-free the
decoder is exact for defective sets of size <= e.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .hypergraph import Hypergraph, is_linear, regularity_profile

__all__ = [
    "UnionFreeReport",
    "CoverFreeReport",
    "SuperimposedReport",
    "is_union_free",
    "is_cover_free",
    "superimposed_report",
    "gt_encode",
    "gt_decode",
    "outcome_to_hex",
    "hex_to_outcome",
]

_FP_MOD = (1 << 61) - 1


@dataclass(frozen=True)
class UnionFreeReport:
    verdict: str  # "union_free" | "violation" | "unknown"
    witness: Optional[tuple]  # (subfamily_a, subfamily_b) as index tuples
    subfamilies: int

    def __bool__(self):
        return self.verdict == "union_free"


def _subfamily_count(t: int, e: int) -> int:
    return sum(comb(t, k) for k in range(1, e + 1))


def _iter_subfamilies(t: int, e: int):
    for k in range(1, e + 1):
        yield from itertools.combinations(range(t), k)


def is_union_free(
    h: Hypergraph, e: int, budget: Optional[int] = 30_000_000
) -> UnionFreeReport:
    """Check that distinct subfamilies of size <= e have distinct unions.

    Two passes: the first records a 61-bit fingerprint of every subfamily
    union and finds repeated fingerprints; the second resolves only those,
    comparing exact unions.  budget caps the number of subfamilies.
    """
    if e < 1:
        raise ValueError("union-freeness needs e >= 1")
    t = h.m
    total = _subfamily_count(t, e)
    if budget is not None and total > budget:
        return UnionFreeReport("unknown", None, total)
    masks = h.edge_masks()

    fps = array("Q")
    for sub in _iter_subfamilies(t, e):
        u = 0
        for i in sub:
            u |= masks[i]
        fps.append(u % _FP_MOD)
    ordered = sorted(fps)
    dup_fps = set()
    for i in range(1, len(ordered)):
        if ordered[i] == ordered[i - 1]:
            dup_fps.add(ordered[i])
    del ordered
    if not dup_fps:
        return UnionFreeReport("union_free", None, total)

    by_union: dict = {}
    for sub in _iter_subfamilies(t, e):
        u = 0
        for i in sub:
            u |= masks[i]
        if u % _FP_MOD not in dup_fps:
            continue
        prev = by_union.get(u)
        if prev is not None:
            return UnionFreeReport("violation", (prev, sub), total)
        by_union[u] = sub
    return UnionFreeReport("union_free", None, total)


@dataclass(frozen=True)
class CoverFreeReport:
    verdict: str  # "cover_free" | "violation" | "unknown"
    witness: Optional[tuple]  # (covered edge index, covering index tuple)
    nodes: int

    def __bool__(self):
        return self.verdict == "cover_free"


def is_cover_free(
    h: Hypergraph, e: int, budget: Optional[int] = None
) -> CoverFreeReport:
    """Check that no edge lies in the union of e other edges.

    For each candidate edge the search branches on its lowest uncovered
    vertex, so only edges that actually advance the cover are tried; depth
    is bounded by e.
    """
    if e < 1:
        raise ValueError("cover-freeness needs e >= 1")
    masks = h.edge_masks()
    m = h.m
    by_vertex: list = [[] for _ in range(h.n)]
    for idx, edge in enumerate(h.edges):
        for v in edge:
            by_vertex[v].append(idx)
    nodes = 0

    def cover(target: int, uncovered: int, chosen: tuple, depth: int):
        nonlocal nodes
        if uncovered == 0:
            return chosen
        if depth == e:
            return None
        v = uncovered.bit_length() - 1  # highest uncovered vertex of target
        for j in by_vertex[v]:
            if j == target or j in chosen:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise _CoverBudget()
            hit = cover(target, uncovered & ~masks[j], chosen + (j,), depth + 1)
            if hit is not None:
                return hit
        return None

    try:
        for a0 in range(m):
            nodes += 1
            if budget is not None and nodes > budget:
                return CoverFreeReport("unknown", None, nodes)
            hit = cover(a0, masks[a0], (), 0)
            if hit is not None:
                return CoverFreeReport(
                    "violation", (a0, tuple(sorted(hit))), nodes
                )
    except _CoverBudget:
        return CoverFreeReport("unknown", None, nodes)
    return CoverFreeReport("cover_free", None, nodes)


class _CoverBudget(Exception):
    pass


@dataclass(frozen=True)
class SuperimposedReport:
    """The full optimal-code / optimal-design balance sheet for a family.

    An (r-1)-superimposed optimal code is linear, r-uniform, k-regular,
    (r-1)-cover-free with n*k = r*t; an optimal design is additionally
    r-union-free.  t0 counts edges carrying a degree-1 vertex, and the
    degree chain r*(t - t0) + t0 <= r*t <= k*(n - t0) + t0 must hold, as
    must ceil(n*k/r) >= t.
    """

    n: int
    t: int
    r: int
    k: Optional[int]
    linear: bool
    regular: bool
    cover_free: str  # verdict of the (r-1)-cover-free check
    union_free: str  # verdict of the r-union-free check
    nk_eq_rt: Optional[bool]
    t0: int
    chain_ok: Optional[bool]
    opt_inequality_ok: Optional[bool]
    optimal_code: Optional[bool]
    optimal_design: Optional[bool]


def superimposed_report(
    h: Hypergraph,
    union_budget: Optional[int] = 30_000_000,
    cover_budget: Optional[int] = None,
) -> SuperimposedReport:
    lin = is_linear(h).ok
    prof = regularity_profile(h)
    k = prof.k if prof.is_regular else None
    n, t, r = h.n, h.m, h.r
    cf = is_cover_free(h, r - 1, cover_budget)
    uf = is_union_free(h, r, union_budget)
    t0 = sum(
        1 for e in h.edges if any(prof.degrees[v] == 1 for v in e)
    )
    if k is not None:
        nk_eq_rt = n * k == r * t
        chain_ok = r * (t - t0) + t0 <= r * t <= k * (n - t0) + t0
        opt_ok = -(-n * k // r) >= t
    else:
        nk_eq_rt = None
        chain_ok = None
        opt_ok = None
    if cf.verdict == "unknown":
        optimal_code = None
    else:
        optimal_code = bool(
            lin
            and prof.is_regular
            and cf.verdict == "cover_free"
            and nk_eq_rt
        )
    if optimal_code is False:
        optimal_design = False
    elif optimal_code is None or uf.verdict == "unknown":
        optimal_design = None
    else:
        optimal_design = uf.verdict == "union_free"
    return SuperimposedReport(
        n=n,
        t=t,
        r=r,
        k=k,
        linear=lin,
        regular=prof.is_regular,
        cover_free=cf.verdict,
        union_free=uf.verdict,
        nk_eq_rt=nk_eq_rt,
        t0=t0,
        chain_ok=chain_ok,
        opt_inequality_ok=opt_ok,
        optimal_code=optimal_code,
        optimal_design=optimal_design,
    )


def gt_encode(h: Hypergraph, defective: Sequence[int]) -> int:
    """OR-channel outcome of a defective edge set, as a vertex bitmask."""
    masks = h.edge_masks()
    out = 0
    for i in defective:
        if not 0 <= i < h.m:
            raise IndexError(f"edge index {i} out of range")
        out |= masks[i]
    return out


def gt_decode(outcome: int, h: Hypergraph, e: Optional[int] = None) -> tuple:
    """All edges whose support lies inside the outcome, ascending.

    Recovers the defective set exactly whenever outcome = gt_encode(h, D)
    with |D| <= e and the family is e-cover-free.
    """
    masks = h.edge_masks()
    return tuple(i for i in range(h.m) if masks[i] & ~outcome == 0)


def outcome_to_hex(outcome: int, n: int) -> str:
    """Hex string of an outcome vector over n vertices (fixed width)."""
    width = max(1, (n + 3) // 4)
    if outcome < 0 or outcome >> n:
        raise ValueError("outcome has bits outside [0, n)")
    return format(outcome, f"0{width}x")


def hex_to_outcome(text: str) -> int:
    return int(text, 16)
