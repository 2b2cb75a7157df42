"""Combinatorial crossing systems over an r x r grid of points.

A crossing system is two families P and R of r polylines each, every
polyline visiting one point per column of an r x r point grid (rows are
1..r, row 1 on top).  The axioms:

* C1: each family has exactly r polylines.
* C2: each family covers all r^2 grid points (a bijection per column).
* C3: any two polylines share at most one grid point.
* C4: every cross pair (p in P, rho in R) behaves like two crossing
  pseudolines: the sign of p_j - rho_j is zero at exactly one column,
  is constant on each side of that column, and the two sides (when both
  nonempty) have opposite signs.  A shared point at the first or last
  column leaves one side empty, which counts as a crossing at the border.

These axioms force a unique shape, up to swapping the family labels: two
diagonal polylines plus nested "top" and "bottom" hook-shaped paths, with
the two families interleaving by parity.  vs_families builds that shape,
crossing_structure_match tests a system against it, and
enumerate_crossings checks exhaustively (r <= 4) that every system
satisfying C1-C4 matches it.

The text format: a line `r=<int>`, one line of r row indices per polyline,
first family then a `--` separator, then the second family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .hypergraph import Hypergraph
from .numbers import centered

__all__ = [
    "CrossingSystem",
    "CrossingReport",
    "StructureMatch",
    "CrossingEnumeration",
    "crossing_verify",
    "crossing_structure_match",
    "enumerate_crossings",
    "vs_paths",
    "vs_families",
    "lines_to_crossing",
    "grid_witness_to_crossing",
]


@dataclass(frozen=True)
class CrossingSystem:
    r: int
    p_paths: tuple
    r_paths: tuple

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("grid needs r >= 2")
        for fam in (self.p_paths, self.r_paths):
            for path in fam:
                if len(path) != self.r:
                    raise ValueError(f"polyline {path} does not have {self.r} columns")
                if any(not 1 <= row <= self.r for row in path):
                    raise ValueError(f"polyline {path} leaves the grid")
        object.__setattr__(self, "p_paths", tuple(tuple(p) for p in self.p_paths))
        object.__setattr__(self, "r_paths", tuple(tuple(p) for p in self.r_paths))

    def to_text(self) -> str:
        lines = [f"r={self.r}"]
        lines.extend(" ".join(str(x) for x in p) for p in self.p_paths)
        lines.append("--")
        lines.extend(" ".join(str(x) for x in p) for p in self.r_paths)
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text) -> "CrossingSystem":
        if hasattr(text, "read"):
            text = text.read()
        r = None
        fams: list = [[], []]
        which = 0
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("r="):
                r = int(line[2:])
            elif line == "--":
                which = 1
            else:
                fams[which].append(tuple(int(t) for t in line.split()))
        if r is None:
            raise ValueError("missing r= header")
        return CrossingSystem(r, tuple(fams[0]), tuple(fams[1]))


@dataclass(frozen=True)
class CrossingReport:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    detail: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4

    def __bool__(self):
        return self.ok


def _pair_crossing_ok(p: tuple, q: tuple) -> bool:
    zeros = [j for j in range(len(p)) if p[j] == q[j]]
    if len(zeros) != 1:
        return False
    z = zeros[0]
    before = {p[j] > q[j] for j in range(z)}
    after = {p[j] > q[j] for j in range(z + 1, len(p))}
    if len(before) > 1 or len(after) > 1:
        return False
    if before and after and before == after:
        return False
    return True


def crossing_verify(c: CrossingSystem) -> CrossingReport:
    """Check axioms C1-C4 one by one; detail names the first failure."""
    r = c.r
    c1 = len(c.p_paths) == r and len(c.r_paths) == r
    full = set(range(1, r + 1))
    c2 = c1 and all(
        {path[j] for path in fam} == full
        for fam in (c.p_paths, c.r_paths)
        for j in range(r)
    )
    detail = None
    c3 = True
    all_paths = list(c.p_paths) + list(c.r_paths)
    for x, y in itertools.combinations(range(len(all_paths)), 2):
        common = sum(
            1 for j in range(r) if all_paths[x][j] == all_paths[y][j]
        )
        if common > 1:
            c3 = False
            detail = f"polylines {x} and {y} share {common} points"
            break
    c4 = True
    if c3:
        for p in c.p_paths:
            for q in c.r_paths:
                if not _pair_crossing_ok(p, q):
                    c4 = False
                    detail = f"pair {p} / {q} does not cross exactly once"
                    break
            if not c4:
                break
    if not c1 and detail is None:
        detail = "family sizes differ from r"
    elif not c2 and detail is None:
        detail = "a family does not cover the grid"
    return CrossingReport(c1, c2, c3, c4, detail)


def vs_paths(r: int) -> dict:
    """The hook-shaped reference polylines.

    top_j descends j, j-1, ..., 1 and then climbs 1, 2, ..., r-j (so
    top_r is the anti-diagonal); bottom_j climbs j, ..., r and then
    descends r, r-1, ..., r-j+2 (bottom_1 is the main diagonal).
    """
    top = {}
    bottom = {}
    for j in range(1, r + 1):
        top[j] = tuple(range(j, 0, -1)) + tuple(range(1, r - j + 1))
        bottom[j] = tuple(range(j, r + 1)) + tuple(range(r, r - j + 1, -1))
    return {"top": top, "bottom": bottom}


def vs_families(r: int):
    """The unique crossing shape: families split the hooks by parity."""
    ref = vs_paths(r)
    fam_a = frozenset(
        ref["top"][j] if j % 2 == 1 else ref["bottom"][j]
        for j in range(1, r + 1)
    )
    fam_b = frozenset(
        ref["bottom"][j] if j % 2 == 1 else ref["top"][j]
        for j in range(1, r + 1)
    )
    return fam_a, fam_b


@dataclass(frozen=True)
class StructureMatch:
    matched: bool
    swapped: Optional[bool] = None
    roles: Optional[dict] = None
    detail: Optional[str] = None

    def __bool__(self):
        return self.matched


def crossing_structure_match(c: CrossingSystem) -> StructureMatch:
    """Match a verified system against the unique reference shape.

    Allowed freedom: swapping the two family labels.  A verified system
    that does not match is returned as a counterexample (matched=False);
    an unverified system is a precondition error.
    """
    rep = crossing_verify(c)
    if not rep.ok:
        raise ValueError(f"system fails the crossing axioms: {rep.detail}")
    fam_a, fam_b = vs_families(c.r)
    got_p = frozenset(c.p_paths)
    got_r = frozenset(c.r_paths)
    if got_p == fam_a and got_r == fam_b:
        swapped = False
    elif got_p == fam_b and got_r == fam_a:
        swapped = True
    else:
        return StructureMatch(False, None, None, "families differ from the reference shape")
    ref = vs_paths(c.r)
    label = {}
    for j in range(1, c.r + 1):
        label[ref["top"][j]] = f"top_{j}"
        label[ref["bottom"][j]] = f"bottom_{j}"
    roles = {
        "P": tuple(label[p] for p in c.p_paths),
        "R": tuple(label[p] for p in c.r_paths),
    }
    return StructureMatch(True, swapped, roles)


# pair-state transition table for the exhaustive enumeration; states:
# 1 pre(+), 2 pre(-), 3 met at the first column, 4 met after (+),
# 5 met after (-), 6 post(+), 7 post(-); 0 = dead.  Indexed by sign of
# p_row - r_row as 0 (neg), 1 (zero), 2 (pos).
_TRANS = (
    None,
    (0, 4, 1),
    (2, 5, 0),
    (7, 0, 6),
    (7, 0, 0),
    (0, 0, 6),
    (0, 0, 6),
    (7, 0, 0),
)


@dataclass(frozen=True)
class CrossingEnumeration:
    r: int
    survivors: int
    all_vs: bool
    families: int  # candidate families per side


def enumerate_crossings(r: int) -> CrossingEnumeration:
    """Exhaust all ordered family pairs over the r x r grid (r <= 4).

    Polylines are labeled by their first-column row, so a family is a
    sequence of r-1 column-to-column permutations; that enumerates each
    family-as-a-set exactly once, (r!)^(r-1) per side.  Pairs are pruned
    column by column with the pair-state machine above, every survivor is
    re-verified with crossing_verify, and matched against the reference
    shape.  Returns the ordered-pair survivor count.
    """
    if not 2 <= r <= 4:
        raise ValueError("exhaustive enumeration is guarded to 2 <= r <= 4")
    perms = list(itertools.permutations(range(1, r + 1)))
    rr = range(r)
    init = []
    for i in range(1, r + 1):
        for k in range(1, r + 1):
            init.append(1 if i > k else (3 if i == k else 2))
    survivors = 0
    all_vs = True
    p_hist = [tuple(range(1, r + 1))]
    r_hist = [tuple(range(1, r + 1))]

    def dfs(col: int, states: list):
        nonlocal survivors, all_vs
        if col == r:
            if all(st >= 3 for st in states):
                p_fam = tuple(
                    tuple(vec[i] for vec in p_hist) for i in rr
                )
                r_fam = tuple(
                    tuple(vec[i] for vec in r_hist) for i in rr
                )
                system = CrossingSystem(r, p_fam, r_fam)
                if not crossing_verify(system).ok:
                    raise AssertionError("enumeration survivor fails re-verification")
                survivors += 1
                if not crossing_structure_match(system).matched:
                    all_vs = False
            return
        for sp in perms:
            for sr in perms:
                new = []
                dead = False
                idx = 0
                for i in rr:
                    pi = sp[i]
                    for k in rr:
                        d = pi - sr[k]
                        st = _TRANS[states[idx]][0 if d < 0 else (1 if d == 0 else 2)]
                        if st == 0:
                            dead = True
                            break
                        new.append(st)
                        idx += 1
                    if dead:
                        break
                if dead:
                    continue
                p_hist.append(sp)
                r_hist.append(sr)
                dfs(col + 1, new)
                p_hist.pop()
                r_hist.pop()

    dfs(1, init)
    return CrossingEnumeration(r, survivors, all_vs, len(perms) ** (r - 1))


def lines_to_crossing(
    y_vec: Sequence[int],
    m_vec: Sequence[int],
    mp_vec: Sequence[int],
    q: int,
) -> CrossingSystem:
    """Convert two families of lines over Z_q to a crossing system.

    Line i of the first family takes value y_i + (j-1)*m_i at column j;
    the second family uses slopes mp_vec.  Every cross pair must meet in
    exactly one column, and values are compared through their centered
    representatives, which is faithful while the line window stays inside
    (-q/2, q/2].  Rows are ranked by descending value within each column.
    """
    r = len(y_vec)
    if not (len(m_vec) == len(mp_vec) == r):
        raise ValueError("family sizes differ")

    def value(y, m, j):
        return centered(y + (j - 1) * m, q)

    meet_col: dict = {}
    col_values: dict = {j: {} for j in range(1, r + 1)}
    for i in range(r):
        for k in range(r):
            cols = [
                j
                for j in range(1, r + 1)
                if (y_vec[i] + (j - 1) * m_vec[i]) % q
                == (y_vec[k] + (j - 1) * mp_vec[k]) % q
            ]
            if len(cols) != 1:
                raise ValueError(
                    f"lines {i} and {k} meet in {len(cols)} columns, not 1"
                )
            j = cols[0]
            meet_col[(i, k)] = j
            v = value(y_vec[i], m_vec[i], j)
            col_values[j].setdefault(v, set()).add((i, k))
    rows: dict = {}
    for j in range(1, r + 1):
        vals = sorted(col_values[j], reverse=True)
        if len(vals) != r:
            raise ValueError(f"column {j} holds {len(vals)} points, not {r}")
        for row, v in enumerate(vals, start=1):
            for pair in col_values[j][v]:
                rows[pair] = row
    p_paths = []
    for i in range(r):
        path = [None] * r
        for k in range(r):
            path[meet_col[(i, k)] - 1] = rows[(i, k)]
        if None in path:
            raise ValueError(f"line {i} misses a column")
        p_paths.append(tuple(path))
    r_paths = []
    for k in range(r):
        path = [None] * r
        for i in range(r):
            path[meet_col[(i, k)] - 1] = rows[(i, k)]
        if None in path:
            raise ValueError(f"crossing line {k} misses a column")
        r_paths.append(tuple(path))
    return CrossingSystem(r, tuple(p_paths), tuple(r_paths))


def grid_witness_to_crossing(h: Hypergraph, witness) -> CrossingSystem:
    """Convert a square grid witness in a partite hypergraph to a
    crossing system: columns are the layout parts, rows rank the meeting
    vertices within a part by descending vertex id (descending y in the
    slope-construction encoding)."""
    if h.parts is None:
        raise ValueError("hypergraph has no partite layout")
    a_side = witness.role_map["a_side"]
    b_side = witness.role_map["b_side"]
    r = len(a_side)
    if len(b_side) != r or len(h.parts) != r:
        raise ValueError("witness is not a square grid over the parts")
    part_of = {}
    for pi, part in enumerate(h.parts):
        for v in part:
            part_of[v] = pi
    col_points: dict = {j: {} for j in range(r)}
    meet: dict = {}
    for i, ea in enumerate(a_side):
        sa = set(h.edges[ea])
        for k, eb in enumerate(b_side):
            inter = sa & set(h.edges[eb])
            if len(inter) != 1:
                raise ValueError("witness pair does not meet in one vertex")
            v = next(iter(inter))
            j = part_of[v]
            meet[(i, k)] = (j, v)
            col_points[j].setdefault(v, set()).add((i, k))
    rows: dict = {}
    for j in range(r):
        vals = sorted(col_points[j], reverse=True)
        if len(vals) != r:
            raise ValueError(f"part {j} holds {len(vals)} meeting vertices, not {r}")
        for row, v in enumerate(vals, start=1):
            for pair in col_points[j][v]:
                rows[pair] = row
    p_paths = []
    for i in range(r):
        path = [None] * r
        for k in range(r):
            j, _ = meet[(i, k)]
            path[j] = rows[(i, k)]
        if None in path:
            raise ValueError("an a-side edge misses a part")
        p_paths.append(tuple(path))
    r_paths = []
    for k in range(r):
        path = [None] * r
        for i in range(r):
            j, _ = meet[(i, k)]
            path[j] = rows[(i, k)]
        if None in path:
            raise ValueError("a b-side edge misses a part")
        r_paths.append(tuple(path))
    return CrossingSystem(r, tuple(p_paths), tuple(r_paths))
