"""Exact rational linear algebra for the incidence systems in this package.

Everything here is integer or Fraction arithmetic; no floats.  The two
systems of interest:

* build_matrix_M(r): the 12x12 integer matrix whose rows express the
  incidence equations of a 4x4 line grid at the four corner regions,
  in unknowns (y_1..y_4, m_1..m_4, m'_1..m'_4).  Its rank is 10 for every
  r >= 4, its nullspace is spanned by the all-ones intercept shift and the
  all-ones slope shift, and its characteristic polynomial has the closed
  form returned by charpoly_closed_form.
* r3_line_system(): the 6x9 analogue for a 3x3 grid, in unknowns
  (y_1..y_3, m_1..m_3, m'_1..m'_3), whose 4-dimensional nullspace is
  spanned by the shift vectors together with the two generator directions
  used by the explicit r=3 grid construction.

charpoly follows the det(lambda*I - A) convention, so it is always monic;
it is computed by the Berkowitz method (division-free, exact on integers).
Rank comes from fraction-free (Bareiss) elimination and is cross-checked
against a Fraction Gauss-Jordan pass that also produces the nullspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = [
    "RationalMatrix",
    "build_matrix_M",
    "charpoly",
    "charpoly_closed_form",
    "rank_nullspace",
    "matvec",
    "r3_line_system",
    "r3_line_solution",
    "R3_PARAM_VECTORS",
]


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of exact rationals (ints allowed as entries)."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def matvec(a: RationalMatrix, v: Sequence) -> tuple:
    if len(v) != a.ncols:
        raise ValueError("dimension mismatch")
    return tuple(
        sum(row[j] * Fraction(v[j]) for j in range(a.ncols)) for row in a.rows
    )


def build_matrix_M(r: int) -> RationalMatrix:
    """The 12x12 incidence matrix of the corner equations of a 4-line grid.

    Columns are ordered (y_1..y_4, m_1..m_4, m'_1..m'_4).  The first six
    rows come from the top-left corner points, the last six from the
    bottom-right ones; entries grow linearly in r.
    """
    if r < 4:
        raise ValueError("needs r >= 4")
    rows = [
        (1, -1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0),
        (0, -1, 1, 0, 0, 0, 2, 0, 0, -2, 0, 0),
        (0, 0, 1, -1, 0, 0, 3, 0, 0, 0, 0, -3),
        (-1, 0, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0),
        (1, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2),
        (0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1),
        (0, -1, 0, 1, 0, 0, 0, r - 1, 0, -(r - 1), 0, 0),
        (-1, 0, 0, 1, 0, 0, 0, r - 2, -(r - 2), 0, 0, 0),
        (1, 0, -1, 0, r - 1, 0, 0, 0, 0, 0, -(r - 1), 0),
        (0, 0, -1, 1, 0, 0, 0, r - 3, 0, 0, -(r - 3), 0),
        (0, 1, -1, 0, 0, r - 2, 0, 0, 0, 0, -(r - 2), 0),
        (-1, 1, 0, 0, 0, r - 1, 0, 0, -(r - 1), 0, 0, 0),
    ]
    return RationalMatrix(tuple(rows))


def charpoly(a: RationalMatrix) -> tuple:
    """Coefficients of det(lambda*I - A), highest power first; exact.

    Berkowitz recursion over leading principal submatrices: each step
    convolves the previous characteristic vector with the Toeplitz column
    (1, -a, -R C, -R B C, ...) built from the new border row R, column C,
    and corner a.
    """
    n = a.nrows
    if n != a.ncols:
        raise ValueError("matrix is not square")
    if n == 0:
        return (Fraction(1),)
    m = a.rows
    poly = [Fraction(1), -m[0][0]]
    for i in range(1, n):
        row = m[i][:i]
        col = [m[j][i] for j in range(i)]
        corner = m[i][i]
        c = [Fraction(1), -corner]
        v = col
        for _ in range(i):
            c.append(-sum(row[j] * v[j] for j in range(i)))
            v = [
                sum(m[x][j] * v[j] for j in range(i)) for x in range(i)
            ]
        new = []
        for idx in range(i + 2):
            acc = Fraction(0)
            lo = max(0, idx - (len(c) - 1))
            for j in range(lo, min(idx, len(poly) - 1) + 1):
                acc += c[idx - j] * poly[j]
            new.append(acc)
        poly = new
    return tuple(poly)


def charpoly_closed_form(r: int) -> tuple:
    """Closed form of charpoly(build_matrix_M(r)), as polynomials in r.

    Kept as an independent reference for the rank-check command and the
    algebra test suite; the lambda^2 coefficient factors as
    2*r^2*(r-3)*(3*r-10), nonzero for every integer r >= 4.
    """
    return tuple(
        Fraction(c)
        for c in (
            1,
            -4,
            -(r**2) + 5 * r,
            2 * r**2 - 19 * r + 21,
            -6 * r**2 + 40 * r - 68,
            r**4 - 3 * r**3 + 15 * r**2 - 61 * r + 113,
            2 * r**4 - 30 * r**3 + 107 * r**2 - 99 * r - 94,
            2 * r**5 - 26 * r**4 + 120 * r**3 - 241 * r**2 + 123 * r + 132,
            r**5 - 21 * r**4 + 103 * r**3 - 210 * r**2 + 216 * r - 152,
            r**5 - 19 * r**4 + 143 * r**3 - 418 * r**2 + 412 * r,
            6 * r**4 - 38 * r**3 + 60 * r**2,
            0,
            0,
        )
    )


def _bareiss_rank(rows: list) -> int:
    # fraction-free elimination on a scaled integer copy
    if not rows:
        return 0
    nr, nc = len(rows), len(rows[0])
    a = []
    for row in rows:
        denom = lcm(*(x.denominator for x in row))
        a.append([int(x * denom) for x in row])
    rank = 0
    prev = 1
    pr = 0
    for pc in range(nc):
        pivot = next((i for i in range(pr, nr) if a[i][pc] != 0), None)
        if pivot is None:
            continue
        a[pr], a[pivot] = a[pivot], a[pr]
        for i in range(pr + 1, nr):
            for j in range(pc + 1, nc):
                a[i][j] = (a[pr][pc] * a[i][j] - a[i][pc] * a[pr][j]) // prev
            a[i][pc] = 0
        prev = a[pr][pc]
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank


def rank_nullspace(a: RationalMatrix):
    """Exact (rank, nullspace basis) of a.

    Rank is computed twice, by fraction-free integer elimination and by a
    Fraction Gauss-Jordan reduction; the two must agree.  The nullspace
    basis is read off the reduced form, one vector per free column with a
    1 in that column.
    """
    nr, nc = a.nrows, a.ncols
    rows = [list(r) for r in a.rows]
    pivots = []
    pr = 0
    for pc in range(nc):
        pivot = next((i for i in range(pr, nr) if rows[i][pc] != 0), None)
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = rows[pr][pc]
        rows[pr] = [x / inv for x in rows[pr]]
        for i in range(nr):
            if i != pr and rows[i][pc] != 0:
                f = rows[i][pc]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nr:
            break
    rank = len(pivots)
    ff_rank = _bareiss_rank([list(r) for r in a.rows])
    if ff_rank != rank:
        raise AssertionError(
            f"elimination disagreement: fraction-free rank {ff_rank}, "
            f"reduced rank {rank}"
        )
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * nc
        vec[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][f]
        basis.append(tuple(vec))
    return rank, tuple(basis)


def r3_line_system() -> RationalMatrix:
    """The 6x9 corner-equation system of a 3-line grid.

    Unknowns ordered (y_1, y_2, y_3, m_1, m_2, m_3, m'_1, m'_2, m'_3);
    each row states that two lines pass through a common point of the
    3x3 intersection pattern.
    """
    rows = (
        (1, -1, 0, 1, 0, 0, 0, -1, 0),
        (0, -1, 1, 0, 0, 2, 0, -2, 0),
        (-1, 0, 1, 0, 0, 1, -1, 0, 0),
        (1, 0, -1, 2, 0, 0, 0, 0, -2),
        (0, 1, -1, 0, 1, 0, 0, 0, -1),
        (-1, 1, 0, 0, 2, 0, -2, 0, 0),
    )
    return RationalMatrix(rows)


# Directions spanning the nullspace of r3_line_system: a global intercept
# shift, a global slope shift, and the two generator directions (a, b) of
# the explicit 3x3 grid family.
R3_PARAM_VECTORS = {
    "y": (1, 1, 1, 0, 0, 0, 0, 0, 0),
    "m": (0, 0, 0, 1, 1, 1, 1, 1, 1),
    "a": (4, -2, -2, -3, 0, 3, -3, 3, 0),
    "b": (2, 2, -4, 0, -3, 3, -3, 0, 3),
}


def r3_line_solution(y: int, m: int, a: int, b: int) -> tuple:
    """The (y_1..y_3, m_1..m_3, m'_1..m'_3) vector of the explicit family.

    Linear in all four parameters: intercepts (y+4a+2b, y-2a+2b, y-2a-4b),
    slopes (m-3a, m-3b, m+3a+3b) and (m-3a-3b, m+3a, m+3b).
    """
    out = [0] * 9
    for coeff, key in ((y, "y"), (m, "m"), (a, "a"), (b, "b")):
        vec = R3_PARAM_VECTORS[key]
        for i in range(9):
            out[i] += coeff * vec[i]
    return tuple(out)
