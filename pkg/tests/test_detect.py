import pytest

from gridfree.detect import (
    count_config,
    exhaustive_extremal,
    find_config,
    g6,
    g7,
    grid,
    is_steiner,
    latin_subconfig,
    mitre,
    pair_i2,
    parse_kind,
    pasch,
    prstar,
    steiner_e_sparse,
    check_vw_sparse,
    triangle,
    verify_witness,
)
from gridfree.hypergraph import Hypergraph
from gridfree.constructions import pg32_sts15, transversal

FANO = Hypergraph(
    7,
    3,
    [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)],
)

# rows and columns of a 3x3 point grid
GRID33 = Hypergraph(
    9,
    3,
    [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8)],
)


def test_kind_names_round_trip():
    assert str(grid(3, 2)) == "grid:2x3"  # sides are normalized
    assert str(prstar(4)) == "prstar:4"
    assert str(mitre()) == "mitre"
    for k in (grid(2, 3), triangle(), pair_i2(), pasch(), g6(), g7(), prstar(3)):
        assert parse_kind(str(k)) == k
    with pytest.raises(ValueError):
        parse_kind("grid:3")
    with pytest.raises(ValueError):
        parse_kind("hexagon")
    with pytest.raises(ValueError):
        prstar(2)


def test_pair_i2_detection():
    h = Hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    res = find_config(h, pair_i2())
    assert res.verdict == "found"
    assert res.witness.edge_indices == (0, 1)
    assert res.witness.vertex_map["shared"] == (0, 1)
    lin = Hypergraph(5, 3, [(0, 1, 2), (0, 3, 4)])
    assert find_config(lin, pair_i2()).verdict == "absent"


def test_triangle_detection_rejects_sunflower():
    tri = Hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5)])
    res = find_config(tri, triangle())
    assert res.verdict == "found"
    assert res.witness.vertex_map["shared"] == (0, 1, 3)
    sunflower = Hypergraph(7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6)])
    assert find_config(sunflower, triangle()).verdict == "absent"


def test_grid_counts_on_point_grid():
    assert count_config(GRID33, grid(3, 3)).count == 1
    assert count_config(GRID33, grid(2, 3)).count == 6
    assert count_config(GRID33, grid(2, 2)).count == 9
    w = find_config(GRID33, grid(3, 3)).witness
    assert set(w.role_map["a_side"]) | set(w.role_map["b_side"]) == {0, 1, 2, 3, 4, 5}


def test_grid_counts_are_relabeling_invariant():
    perm = [4, 7, 0, 2, 8, 5, 1, 6, 3]
    relabeled = Hypergraph(
        9, 3, [tuple(perm[v] for v in e) for e in GRID33.edges]
    )
    assert count_config(relabeled, grid(3, 3)).count == 1
    assert count_config(relabeled, grid(2, 3)).count == 6


def test_grid_22_is_a_four_cycle():
    square = Hypergraph(4, 2, [(0, 1), (2, 3), (1, 2), (0, 3)])
    res = find_config(square, grid(2, 2))
    assert res.verdict == "found"
    path = Hypergraph(4, 2, [(0, 1), (1, 2), (2, 3)])
    assert find_config(path, grid(2, 2)).verdict == "absent"


def test_pasch_and_g6_agree():
    quad = Hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)])
    assert find_config(quad, pasch()).verdict == "found"
    assert count_config(quad, pasch()).count == 1
    assert count_config(quad, g6()).count == 1
    assert find_config(FANO, pasch()).verdict == "found"


def test_g7_detection():
    h = Hypergraph(7, 3, [(0, 1, 2), (3, 4, 5), (0, 3, 6), (1, 4, 6)])
    res = find_config(h, g7())
    assert res.verdict == "found"
    assert res.witness.vertex_map["apex"] == 6
    # no shared apex for the crossing pair
    h2 = Hypergraph(8, 3, [(0, 1, 2), (3, 4, 5), (0, 3, 6), (1, 4, 7)])
    assert find_config(h2, g7()).verdict == "absent"


def test_mitre_detection():
    h = Hypergraph(
        7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (2, 4, 6)]
    )
    res = find_config(h, mitre())
    assert res.verdict == "found"
    assert res.witness.vertex_map["center"] == 0
    # a projective plane has no two disjoint lines, hence no mitre
    assert find_config(FANO, mitre()).verdict == "absent"
    # drop one cross line and the pattern dies
    h2 = Hypergraph(7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5)])
    assert find_config(h2, mitre()).verdict == "absent"


def test_prstar_detection():
    h = Hypergraph(7, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 6)])
    res = find_config(h, prstar(3))
    assert res.verdict == "found"
    assert res.witness.vertex_map["center"] == 0
    with pytest.raises(ValueError):
        find_config(h, prstar(4))
    h2 = Hypergraph(7, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5)])
    assert find_config(h2, prstar(3)).verdict == "absent"


def test_sts15_configuration_census():
    sts = pg32_sts15()
    assert is_steiner(sts)
    assert count_config(sts, pasch()).count == 105  # frozen exhaustive count
    assert count_config(sts, grid(3, 3)).count == 280  # frozen exhaustive count


def test_budget_exhaustion_reports_unknown():
    sts = pg32_sts15()
    res = find_config(sts, grid(3, 3), budget=5)
    assert res.verdict == "unknown" and res.witness is None
    cnt = count_config(sts, pasch(), budget=5)
    assert cnt.verdict == "unknown" and cnt.count is None


def test_witness_reverification_catches_tampering():
    w = find_config(GRID33, grid(3, 3)).witness
    assert verify_witness(GRID33, w)
    w.role_map["a_side"] = (0, 1, 3)  # a column among the rows
    assert not verify_witness(GRID33, w)


def test_vw_sparse_thresholds():
    rep = check_vw_sparse(GRID33, 6, 9)
    assert rep.verdict == "violation"
    assert rep.span == 9 and rep.witness == (0, 1, 2, 3, 4, 5)
    assert check_vw_sparse(GRID33, 6, 8).verdict == "sparse"
    assert check_vw_sparse(GRID33, 2, 5, budget=1).verdict == "unknown"
    with pytest.raises(ValueError):
        check_vw_sparse(GRID33, 1, 3)


def test_steiner_sparse_matches_pasch_presence():
    # four blocks spanning six points is exactly the quadrilateral
    rep = steiner_e_sparse(FANO, 4)
    assert rep.verdict == "violation"
    assert rep.span == 6
    with pytest.raises(ValueError):
        steiner_e_sparse(transversal(5, 3, [0, 1]), 4)


def test_latin_subconfig():
    add3 = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    rep = latin_subconfig(add3)
    assert rep.present
    assert rep.rows == (0, 1, 2) and rep.cols == (0, 1, 2)
    sub3 = [[(j - i) % 3 for j in range(3)] for i in range(3)]
    assert not latin_subconfig(sub3).present
    with pytest.raises(ValueError):
        latin_subconfig([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        latin_subconfig([[0, 1, 2], [1, 2, 0]])


def test_exhaustive_extremal_frozen_values():
    assert exhaustive_extremal(3, 3, [pair_i2()]).size == 1
    # the largest linear triple family on seven points is a projective plane
    res = exhaustive_extremal(7, 3, [pair_i2()])
    assert res.size == 7
    trial = Hypergraph(7, 3, res.family)
    assert find_config(trial, pair_i2()).verdict == "absent"
    small = exhaustive_extremal(6, 3, [pair_i2(), triangle(), grid(3, 3)])
    assert small.size == 2
    assert small.family == ((0, 1, 2), (0, 3, 4))


def test_exhaustive_extremal_with_callable_and_guard():
    res = exhaustive_extremal(5, 3, [lambda h: h.m > 1])
    assert res.size == 1
    with pytest.raises(ValueError):
        exhaustive_extremal(12, 3, [])
