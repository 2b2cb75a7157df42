from fractions import Fraction

import pytest

from gridfree.constructions import random_classes, transversal
from gridfree.deletion import (
    classes_union,
    config_h_exponent,
    purge_classes,
    purge_edges,
    random_avoidance_construct,
    sample_edges,
)
from gridfree.detect import (
    ConfigKind,
    find_config,
    g7,
    grid,
    mitre,
    pair_i2,
    pasch,
    prstar,
    triangle,
)
from gridfree.hypergraph import Hypergraph, is_linear

GRID33 = Hypergraph(
    9,
    3,
    [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8)],
)


def test_sample_edges_extremes_and_determinism():
    h = transversal(7, 3, (0, 1, 2))
    assert sample_edges(h, 1, seed=5).m == h.m
    assert sample_edges(h, 0, seed=5).m == 0
    a = sample_edges(h, "1/3", seed=5)
    b = sample_edges(h, Fraction(1, 3), seed=5)
    assert a.edges == b.edges
    assert set(a.edges) <= set(h.edges)
    with pytest.raises(ValueError):
        sample_edges(h, "3/2", seed=5)


def test_purge_edges_removes_the_grid():
    out, rep = purge_edges(GRID33, (grid(3, 3),))
    assert rep.initial_size == 6 and rep.final_size == 5
    assert rep.deleted == 1 and rep.complete
    assert rep.found == {"grid:3x3": 1}
    # victim is the lexicographically last edge of the copy
    assert rep.log == (("grid:3x3", (6, 7, 8), None),)
    assert find_config(out, grid(3, 3)).verdict == "absent"
    assert (6, 7, 8) not in out.edges


def test_purge_edges_noop_when_clean():
    h = transversal(7, 3, (0, 1))
    out, rep = purge_edges(h, (pair_i2(), triangle()))
    assert out.edges == h.edges
    assert rep.deleted == 0 and rep.complete
    assert rep.found == {"pairi2": 0, "triangle": 0}


def test_purge_edges_budget_interrupts():
    out, rep = purge_edges(GRID33, (grid(3, 3),), budget=3)
    assert not rep.complete
    assert rep.deleted == 0
    assert out.edges == GRID33.edges


def test_purge_edges_classify_buckets():
    out, rep = purge_edges(
        GRID33, (grid(3, 3),), classify=lambda h, w: "all-rows-cols"
    )
    assert rep.by_bucket == {"all-rows-cols": 1}
    assert rep.log[0][2] == "all-rows-cols"


def test_classes_union_rejects_overlap():
    sample = random_classes(3, 1, seed=0)
    h = classes_union(9, 3, sample.class_edges)
    assert h.m == 27
    with pytest.raises(ValueError):
        classes_union(9, 3, sample.class_edges + (sample.class_edges[0],))


def test_purge_classes_leaves_disjoint_class_set():
    sample = random_classes(3, 1, seed=0)
    kept, rep = purge_classes(9, 3, sample.class_edges, (pair_i2(),))
    assert rep.complete
    assert rep.initial_size == 9
    assert rep.final_size == len(kept) == 9 - rep.deleted
    # surviving classes conflict in neither coordinate
    alphas = [sample.classes[i][0] for i in kept]
    betas = [sample.classes[i][1] for i in kept]
    assert len(set(alphas)) == len(alphas)
    assert len(set(betas)) == len(betas)
    union = classes_union(9, 3, [sample.class_edges[i] for i in kept])
    assert find_config(union, pair_i2()).verdict == "absent"
    assert is_linear(union).ok


def test_purge_classes_victim_is_least_owner():
    # two classes sharing a pair: the lower index goes first
    cls0 = ((0, 3, 6), (1, 4, 7), (2, 5, 8))
    cls1 = ((0, 3, 7), (1, 4, 8), (2, 5, 6))
    kept, rep = purge_classes(9, 3, (cls0, cls1), (pair_i2(),))
    assert kept == (1,)
    assert rep.log == (("pairi2", 0, None),)


def test_random_avoidance_construct_linearizes():
    out, rep = random_avoidance_construct(9, 3, (pair_i2(),), 1, seed=2)
    assert rep.initial_size == 27
    assert rep.complete and rep.seed == 2
    assert out.m == rep.final_size == 27 - rep.deleted
    assert is_linear(out).ok
    assert out.parts is not None
    with pytest.raises(ValueError):
        random_avoidance_construct(3 * 500, 3, (pair_i2(),), 1, seed=2)


def test_h_exponent_closed_forms():
    assert config_h_exponent(grid(3, 3)) == Fraction(9, 5)
    assert config_h_exponent(grid(4, 4)) == Fraction(16, 7)
    assert config_h_exponent(grid(2, 2)) == Fraction(4, 3)
    assert config_h_exponent(pair_i2()) == 2
    assert config_h_exponent(triangle()) == Fraction(3, 2)
    assert config_h_exponent(pasch()) == 2
    assert config_h_exponent(g7()) == Fraction(5, 3)
    assert config_h_exponent(mitre()) == 2
    assert config_h_exponent(prstar(4)) == Fraction(7, 4)
    with pytest.raises(ValueError):
        config_h_exponent(ConfigKind("weird", 0, 0))


def test_h_exponent_matches_edge_vertex_count():
    # h = (r*e - v)/(e - 1) recomputed from a concrete copy of each kind
    examples = [
        (GRID33, grid(3, 3)),
        (GRID33, grid(2, 3)),
        (Hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5)]), triangle()),
        (Hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)]), pasch()),
        (Hypergraph(7, 3, [(0, 1, 2), (3, 4, 5), (0, 3, 6), (1, 4, 6)]), g7()),
        (
            Hypergraph(
                7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (2, 4, 6)]
            ),
            mitre(),
        ),
        (Hypergraph(7, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 6)]), prstar(3)),
        (
            Hypergraph(
                13,
                4,
                [
                    (0, 1, 2, 3),
                    (0, 4, 5, 6),
                    (1, 4, 7, 8),
                    (2, 5, 9, 10),
                    (3, 6, 11, 12),
                ],
            ),
            prstar(4),
        ),
    ]
    for h, kind in examples:
        res = find_config(h, kind)
        assert res.verdict == "found", str(kind)
        e = len(res.witness.edge_indices)
        span = set()
        for i in res.witness.edge_indices:
            span.update(h.edges[i])
        v = len(span)
        assert config_h_exponent(kind) == Fraction(h.r * e - v, e - 1), str(kind)
