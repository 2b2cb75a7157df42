import itertools

import pytest

from gridfree.crossings import (
    CrossingSystem,
    crossing_structure_match,
    crossing_verify,
    enumerate_crossings,
    lines_to_crossing,
    vs_families,
    vs_paths,
)
from gridfree.linalg import r3_line_solution

# C1-C3 hold but the paths never cross: horizontals against a cyclic shift
HORIZONTAL_VS_CYCLIC = CrossingSystem(
    3,
    ((1, 1, 1), (2, 2, 2), (3, 3, 3)),
    ((1, 2, 3), (2, 3, 1), (3, 1, 2)),
)


def vs_system(r, swap=False):
    a, b = vs_families(r)
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    return CrossingSystem(r, b, a) if swap else CrossingSystem(r, a, b)


def test_system_validation():
    with pytest.raises(ValueError):
        CrossingSystem(1, ((1,),), ((1,),))
    with pytest.raises(ValueError):
        CrossingSystem(3, ((1, 2),), ())
    with pytest.raises(ValueError):
        CrossingSystem(2, ((1, 3),), ((1, 2),))


def test_text_round_trip():
    c = vs_system(4)
    back = CrossingSystem.from_text(c.to_text())
    assert back == c
    with pytest.raises(ValueError):
        CrossingSystem.from_text("1 2\n--\n2 1\n")  # no r= header


def test_reference_families_verify_up_to_six():
    for r in range(2, 7):
        rep = crossing_verify(vs_system(r))
        assert rep.ok, rep.detail


def test_reference_paths_shape():
    for r in range(2, 8):
        ref = vs_paths(r)
        for j in range(1, r + 1):
            for path in (ref["top"][j], ref["bottom"][j]):
                assert len(path) == r
                assert path[0] == j
                assert all(1 <= row <= r for row in path)
                steps = [path[t + 1] - path[t] for t in range(r - 1)]
                assert all(s in (-1, 0, 1) for s in steps)
                # one flat step at the turn, none on the two diagonals
                assert steps.count(0) <= 1
        assert ref["top"][r] == tuple(range(r, 0, -1))
        assert ref["bottom"][1] == tuple(range(1, r + 1))


def test_families_split_hooks_by_parity():
    a, b = vs_families(4)
    ref = vs_paths(4)
    assert ref["top"][1] in a and ref["bottom"][2] in a
    assert ref["bottom"][1] in b and ref["top"][2] in b
    assert len(a) == len(b) == 4
    assert not (a & b)


def test_axiom_failures_are_reported_individually():
    rep = crossing_verify(HORIZONTAL_VS_CYCLIC)
    assert rep.c1 and rep.c2 and rep.c3 and not rep.c4
    assert not rep.ok and "cross" in rep.detail

    shared = CrossingSystem(3, ((1, 1, 2), (2, 3, 3), (3, 2, 1)),
                            ((1, 1, 2), (2, 3, 3), (3, 2, 1)))
    rep = crossing_verify(shared)
    assert not rep.c3 and "share" in rep.detail

    a, b = vs_families(3)
    short = CrossingSystem(3, tuple(sorted(a))[:2], tuple(sorted(b)))
    rep = crossing_verify(short)
    assert not rep.c1 and not rep.ok
    assert rep.c3 and rep.c4

    lopsided = CrossingSystem(
        3,
        ((1, 1, 1), (2, 2, 2), (3, 3, 3)),
        ((1, 1, 2), (2, 3, 3), (3, 2, 2)),
    )
    rep = crossing_verify(lopsided)
    assert not rep.c2 and not rep.ok


def test_structure_match_and_swap():
    m = crossing_structure_match(vs_system(3))
    assert m.matched and m.swapped is False
    roles = set(m.roles["P"]) | set(m.roles["R"])
    assert roles == {f"{side}_{j}" for side in ("top", "bottom") for j in (1, 2, 3)}
    for lbl, path in zip(m.roles["P"], vs_system(3).p_paths):
        side, j = lbl.split("_")
        assert vs_paths(3)[side][int(j)] == path
    m2 = crossing_structure_match(vs_system(4, swap=True))
    assert m2.matched and m2.swapped is True
    with pytest.raises(ValueError):
        crossing_structure_match(HORIZONTAL_VS_CYCLIC)


def test_enumeration_small_grids():
    e2 = enumerate_crossings(2)
    assert (e2.survivors, e2.all_vs, e2.families) == (2, True, 2)
    e3 = enumerate_crossings(3)
    assert (e3.survivors, e3.all_vs, e3.families) == (2, True, 36)
    with pytest.raises(ValueError):
        enumerate_crossings(5)


def test_enumeration_agrees_with_plain_brute_force():
    # independent oracle: no state machine, just the axiom checker over
    # every pair of first-column-normalized families
    r = 3
    perms = list(itertools.permutations(range(1, r + 1)))
    families = []
    for cols in itertools.product(perms, repeat=r - 1):
        families.append(
            tuple(
                tuple([i + 1] + [c[i] for c in cols]) for i in range(r)
            )
        )
    assert len(families) == 36
    survivors = []
    for p_fam in families:
        for r_fam in families:
            if crossing_verify(CrossingSystem(r, p_fam, r_fam)).ok:
                survivors.append((frozenset(p_fam), frozenset(r_fam)))
    a, b = vs_families(r)
    assert len(survivors) == enumerate_crossings(r).survivors == 2
    assert set(survivors) == {(a, b), (b, a)}


def test_lines_to_crossing_explicit_family():
    q = 101
    y1, y2, y3, m1, m2, m3, n1, n2, n3 = r3_line_solution(0, 0, 1, 2)
    c = lines_to_crossing((y1, y2, y3), (m1, m2, m3), (n1, n2, n3), q)
    rep = crossing_verify(c)
    assert rep.ok, rep.detail
    assert crossing_structure_match(c).matched


def test_lines_to_crossing_rejects_parallel_lines():
    with pytest.raises(ValueError):
        lines_to_crossing((0, 1), (0, 0), (0, 0), 7)
    with pytest.raises(ValueError):
        lines_to_crossing((0, 1), (0,), (0, 0), 7)
