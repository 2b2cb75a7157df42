import json

import pytest

from gridfree.cli import main
from gridfree.constructions import transversal
from gridfree.crossings import vs_families
from gridfree.hypergraph import Hypergraph, read_hypergraph, write_hypergraph
from gridfree.numbers import IntSet, check_pattern, sum_free

GRID33 = Hypergraph(
    9,
    3,
    [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8)],
)


def hfile(tmp_path, h, name="h.txt"):
    p = tmp_path / name
    p.write_text(write_hypergraph(h))
    return str(p)


def test_construct_then_verify_pass(tmp_path):
    out = tmp_path / "t.txt"
    assert main([
        "construct", "--kind", "transversal", "--q", "7", "--r", "3",
        "--slopes", "small", "--out", str(out),
    ]) == 0
    assert main([
        "verify", "--in", str(out), "--props", "linear,gridfree:3,trianglefree",
    ]) == 0


def test_verify_fails_on_nonlinear_transversal(tmp_path):
    path = hfile(tmp_path, transversal(8, 3, (0, 4)))
    assert main(["verify", "--in", path, "--props", "linear"]) == 1


def test_verify_json_certificate(tmp_path):
    path = hfile(tmp_path, GRID33)
    cert_path = tmp_path / "cert.json"
    code = main([
        "verify", "--in", path, "--props", "linear,gridfree:3",
        "--json", str(cert_path),
    ])
    assert code == 1
    cert = json.loads(cert_path.read_text())
    verdicts = {r["property"]: r["verdict"] for r in cert["results"]}
    assert verdicts == {"linear": "pass", "gridfree:3": "fail"}
    wit = next(r["witness"] for r in cert["results"] if r["property"] == "gridfree:3")
    assert sorted(wit["role_map"]["a_side"] + wit["role_map"]["b_side"]) == list(range(6))


def test_verify_unknown_budget(tmp_path):
    path = hfile(tmp_path, GRID33)
    assert main([
        "verify", "--in", path, "--props", "gridfree:3", "--max-nodes", "2",
    ]) == 2


def test_usage_errors(tmp_path):
    assert main(["verify", "--in", "no-such-file", "--props", "linear"]) == 3
    path = hfile(tmp_path, GRID33)
    assert main(["verify", "--in", path, "--props", "octagonfree"]) == 3
    assert main(["construct", "--kind", "bogus"]) == 3  # argparse rejects
    assert main(["construct", "--kind", "recursive", "--n", "20", "--r", "4"]) == 3
    assert main([]) == 3


def test_count_and_budget(tmp_path, capsys):
    path = hfile(tmp_path, GRID33)
    assert main(["count", "--in", path, "--config", "grid:3x3"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main([
        "count", "--in", path, "--config", "grid:3x3", "--max-nodes", "2",
    ]) == 2


def test_purge_writes_cleaned_family(tmp_path):
    path = hfile(tmp_path, GRID33)
    out = tmp_path / "purged.txt"
    cert_path = tmp_path / "purge.json"
    code = main([
        "purge", "--in", path, "--avoid", "grid:3x3",
        "--out", str(out), "--json", str(cert_path),
    ])
    assert code == 0
    cleaned = read_hypergraph(out.read_text())
    assert cleaned.m == 5
    cert = json.loads(cert_path.read_text())
    assert cert["results"]["deleted"] == 1
    assert main([
        "purge", "--in", path, "--avoid", "grid:3x3", "--max-nodes", "3",
        "--out", str(tmp_path / "x.txt"),
    ]) == 2


def test_numbers_behrend_and_check(tmp_path):
    out = tmp_path / "set.txt"
    assert main([
        "numbers", "--op", "behrend", "--q", "100", "--r", "2",
        "--out", str(out),
    ]) == 0
    s = IntSet.from_text(out.read_text())
    assert check_pattern(s, sum_free(2)).ok
    assert main([
        "numbers", "--op", "check", "--in", str(out), "--patterns", "sumfree:2",
    ]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("1\n2\n3\n")
    assert main([
        "numbers", "--op", "check", "--in", str(bad), "--patterns", "ap:3",
    ]) == 1


def test_numbers_minkowski(capsys):
    assert main(["numbers", "--op", "minkowski", "--q", "7", "--vec", "3,5"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["alpha"] == 3 and res["residues"] == [2, 1]


def test_rank_check_range(capsys):
    assert main(["rank-check", "--r", "4..6", "--lines"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert all("coeffs=match" in ln for ln in lines[:3])
    assert "parameters-span" in lines[3]


def test_crossing_commands(tmp_path, capsys):
    assert main(["crossing", "enumerate", "--r", "3"]) == 0
    assert "survivors=2" in capsys.readouterr().out
    a, b = vs_families(4)
    text = "r=4\n" + "\n".join(
        " ".join(str(x) for x in p) for p in sorted(a)
    ) + "\n--\n" + "\n".join(" ".join(str(x) for x in p) for p in sorted(b)) + "\n"
    path = tmp_path / "cross.txt"
    path.write_text(text)
    assert main(["crossing", "verify", "--in", str(path)]) == 0
    assert main(["crossing", "match", "--in", str(path)]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("r=3\n1 1 1\n2 2 2\n3 3 3\n--\n1 2 3\n2 3 1\n3 1 2\n")
    assert main(["crossing", "verify", "--in", str(bad)]) == 1


def test_codes_expectations(tmp_path):
    path = hfile(tmp_path, transversal(7, 3, (0, 1, 2)))
    assert main(["codes", "--in", path, "--expect", "code"]) == 0
    assert main(["codes", "--in", path, "--expect", "design"]) == 1
    assert main(["codes", "--in", path]) == 1  # union violation wins


def test_gt_encode_decode(tmp_path, capsys):
    path = hfile(tmp_path, transversal(7, 3, (1, 3)))
    assert main(["gt", "--in", path, "--defective", "2,9"]) == 0
    hexed = capsys.readouterr().out.strip()
    assert main(["gt", "--in", path, "--outcome", hexed]) == 0
    assert capsys.readouterr().out.split() == ["2", "9"]
    assert main(["gt", "--in", path]) == 3


def test_decompose_exit_codes(tmp_path, capsys):
    path = hfile(tmp_path, transversal(5, 3, (0, 2)))
    assert main(["decompose", "--in", path]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 2
    odd = hfile(
        tmp_path,
        Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5), (0, 3, 4)]),
        "odd.txt",
    )
    assert main(["decompose", "--in", odd]) == 1
    stripped = hfile(
        tmp_path,
        Hypergraph(15, 3, transversal(5, 3, (0, 2)).edges),
        "flat.txt",
    )
    assert main(["decompose", "--in", stripped, "--max-nodes", "1"]) == 2


def test_construct_random_classes_requires_and_uses_seed(tmp_path):
    out = tmp_path / "rc.txt"
    cert_path = tmp_path / "rc.json"
    assert main([
        "construct", "--kind", "random-classes", "--n", "4", "--p", "1/2",
    ]) == 3  # no seed
    assert main([
        "construct", "--kind", "random-classes", "--n", "4", "--p", "1/2",
        "--seed", "7", "--out", str(out), "--json", str(cert_path),
    ]) == 0
    h = read_hypergraph(out.read_text())
    assert h.n == 12 and h.m % 4 == 0
    cert = json.loads(cert_path.read_text())
    assert cert["seed"] == 7
    assert cert["results"]["m"] == h.m


def test_construct_crossing_lines(tmp_path):
    out = tmp_path / "cl.txt"
    assert main([
        "construct", "--kind", "crossing-lines", "--q", "101",
        "--a", "1", "--b", "2", "--out", str(out),
    ]) == 0
    h = read_hypergraph(out.read_text())
    assert h.m == 6 and h.parts is not None


def test_construct_sumfree_slopes_give_triangle_free_family(tmp_path):
    # slope elements stay below q/r, so sums never wrap the modulus and
    # the integer sum-free guarantee holds for the line arithmetic too
    out = tmp_path / "sf.txt"
    assert main([
        "construct", "--kind", "transversal", "--q", "53", "--r", "4",
        "--slopes", "sumfree", "--out", str(out),
    ]) == 0
    h = read_hypergraph(out.read_text())
    assert h.m % 53 == 0
    assert main(["verify", "--in", str(out), "--props", "trianglefree"]) == 0
