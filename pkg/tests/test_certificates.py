import json
from fractions import Fraction

from gridfree.certificates import certificate, to_jsonable, write_certificate
from gridfree.detect import find_config, grid
from gridfree.hypergraph import Hypergraph, is_linear


def test_to_jsonable_handles_package_types():
    assert to_jsonable(Fraction(9, 5)) == "9/5"
    assert to_jsonable({1: {2, 3}}) == {"1": [2, 3]}
    assert to_jsonable((1, (2, 3))) == [1, [2, 3]]
    rep = is_linear(Hypergraph(5, 3, [(0, 1, 2), (0, 1, 3)]))
    out = to_jsonable(rep)
    assert out == {"ok": False, "witness": [0, 1], "shared": [0, 1]}


def test_witness_serializes_with_kind_name():
    h = Hypergraph(4, 2, [(0, 1), (2, 3), (1, 2), (0, 3)])
    w = find_config(h, grid(2, 2)).witness
    out = to_jsonable(w)
    assert out["kind"]["name"] == "grid"
    assert out["role_map"]["a_side"] == [0, 1]


def test_certificate_round_trips_through_json(tmp_path):
    cert = certificate(
        "verify",
        {"q": 7, "p": Fraction(1, 3)},
        [{"property": "linear", "verdict": "pass", "witness": None}],
        seed=11,
        elapsed_ms=4,
    )
    path = tmp_path / "cert.json"
    write_certificate(path, cert)
    back = json.loads(path.read_text())
    assert back["command"] == "verify"
    assert back["params"] == {"q": 7, "p": "1/3"}
    assert back["seed"] == 11
    assert back["results"][0]["verdict"] == "pass"
