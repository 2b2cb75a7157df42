"""Command line front end.

Exit codes: 0 every requested certification passed, 1 a property failed
(witness in the certificate), 2 a budget ran out before a verdict,
3 usage error.  Human-readable progress goes to stderr; machine output
(hypergraph files, set files, JSON certificates) goes to --out/--json
or stdout.  Randomized commands require an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import codes, constructions, crossings, deletion, detect, linalg, numbers
from .certificates import certificate, to_jsonable, write_certificate
from .hypergraph import (
    Hypergraph,
    is_linear,
    matching_decomposition,
    read_hypergraph,
    regularity_profile,
    write_hypergraph,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_h(path: str) -> Hypergraph:
    if path == "-":
        return read_hypergraph(sys.stdin)
    with open(path) as fh:
        return read_hypergraph(fh)


def _write_text(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _parse_props(spec: str) -> list:
    return [p.strip() for p in spec.split(",") if p.strip()]


def _eval_prop(h: Hypergraph, prop: str, budget):
    """One property of the mini-language -> (name, verdict, witness)."""
    absent_kinds = {
        "trianglefree": detect.triangle,
        "paschfree": detect.pasch,
        "mitrefree": detect.mitre,
    }
    if prop == "linear":
        rep = is_linear(h)
        wit = None if rep.ok else {"edges": rep.witness, "shared": rep.shared}
        return prop, ("pass" if rep.ok else "fail"), wit
    if prop.startswith("gridfree:"):
        arg = prop.split(":", 1)[1]
        sides = arg.split("x")
        if len(sides) == 1:
            kind = detect.grid(int(sides[0]), int(sides[0]))
        elif len(sides) == 2:
            kind = detect.grid(int(sides[0]), int(sides[1]))
        else:
            raise ValueError(f"bad property {prop!r}")
        res = detect.find_config(h, kind, budget=budget)
        verdict = {"absent": "pass", "found": "fail", "unknown": "unknown"}[res.verdict]
        return prop, verdict, res.witness
    if prop in absent_kinds:
        res = detect.find_config(h, absent_kinds[prop](), budget=budget)
        verdict = {"absent": "pass", "found": "fail", "unknown": "unknown"}[res.verdict]
        return prop, verdict, res.witness
    if prop.startswith("unionfree:"):
        e = int(prop.split(":", 1)[1])
        rep = codes.is_union_free(h, e, budget=budget or 30_000_000)
        verdict = {"union_free": "pass", "violation": "fail", "unknown": "unknown"}[
            rep.verdict
        ]
        return prop, verdict, rep.witness
    if prop.startswith("coverfree:"):
        e = int(prop.split(":", 1)[1])
        rep = codes.is_cover_free(h, e, budget=budget)
        verdict = {"cover_free": "pass", "violation": "fail", "unknown": "unknown"}[
            rep.verdict
        ]
        return prop, verdict, rep.witness
    if prop.startswith("sparse:"):
        _, e, v = prop.split(":")
        rep = detect.check_vw_sparse(h, int(e), int(v), budget=budget)
        verdict = {"sparse": "pass", "violation": "fail", "unknown": "unknown"}[
            rep.verdict
        ]
        return prop, verdict, rep.witness
    if prop.startswith("steinersparse:"):
        e = int(prop.split(":", 1)[1])
        rep = detect.steiner_e_sparse(h, e, budget=budget)
        verdict = {"sparse": "pass", "violation": "fail", "unknown": "unknown"}[
            rep.verdict
        ]
        return prop, verdict, rep.witness
    raise ValueError(f"unknown property {prop!r}")


def _aggregate(results) -> int:
    verdicts = [v for _, v, _ in results]
    if any(v == "fail" for v in verdicts):
        return EXIT_FAIL
    if any(v == "unknown" for v in verdicts):
        return EXIT_UNKNOWN
    return EXIT_PASS


def _slope_set(args) -> numbers.IntSet:
    policy = args.slopes
    q, r = args.q, args.r
    if policy == "all":
        return numbers.IntSet(tuple(range(q)), modulus=q)
    if policy == "small":
        return constructions.small_slope_set(q, r)
    if policy == "sumfree":
        # elements below q/r: coefficient sums up to r never wrap mod q,
        # so integer sum-freeness carries over to the slope arithmetic
        s = numbers.behrend_set((q - 1) // r, r)
        return numbers.IntSet(s.elements, modulus=q)
    if policy == "restricted":
        if args.seed is None:
            raise ValueError("--slopes restricted requires --seed")
        return numbers.restricted_set(q, args.seed)
    if policy == "sidon":
        return numbers.greedy_pattern_set(q, (numbers.SIDON_MOD_Q,))
    if policy == "file":
        if not args.slope_file:
            raise ValueError("--slopes file requires --slope-file")
        with open(args.slope_file) as fh:
            return numbers.IntSet.from_text(fh)
    raise ValueError(f"unknown slope policy {policy!r}")


def cmd_construct(args) -> int:
    t0 = time.monotonic()
    kind = args.kind
    report = None
    extra: dict = {}
    if kind == "transversal":
        if args.q is None or args.r is None:
            raise ValueError("transversal needs --q and --r")
        m = _slope_set(args)
        h = constructions.transversal(args.q, args.r, m)
        extra["slopes"] = list(m.elements)
    elif kind == "pencil":
        h = constructions.pencil(args.n, args.r)
    elif kind == "sidon":
        h = constructions.sidon_graph(args.q)
    elif kind == "sts15":
        h = constructions.pg32_sts15()
    elif kind == "crossing-lines":
        h = constructions.crossing_lines_r3(args.y, args.m, args.a, args.b, args.q)
    elif kind == "recursive":
        if args.seed is None:
            raise ValueError("recursive construction requires --seed")
        h, report = constructions.recursive_gridfree(args.n, args.r, args.seed)
    elif kind == "random-classes":
        if args.seed is None:
            raise ValueError("random class sampling requires --seed")
        sample = constructions.random_classes(args.n, Fraction(args.p), args.seed)
        h = sample.hypergraph
        extra["classes"] = list(sample.classes)
    elif kind == "random-partite":
        if args.seed is None:
            raise ValueError("random sampling requires --seed")
        kinds = [detect.parse_kind(k) for k in _parse_props(args.avoid or "")]
        h, report = deletion.random_avoidance_construct(
            args.n, args.r, kinds, Fraction(args.p), args.seed, budget=args.max_nodes
        )
    else:
        raise ValueError(f"unknown construction {kind!r}")
    _write_text(args.out, write_hypergraph(h))
    _log(f"constructed {kind}: n={h.n} r={h.r} m={h.m}")
    if args.json:
        params = {
            k: getattr(args, k)
            for k in ("q", "r", "n", "p", "y", "m", "a", "b", "slopes", "avoid")
            if getattr(args, k, None) is not None
        }
        results = {"n": h.n, "r": h.r, "m": h.m, **extra}
        if report is not None:
            results["report"] = to_jsonable(report)
        cert = certificate(
            "construct:" + kind,
            params,
            results,
            seed=args.seed,
            elapsed_ms=int(1000 * (time.monotonic() - t0)),
        )
        write_certificate(args.json, cert)
    return EXIT_PASS


def cmd_verify(args) -> int:
    t0 = time.monotonic()
    h = _read_h(args.infile)
    results = []
    for prop in _parse_props(args.props):
        name, verdict, witness = _eval_prop(h, prop, args.max_nodes)
        _log(f"{name}: {verdict}")
        results.append((name, verdict, witness))
    if args.json:
        cert = certificate(
            "verify",
            {"in": args.infile, "props": args.props, "max_nodes": args.max_nodes},
            [
                {"property": n, "verdict": v, "witness": to_jsonable(w)}
                for n, v, w in results
            ],
            elapsed_ms=int(1000 * (time.monotonic() - t0)),
        )
        write_certificate(args.json, cert)
    return _aggregate(results)


def cmd_count(args) -> int:
    h = _read_h(args.infile)
    kind = detect.parse_kind(args.config)
    res = detect.count_config(h, kind, budget=args.max_nodes)
    if res.verdict != "counted":
        _log(f"count {kind}: budget exhausted after {res.nodes} nodes")
        return EXIT_UNKNOWN
    print(res.count)
    return EXIT_PASS


def cmd_purge(args) -> int:
    t0 = time.monotonic()
    h = _read_h(args.infile)
    kinds = [detect.parse_kind(k) for k in _parse_props(args.avoid)]
    out, rep = deletion.purge_edges(h, kinds, budget=args.max_nodes)
    _write_text(args.out, write_hypergraph(out))
    _log(
        f"purge: {rep.initial_size} -> {rep.final_size} edges"
        f" ({rep.deleted} deleted, complete={rep.complete})"
    )
    if args.json:
        cert = certificate(
            "purge",
            {"in": args.infile, "avoid": args.avoid, "max_nodes": args.max_nodes},
            to_jsonable(rep),
            elapsed_ms=int(1000 * (time.monotonic() - t0)),
        )
        write_certificate(args.json, cert)
    return EXIT_PASS if rep.complete else EXIT_UNKNOWN


_PATTERN_NAMES = {
    "a4": lambda: numbers.A4,
    "a6": lambda: numbers.A6,
    "sidon": lambda: numbers.SIDON_MOD_Q,
}


def _parse_patterns(spec: str) -> list:
    out = []
    for tok in _parse_props(spec):
        if tok.startswith("ap:"):
            out.append(numbers.ap(int(tok.split(":", 1)[1])))
        elif tok.startswith("sumfree:"):
            out.append(numbers.sum_free(int(tok.split(":", 1)[1])))
        elif tok in _PATTERN_NAMES:
            out.append(_PATTERN_NAMES[tok]())
        else:
            raise ValueError(f"unknown pattern {tok!r}")
    return out


def cmd_numbers(args) -> int:
    op = args.op
    if op == "behrend":
        s = numbers.behrend_set(args.q, args.r)
    elif op == "small-slopes":
        s = constructions.small_slope_set(args.q, args.r)
    elif op == "restricted":
        if args.seed is None:
            raise ValueError("restricted sets require --seed")
        s = numbers.restricted_set(args.q, args.seed)
    elif op == "greedy":
        s = numbers.greedy_pattern_set(args.q, _parse_patterns(args.patterns))
    elif op == "minkowski":
        vec = tuple(int(t) for t in args.vec.split(","))
        res = numbers.minkowski_alpha(args.q, vec)
        print(json.dumps(to_jsonable(res)))
        return EXIT_PASS
    elif op == "check":
        if args.infile is None:
            raise ValueError("check needs --in")
        with open(args.infile) as fh:
            s = numbers.IntSet.from_text(fh)
        failed = False
        for kind in _parse_patterns(args.patterns):
            rep = numbers.check_pattern(s, kind)
            _log(f"{kind.name}: {'pass' if rep.ok else f'fail {rep.witness}'}")
            failed = failed or not rep.ok
        return EXIT_FAIL if failed else EXIT_PASS
    else:
        raise ValueError(f"unknown numbers operation {op!r}")
    _write_text(args.out, s.to_text())
    _log(f"{op}: {len(s.elements)} elements")
    return EXIT_PASS


def cmd_rank_check(args) -> int:
    lo, _, hi = args.r.partition("..")
    lo = int(lo)
    hi = int(hi) if hi else lo
    ok = True
    for r in range(lo, hi + 1):
        mat = linalg.build_matrix_M(r)
        cp = linalg.charpoly(mat)
        closed = linalg.charpoly_closed_form(r)
        rank, basis = linalg.rank_nullspace(mat)
        coeffs_ok = cp == closed
        null_ok = rank == 10 and len(basis) == 2 and all(
            all(x == 0 for x in linalg.matvec(mat, vec)) for vec in basis
        )
        ok = ok and coeffs_ok and null_ok
        print(
            f"r={r} rank={rank} nullity={len(basis)} "
            f"coeffs={'match' if coeffs_ok else 'MISMATCH'} "
            + " ".join(str(c) for c in cp)
        )
    if args.lines:
        sysmat = linalg.r3_line_system()
        rank, basis = linalg.rank_nullspace(sysmat)
        lines_ok = len(basis) == 4
        for name, vec in linalg.R3_PARAM_VECTORS.items():
            in_null = all(x == 0 for x in linalg.matvec(sysmat, vec))
            lines_ok = lines_ok and in_null
        print(f"line-system rank={rank} nullity={len(basis)} "
              f"{'parameters-span' if lines_ok else 'MISMATCH'}")
        ok = ok and lines_ok
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_crossing(args) -> int:
    action = args.action
    if action == "enumerate":
        res = crossings.enumerate_crossings(args.r)
        print(
            f"r={res.r} survivors={res.survivors} all_vs={res.all_vs}"
            f" families={res.families}"
        )
        return EXIT_PASS if res.all_vs else EXIT_FAIL
    if args.infile is None:
        raise ValueError(f"crossing {action} needs --in")
    if args.infile == "-":
        system = crossings.CrossingSystem.from_text(sys.stdin)
    else:
        with open(args.infile) as fh:
            system = crossings.CrossingSystem.from_text(fh)
    if action == "verify":
        rep = crossings.crossing_verify(system)
        _log(
            f"c1={rep.c1} c2={rep.c2} c3={rep.c3} c4={rep.c4}"
            + (f" ({rep.detail})" if rep.detail else "")
        )
        return EXIT_PASS if rep.ok else EXIT_FAIL
    if action == "match":
        m = crossings.crossing_structure_match(system)
        _log(
            f"matched={m.matched} swapped={m.swapped}"
            + (f" roles={m.roles}" if m.roles else f" ({m.detail})")
        )
        return EXIT_PASS if m.matched else EXIT_FAIL
    raise ValueError(f"unknown crossing action {action!r}")


def cmd_codes(args) -> int:
    h = _read_h(args.infile)
    rep = codes.superimposed_report(
        h,
        union_budget=args.max_nodes or 30_000_000,
        cover_budget=args.max_nodes,
    )
    print(json.dumps(to_jsonable(rep), indent=2))
    if args.expect:
        flag = rep.optimal_code if args.expect == "code" else rep.optimal_design
        if flag is None:
            return EXIT_UNKNOWN
        return EXIT_PASS if flag else EXIT_FAIL
    if "violation" in (rep.union_free, rep.cover_free):
        return EXIT_FAIL
    if "unknown" in (rep.union_free, rep.cover_free):
        return EXIT_UNKNOWN
    return EXIT_PASS


def cmd_gt(args) -> int:
    h = _read_h(args.infile)
    if args.defective is not None:
        defective = [int(t) for t in args.defective.split(",") if t.strip()]
        outcome = codes.gt_encode(h, defective)
        hexed = codes.outcome_to_hex(outcome, h.n)
        print(hexed)
        if args.outcome is None:
            decoded = codes.gt_decode(outcome, h, e=args.e)
            ok = tuple(sorted(defective)) == decoded
            _log(f"round-trip: {'pass' if ok else f'fail {decoded}'}")
            return EXIT_PASS if ok else EXIT_FAIL
    if args.outcome is not None:
        outcome = codes.hex_to_outcome(args.outcome)
        decoded = codes.gt_decode(outcome, h, e=args.e)
        print(" ".join(str(i) for i in decoded))
        return EXIT_PASS
    if args.defective is None:
        raise ValueError("gt needs --defective and/or --outcome")
    return EXIT_PASS


def cmd_decompose(args) -> int:
    h = _read_h(args.infile)
    dec, reason = matching_decomposition(h, budget=args.max_nodes or 2_000_000)
    if dec is None:
        _log(f"no decomposition: {reason}")
        return EXIT_UNKNOWN if "budget" in reason else EXIT_FAIL
    prof = regularity_profile(h)
    _log(f"decomposed into {len(dec.classes)} perfect matchings (k={prof.k})")
    for cls in dec.classes:
        print(" ".join(str(i) for i in cls))
    return EXIT_PASS


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gridfree",
        description="Build, verify, count, purge and encode grid-free set systems.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build a named family")
    pc.add_argument(
        "--kind",
        required=True,
        choices=[
            "transversal",
            "pencil",
            "sidon",
            "sts15",
            "crossing-lines",
            "recursive",
            "random-classes",
            "random-partite",
        ],
    )
    pc.add_argument("--q", type=int)
    pc.add_argument("--r", type=int)
    pc.add_argument("--n", type=int)
    pc.add_argument("--p", type=str, help="keep probability, exact rational")
    pc.add_argument("--y", type=int, default=0)
    pc.add_argument("--m", type=int, default=0)
    pc.add_argument("--a", type=int)
    pc.add_argument("--b", type=int)
    pc.add_argument(
        "--slopes",
        default="all",
        choices=["all", "small", "sumfree", "restricted", "sidon", "file"],
    )
    pc.add_argument("--slope-file")
    pc.add_argument("--avoid", help="comma list of configuration kinds")
    pc.add_argument("--seed", type=int)
    pc.add_argument("--max-nodes", type=int)
    pc.add_argument("--out", default="-")
    pc.add_argument("--json")
    pc.set_defaults(func=cmd_construct)

    pv = sub.add_parser("verify", help="certify properties of a family")
    pv.add_argument("--in", dest="infile", required=True)
    pv.add_argument("--props", required=True)
    pv.add_argument("--max-nodes", type=int)
    pv.add_argument("--json")
    pv.set_defaults(func=cmd_verify)

    pn = sub.add_parser("count", help="count copies of a configuration")
    pn.add_argument("--in", dest="infile", required=True)
    pn.add_argument("--config", required=True)
    pn.add_argument("--max-nodes", type=int)
    pn.set_defaults(func=cmd_count)

    pp = sub.add_parser("purge", help="delete edges until kinds are absent")
    pp.add_argument("--in", dest="infile", required=True)
    pp.add_argument("--avoid", required=True)
    pp.add_argument("--max-nodes", type=int)
    pp.add_argument("--out", default="-")
    pp.add_argument("--json")
    pp.set_defaults(func=cmd_purge)

    pm = sub.add_parser("numbers", help="integer pattern sets")
    pm.add_argument(
        "--op",
        required=True,
        choices=["behrend", "small-slopes", "restricted", "greedy", "minkowski", "check"],
    )
    pm.add_argument("--q", type=int)
    pm.add_argument("--r", type=int)
    pm.add_argument("--seed", type=int)
    pm.add_argument("--patterns", default="")
    pm.add_argument("--vec")
    pm.add_argument("--in", dest="infile")
    pm.add_argument("--out", default="-")
    pm.set_defaults(func=cmd_numbers)

    pr = sub.add_parser("rank-check", help="characteristic polynomial table")
    pr.add_argument("--r", required=True, help="single value or range A..B")
    pr.add_argument("--lines", action="store_true", help="also check the 6x9 line system")
    pr.set_defaults(func=cmd_rank_check)

    px = sub.add_parser("crossing", help="crossing system tools")
    px.add_argument("action", choices=["verify", "match", "enumerate"])
    px.add_argument("--in", dest="infile")
    px.add_argument("--r", type=int, default=3)
    px.set_defaults(func=cmd_crossing)

    pd = sub.add_parser("codes", help="superimposed code balance sheet")
    pd.add_argument("--in", dest="infile", required=True)
    pd.add_argument("--expect", choices=["code", "design"])
    pd.add_argument("--max-nodes", type=int)
    pd.set_defaults(func=cmd_codes)

    pg = sub.add_parser("gt", help="group testing encode/decode")
    pg.add_argument("--in", dest="infile", required=True)
    pg.add_argument("--defective")
    pg.add_argument("--outcome")
    pg.add_argument("--e", type=int)
    pg.set_defaults(func=cmd_gt)

    pq = sub.add_parser("decompose", help="split into perfect matchings")
    pq.add_argument("--in", dest="infile", required=True)
    pq.add_argument("--max-nodes", type=int)
    pq.set_defaults(func=cmd_decompose)

    return top


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return EXIT_PASS if code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        _log(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
