"""Build a slope family over a prime modulus and certify it is linear.

Also shows what the certificate looks like when the modulus is composite
and the slope set hits a zero divisor.
"""

from gridfree.constructions import transversal
from gridfree.hypergraph import is_linear, packing_bound, write_hypergraph


def show(tag, h):
    rep = is_linear(h)
    bound = packing_bound(h.n, h.r)
    print(f"{tag}: n={h.n} r={h.r} m={h.m} (pair bound {bound})")
    if rep.ok:
        print("  linear: every vertex pair covered at most once")
    else:
        a, b = rep.witness
        print(f"  NOT linear: edges {a} and {b} share vertices {rep.shared}")
        print(f"    edge {a} = {h.edges[a]}")
        print(f"    edge {b} = {h.edges[b]}")


if __name__ == "__main__":
    good = transversal(13, 4, range(13))
    show("q=13 all slopes", good)

    # composite modulus: slopes 0 and 4 collide at 2*4 = 8 = 0 mod 8
    bad = transversal(8, 3, (0, 4))
    show("q=8 slopes {0,4}", bad)

    path = "/tmp/q13_family.txt"
    with open(path, "w") as f:
        f.write("# 13^2 lines, 4 points each\n")
        f.write(write_hypergraph(good))
    print(f"wrote {good.m} edges to {path}")
