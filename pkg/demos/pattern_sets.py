import sys

from gridfree.numbers import (
    A4,
    A6,
    IntSet,
    ap,
    behrend_set,
    check_pattern,
    minkowski_alpha,
    restricted_set,
)

# a large progression-free subset of [1, 10^4]
b = behrend_set(10**4, 2)
rep = check_pattern(b, ap(3))
print(f"behrend: {len(b)} elements, 3-AP free: {rep.ok}")
print(f"  first few: {b.elements[:8]}")

# slope residues avoiding three patterns at once, per prime
for q in (101, 499, 997):
    m = restricted_set(q, seed=2)
    s = IntSet(m.elements, modulus=q)
    oks = [check_pattern(s, kind).ok for kind in (ap(3), A4, A6)]
    print(f"restricted mod {q}: {m.elements}  ap/A4/A6 ok: {oks}")

# short vector scaling: alpha compresses every coordinate at once
q = 10007
vec = (3, 5, 1000, 9999, 77, 4242, 8888, 123)
res = minkowski_alpha(q, vec)
print(f"\nminkowski mod {q}: alpha={res.alpha}, bound={res.bound:.1f}")
print(f"  residues: {res.residues}")

sys.exit(0)
