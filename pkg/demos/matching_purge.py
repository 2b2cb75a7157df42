"""Random perfect-matching classes, then purge until the union is clean.

Each class is a perfect matching on 3n vertices built from two offsets.
We sample classes with a small probability, union them, and delete whole
classes while any forbidden pattern survives.
"""

from fractions import Fraction

from gridfree.constructions import random_classes
from gridfree.deletion import classes_union, purge_classes
from gridfree.detect import find_config, g6, g7, grid, pair_i2

n = 30
p = Fraction(1, 2 * round(n ** (4 / 3)))
kinds = (pair_i2(), g6(), g7(), grid(3, 3))

for seed in range(4):
    sample = random_classes(n, p, seed)
    kept, rep = purge_classes(3 * n, 3, sample.class_edges, kinds)
    union = classes_union(3 * n, 3, [sample.class_edges[i] for i in kept])
    tags = []
    for kind in kinds:
        res = find_config(union, kind)
        tags.append(f"{kind.name}={res.verdict}")
    print(f"seed {seed}: sampled {len(sample.class_edges)} classes, "
          f"kept {len(kept)}, union m={union.m}")
    print("  " + "  ".join(tags))
    if rep.log:
        for kind_name, cls, _ in rep.log:
            print(f"  deleted class {cls} (had {kind_name})")
