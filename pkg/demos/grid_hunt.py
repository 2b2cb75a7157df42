"""Hunt for a 3x3 grid in a small hand-tuned line family.

Six lines over Z_101 are chosen so that three of them cross the other
three in nine distinct points.  The detector finds the witness, and the
slope multiset explains why: the six slopes form the {x-b, x-a, x-a-b,
x+a, x+b, x+a+b} pattern around zero, which is exactly the arithmetic
obstruction the slope filters exclude.
"""

from gridfree.constructions import crossing_lines_r3, transversal
from gridfree.crossings import crossing_verify, grid_witness_to_crossing
from gridfree.detect import find_config, grid
from gridfree.numbers import A6, IntSet, check_pattern, restricted_set

Q = 101

h = crossing_lines_r3(0, 0, 1, 2, Q)
print(f"six lines over Z_{Q}, {h.n} vertices")

res = find_config(h, grid(3, 3))
print(f"grid(3,3): {res.verdict}, witness {res.witness}")

system = grid_witness_to_crossing(h, res.witness)
ver = crossing_verify(system)
print(f"as a crossing system: ok={ver.ok}")

slopes = sorted((e[1] - Q - e[0]) % Q for e in h.edges)
s = IntSet(tuple(slopes), modulus=Q)
print(f"slopes (centered): {s.elements}")
rep = check_pattern(s, A6)
print(f"six-point pattern present: {not rep.ok}, witness {rep.witness}")

# a slope set built to dodge that pattern gives a grid-free family
m = restricted_set(Q, seed=2)
clean = transversal(Q, 3, m)
print(f"\nrestricted slopes {m.elements}: m={clean.m}")
print(f"grid(3,3): {find_config(clean, grid(3, 3)).verdict}")
