"""Exact-arithmetic walkthrough of the two linear systems behind the
crossing analysis.

The 12x12 corner matrix has rank 10 for every r >= 4, and its
characteristic polynomial matches a single closed form in r.  The small
6x9 system that pins down three mutually crossing lines has a 4-dim
solution space spanned by the shift and scale parameters.
"""

from gridfree.linalg import (
    R3_PARAM_VECTORS,
    build_matrix_M,
    charpoly,
    charpoly_closed_form,
    r3_line_solution,
    r3_line_system,
    rank_nullspace,
)

for r in (4, 6, 9):
    mat = build_matrix_M(r)
    rank, basis = rank_nullspace(mat)
    cp = charpoly(mat)
    assert cp == charpoly_closed_form(r)
    lam2 = cp[-3]
    print(f"r={r}: rank {rank}, nullity {len(basis)}, "
          f"lambda^2 coeff {lam2} = 2r^2(r-3)(3r-10)")

print()
sysmat = r3_line_system()
rank, basis = rank_nullspace(sysmat)
print(f"line system: {len(sysmat.rows)}x{len(sysmat.rows[0])}, "
      f"rank {rank}, nullity {len(basis)}")
print("unknowns: (y1, y2, y3, m1, m2, m3, m1', m2', m3')")
for name, vec in R3_PARAM_VECTORS.items():
    print(f"  {name}: {vec}")

sol = r3_line_solution(0, 0, 1, 2)
print("\nconcrete solution at (y,m,a,b)=(0,0,1,2):")
print(f"  intercepts {sol[:3]}")
print(f"  slopes     {sol[3:6]} / {sol[6:]}")
