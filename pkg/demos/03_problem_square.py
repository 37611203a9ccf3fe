"""Why virtual diagrams need signs and bars.

In the 2-crossing virtual unknot, one face of the cube is a split followed
by a merge on one path and two single-cycle maps on the other. Without
corrections, m(Delta(1)) = 2X, so the face does not commute. The bar map
at the cut loci together with the order signs makes it vanish.
"""

from vkhov.algebra import F5, KHOVANOV, mul_comul_diagnostic, problem_square
from vkhov.catalog import get
from vkhov.cube import SignedCube, check_d2, face_paths
from vkhov.orientation import cut_loci

print("algebra:", {k: str(v) for k, v in problem_square(KHOVANOV).items()})
print("with X^2 = hX + t the leftover is", [str(v) for v in mul_comul_diagnostic(F5)])

d = get("virtual_unknot")
print(f"\ndiagram {d.to_code()}, cut loci on arcs {sorted(cut_loci(d))}")
for corrections in ("none", "full"):
    cube = SignedCube(d, corrections=corrections)
    print(f"\ncorrections={corrections}")
    print(cube.dump())
    print("  face from label 1:", face_paths(cube, 0, 0, 1, (0,)))
    print("  d^2 = 0:", check_d2(cube).ok)
