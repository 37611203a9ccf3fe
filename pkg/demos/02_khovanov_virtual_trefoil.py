"""Khovanov homology of the virtual trefoil over Z, Q and Z/2.

The Z table has 2-torsion. The Z/2 ranks follow from it by universal
coefficients. In every case the graded Euler characteristic gives back J.
"""

from vkhov.catalog import get
from vkhov.homology import euler_characteristic_q, khovanov_homology, universal_coefficients_z2
from vkhov.smoothing import jones

d = get("virtual_trefoil")
for coeffs in ("Z", "Q", "Z2"):
    h = khovanov_homology(d, coeffs)
    print(f"Kh over {coeffs}:")
    print("  " + str(h).replace("\n", "\n  "))
    print(f"  chi = {euler_characteristic_q(h)}   J = {jones(d)}")

hz = khovanov_homology(d, "Z")
z2 = {k: g.free for k, g in khovanov_homology(d, "Z2").groups.items()}
print("Z/2 ranks predicted from Z:", universal_coefficients_z2(hz) == z2)
