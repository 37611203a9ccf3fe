"""Slice genus of positive virtual knots.

For a positive diagram, |s_bar|/2 from Lee homology meets the genus of
the surface built over the oriented resolution, so both bounds agree.
"""

from vkhov.catalog import get
from vkhov.lee import canonical_generators, positive_slice_genus, rasmussen
from vkhov.smoothing import seifert_circle_count

for name in ("trefoil", "virtual_trefoil", "torus_2_5", "positive_genus2"):
    d = get(name)
    res = rasmussen(d)
    print(f"{name}: n={d.crossing_count} r={seifert_circle_count(d)} s_bar={res.s_bar} "
          f"slice genus={positive_slice_genus(d)}")

gen = canonical_generators(get("virtual_trefoil"))[0]
print("\nvirtual trefoil, first canonical generator")
print("  state:", gen.state)
print("  cycle colors:", gen.cycle_labels)
