"""Rasmussen invariant of the closures of (v sigma)^(2n).

Each closure is a positive diagram with 2n crossings and a single Seifert
circle, so s_bar = 2n and the slice genus is n. The full Lee filtration
is computed, not just the shortcut formula.
"""

import time

from vkhov.catalog import vsigma
from vkhov.lee import positive_s_min, rasmussen

for n in (1, 2, 3):
    d = vsigma(n)
    t0 = time.perf_counter()
    res = rasmussen(d)
    dt = time.perf_counter() - t0
    print(f"{d.name}: s_min={res.s_min} s_max={res.s_max} s_bar={res.s_bar} "
          f"(shortcut s_min={positive_s_min(d)}) genus in "
          f"[{res.lower_genus_bound}, {res.upper_genus_bound}]  {dt:.2f}s")

mirror = rasmussen(vsigma(2).mirror())
print("mirror of vsigma4: s_bar =", mirror.s_bar)
