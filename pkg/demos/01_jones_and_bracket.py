"""Bracket, normalized bracket and Jones polynomial of a few small diagrams.

The virtual trefoil has only two classical crossings. Its Jones polynomial
in ``t`` has half-integer exponents, something no classical knot can do.
"""

from vkhov.catalog import get
from vkhov.smoothing import bracket_a, f_poly, jones, v_poly

for name in ("unknot", "trefoil", "figure_eight", "virtual_trefoil"):
    d = get(name)
    print(f"{name}  ({d.to_code() or 'empty code'})")
    print(f"  <K>(A) = {bracket_a(d)}")
    print(f"  f(A)   = {f_poly(d)}")
    print(f"  J(q)   = {jones(d)}")
    print(f"  V(t)   = {v_poly(d)}")
