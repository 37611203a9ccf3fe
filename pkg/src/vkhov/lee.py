"""Lee theory (``X^2 = 1`` over Q): canonical generators and s-invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from .algebra import LEE, AlgebraElement, bar, comul, mul, Tensor2
from .cube import build_cube
from .linalg import rank_q
from .orientation import cut_loci, half_arc_frame, star_position
from .smoothing import check_cap, skeleton, seifert_circle_count

RED = AlgebraElement.of(Fraction(1, 2), Fraction(1, 2), LEE)
GREEN = AlgebraElement.of(Fraction(1, 2), Fraction(-1, 2), LEE)


def red_green_properties():
    """The six identities of the red/green basis, each checked exactly."""
    r, g = RED, GREEN
    one = AlgebraElement.of(1, 0, LEE)
    x = AlgebraElement.of(0, 1, LEE)
    zero = AlgebraElement.of(0, 0, LEE)
    return {
        "projections": mul(r, r) == r and mul(g, g) == g,
        "complementary": r + g == one,
        "disjoint": mul(r, g) == zero,
        "eigenprojections": mul(x, r) == r and mul(x, g) == -g,
        "conjugates": bar(r) == g and bar(g) == r,
        "comultiplication": comul(r) == Tensor2.pure(r, r).scale(2)
                            and comul(g) == -Tensor2.pure(g, g).scale(2),
    }


class GeneratorError(RuntimeError):
    pass


@dataclass(frozen=True)
class CanonicalGenerator:
    orientation: tuple  # per component: True if reversed
    state: int
    local_colors: dict  # (arc, half) -> "r" | "g"
    cycle_labels: dict  # cycle_id -> "r" | "g"


def orientation_signs(d, flags):
    """Crossing signs after reversing the flagged components."""
    owner = {}
    for ci, comp in enumerate(d.components):
        for p in comp:
            owner.setdefault(p.crossing, []).append(ci)
    return {c: d.sign(c) * (-1) ** sum(flags[ci] for ci in cs) for c, cs in owner.items()}


def _component_of_arcs(d):
    out = []
    for ci, comp in enumerate(d.components):
        out.extend([ci] * max(1, len(comp)))
    return out


class _ParityUF:
    def __init__(self):
        self.parent, self.par = {}, {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x], self.par[x] = x, 0
            return x, 0
        p, acc = x, 0
        while self.parent[p] != p:
            acc ^= self.par[p]
            p = self.parent[p]
        return p, acc

    def union(self, x, y, diff):
        (rx, px), (ry, py) = self.find(x), self.find(y)
        if rx == ry:
            return (px ^ py) == diff
        self.parent[rx] = ry
        self.par[rx] = px ^ py ^ diff
        return True


def _coloring(d, state, flags):
    """Solve the alternating-coloring constraints for one oriented resolution."""
    sk = skeleton(d)
    cuts = cut_loci(d)
    arc_comp = _component_of_arcs(d)
    uf = _ParityUF()
    ok = True
    for a in range(len(sk.arcs)):
        ok &= uf.union((a, 0), (a, 1), 1 if a in cuts else 0)
    from .smoothing import smoothing_pairs
    for k, c in enumerate(sk.crossings):
        pair_vars = []
        for h1, h2 in smoothing_pairs(c, sk.signs[c], state >> k & 1):
            v1, v2 = sk.end_of[h1], sk.end_of[h2]
            ok &= uf.union(v1, v2, 0)
            pair_vars.append(v1)
        ok &= uf.union(pair_vars[0], pair_vars[1], 1)
    if not ok:
        raise GeneratorError("coloring constraints are infeasible")
    # one free bit per constraint class; fix it by the orientation rule
    colors = {}
    anchors = {}
    for a in range(len(sk.arcs)):
        for half in (0, 1):
            root, p = uf.find((a, half))
            travel = -1 if flags[arc_comp[a]] else 1
            rule = 0 if half_arc_frame(d, a, half) * travel > 0 else 1
            if root not in anchors:
                anchors[root] = rule ^ p
            colors[(a, half)] = anchors[root] ^ p
            if colors[(a, half)] != rule:
                raise GeneratorError("orientation rule disagrees with the constraint solution")
    return {v: "rg"[c] for v, c in colors.items()}


def canonical_generators(d, star_rule="min"):
    """One alternately colored oriented resolution per orientation."""
    check_cap(d)
    cube = build_cube(d, t=1, star_rule=star_rule)
    gens = []
    for flags in product((False, True), repeat=d.component_count):
        signs = orientation_signs(d, flags)
        state = sum(1 << k for k, c in enumerate(cube.sk.crossings) if signs[c] < 0)
        colors = _coloring(d, state, flags)
        labels = {cyc.cycle_id: colors[star_position(cyc, star_rule)]
                  for cyc in cube.states[state].cycles}
        gens.append(CanonicalGenerator(flags, state, colors, labels))
    seen = {tuple(sorted(g.local_colors.items())) for g in gens}
    if len(seen) != len(gens):
        raise GeneratorError("two orientations gave the same coloring")
    return gens


def generator_vector(gen, cube):
    """Coordinates of a generator in the unshifted Lee chain group."""
    st = cube.states[gen.state]
    order = cube.orders[gen.state]
    colors = [gen.cycle_labels[st.cycles[k].cycle_id] for k in order]
    index = {b: r for r, b in enumerate(cube.basis(bin(gen.state).count("1")))}
    vec = {}
    for labels in product((0, 1), repeat=len(colors)):
        coef = Fraction(1, 2 ** len(colors))
        for col, x in zip(colors, labels):
            if col == "g" and x:
                coef = -coef
        vec[index[(gen.state, labels)]] = coef
    return vec


def verify_generator_cycle(gen, d, cube=None):
    cube = cube or build_cube(d, t=1)
    i = bin(gen.state).count("1")
    if i == cube.n:
        return True
    return not cube.differential(i).apply(generator_vector(gen, cube))


class FilteredHomology(NamedTuple):
    dims: dict    # shifted degree -> dimension
    levels: dict  # shifted degree -> sorted tuple of filtration levels (with multiplicity)

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def all_levels(self):
        return sorted(l for ls in self.levels.values() for l in ls)


def _degree_levels(cube, i):
    qs = cube.q_grades(i)
    n_i = len(qs)
    d_out = cube.differential(i) if i < cube.n else None
    d_in = cube.differential(i - 1) if i > 0 else None
    r_out = rank_q(d_out) if d_out is not None else 0
    r_in = rank_q(d_in) if d_in is not None else 0
    dim = n_i - r_out - r_in
    if dim == 0:
        return 0, ()
    levels = []
    prev = 0
    for p in sorted(set(qs), reverse=True):
        cols = [k for k, q in enumerate(qs) if q >= p]
        low = [k for k, q in enumerate(qs) if q < p]
        z = len(cols) - (rank_q(d_out.submatrix(range(d_out.nrows), cols)) if d_out else 0)
        if d_in:
            b = r_in - rank_q(d_in.submatrix(low, range(d_in.ncols)))
        else:
            b = 0
        s_p = z - b
        levels.extend([p] * (s_p - prev))
        prev = s_p
        if s_p == dim:
            break
    return dim, tuple(sorted(levels))


def lee_filtered_homology(d, **cube_options):
    """Dimensions and induced filtration levels of Lee homology by degree."""
    cube = build_cube(d, t=1, **cube_options)
    dims, levels = {}, {}
    for i in range(cube.n + 1):
        dim, lv = _degree_levels(cube, i)
        if dim:
            dims[i + cube.shift_i] = dim
            levels[i + cube.shift_i] = lv
    return FilteredHomology(dims, levels)


def s_min_max(d):
    lv = lee_filtered_homology(d).all_levels()
    return lv[0], lv[-1]


@dataclass(frozen=True)
class RasmussenResult:
    s_min: int
    s_max: int
    s_bar: int
    lower_genus_bound: Fraction
    upper_genus_bound: Fraction
    generators: int

    def to_json(self):
        return {"s_min": self.s_min, "s_max": self.s_max, "s_bar": self.s_bar,
                "genus_lower": str(self.lower_genus_bound),
                "genus_upper": str(self.upper_genus_bound),
                "generators": self.generators}


def _require_knot(d):
    if d.component_count != 1:
        raise ValueError("defined for knots only")


def seifert_genus(d):
    """Genus ``(n - r + 1)/2`` of the surface built on the oriented resolution."""
    _require_knot(d)
    return Fraction(d.crossing_count - seifert_circle_count(d) + 1, 2)


def rasmussen(d):
    _require_knot(d)
    lo, hi = s_min_max(d)
    s_bar = Fraction(lo + hi, 2)
    if s_bar.denominator != 1:
        raise AssertionError("non-integral s_bar")
    return RasmussenResult(lo, hi, int(s_bar), abs(s_bar) / 2, seifert_genus(d),
                           len(canonical_generators(d)))


def _require_positive(d):
    if not d.is_positive():
        raise ValueError("diagram has negative crossings")


def positive_s_min(d):
    """``n - r`` for a positive diagram: the q-grade of the all-A state labeled all X."""
    _require_knot(d)
    _require_positive(d)
    return d.crossing_count - seifert_circle_count(d)


def positive_slice_genus(d):
    _require_positive(d)
    g = seifert_genus(d)
    res = rasmussen(d)
    if res.lower_genus_bound != g:
        raise AssertionError(f"genus bounds disagree: {res.lower_genus_bound} vs {g}")
    return g
