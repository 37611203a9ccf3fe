"""The signed Khovanov cube of a virtual link diagram.

Each state's cycles carry a global order, propagated from the all-A state
along a spanning tree of the cube. An edge map between states is

    post-bar ∘ P_post ∘ (m | Δ | η) ∘ P_pre ∘ pre-bar

where bars are applied to labels whose cycle has an odd number of cut loci
between its star and the site, ``P_pre`` is the sign of the permutation
moving the involved cycles (in local order) to the front of the source's
global order, and ``P_post`` is the sign of the permutation taking
``[outputs in local order] + [other cycles in source order]`` to the
target's global order.

Locally, the smoothing arc through the outgoing over half-edge comes first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .orientation import IN_STRAND, STAR_RULES, cut_loci, star_position
from .smoothing import check_cap, resolve, skeleton, smoothing_pairs

MERGE, SPLIT, SINGLE = "m", "d", "e"
CORRECTIONS = ("full", "bar", "none")


def permutation_sign(seq, target):
    """Sign of the permutation taking ``seq`` to ``target`` (same items)."""
    pos = {k: i for i, k in enumerate(target)}
    arr = [pos[k] for k in seq]
    if sorted(arr) != list(range(len(target))):
        raise ValueError("sequences are not permutations of each other")
    sign, seen = 1, [False] * len(arr)
    for i in range(len(arr)):
        length, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = arr[j]
            length += 1
        if length and length % 2 == 0:
            sign = -sign
    return sign


def front_sign(order, front):
    """Sign of moving ``front`` (in that sequence) to the head of ``order``."""
    rest = [k for k in order if k not in front]
    return permutation_sign(list(front) + rest, order)


def perm_sign(a, b=None):
    """Closed forms for :func:`front_sign` in terms of global labels.

    Two cycles with labels ``a`` (locally first) and ``b``: ``(-1)^(a+b+1)``
    if ``a < b`` and ``(-1)^(a+b)`` if ``a > b``. One cycle: ``(-1)^(a+1)``.
    """
    if b is None:
        return (-1) ** (a + 1)
    if a == b:
        raise ValueError("two involved cycles need distinct labels")
    return (-1) ** (a + b + 1) if a < b else (-1) ** (a + b)


def propagate_labels(kind, labels, a, b=None):
    """Global-label update along one tree edge.

    ``labels`` maps uninvolved cycles to their labels in the source state.
    Returns ``(rest, outputs)``: new labels for those cycles and the labels
    of the output cycles in local order.
    """
    if kind == MERGE:
        rest = {k: (l - 1 if l > b else l) for k, l in labels.items()}
        return rest, [a - 1 if a > b else a]
    if kind == SPLIT:
        rest = {k: (l + 1 if l > a else l) for k, l in labels.items()}
        return rest, [a, a + 1]
    return dict(labels), [a]


class StateData(NamedTuple):
    mask: int
    cycles: tuple
    arc_cycle: dict
    sites: dict  # frozenset(half-edge pair) -> (cycle index, bar flag)


class EdgeMap(NamedTuple):
    source: int
    target: int
    site: int
    kind: str
    inputs: tuple
    pre_bars: tuple
    outputs: tuple
    post_bars: tuple
    rest: dict  # source cycle index -> target cycle index
    pre_sign: int
    post_sign: int

    def dump(self):
        bars = [int(b) for b in self.pre_bars + self.post_bars]
        return (f"{self.source} -> {self.target} site={self.site} kind={self.kind} "
                f"pre={self.pre_sign:+d} post={self.post_sign:+d} bars={bars}")


class SparseMatrix:
    """Integer matrix as ``{(row, col): value}``."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows, self.ncols = nrows, ncols
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + v * w
        return SparseMatrix(self.nrows, other.ncols, out)

    def is_zero(self):
        return not self.entries

    def to_dense(self):
        m = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    def submatrix(self, rows, cols):
        ri = {r: i for i, r in enumerate(rows)}
        ci = {c: i for i, c in enumerate(cols)}
        return SparseMatrix(len(rows), len(cols),
                            {(ri[r], ci[c]): v for (r, c), v in self.entries.items()
                             if r in ri and c in ci})

    def apply(self, vec):
        """``vec`` is ``{col: value}``; returns ``{row: value}``."""
        out = {}
        for (r, c), v in self.entries.items():
            if c in vec:
                out[r] = out.get(r, 0) + v * vec[c]
        return {r: v for r, v in out.items() if v}


def _trace_sites(sk, cycle, k, star, site_map):
    """Record (cycle, bar) for each smoothing-site passage of ``cycle``."""
    segs = cycle.segments
    if segs[0][0] in sk.closed:
        return
    star_arc, star_half = star
    star_dir = dict(segs)[star_arc]
    star_end_frame = _frame(sk, star_arc, star_half)
    g = star_end_frame * star_dir
    for idx, (a, direction) in enumerate(segs):
        half = 1 if direction > 0 else 0
        h = sk.arcs[a][half]
        a2, d2 = segs[(idx + 1) % len(segs)]
        h2 = sk.arcs[a2][0 if d2 > 0 else 1]
        local = _frame(sk, a, half) * direction
        site_map[frozenset((h, h2))] = (k, local != g)


def _frame(sk, arc, half):
    he = sk.arcs[arc][half]
    if half == 1:
        return 1 if he[1] == IN_STRAND else -1
    return 1 if he[1] != IN_STRAND else -1


@dataclass
class SignedCube:
    """States, global orders and decorated edge maps of a diagram.

    Parameters
    ----------
    d : VirtualLinkDiagram
    t : int
        ``X^2 = t``; 0 for Khovanov, 1 for Lee.
    root_order : sequence of int, optional
        Cycle indices of the all-A state listed by global label.
    tree : {"lowest", "highest", "random"}
        Which set bit the spanning-tree parent of a state flips.
    star_rule : {"min", "max"}
    corrections : {"full", "bar", "none"}
        Drop signs ("bar") or signs and bars ("none"); only "full" gives a complex.
    corrupt : set of (mask, crossing)
        Edges whose sign is flipped, as a negative control.
    """

    d: object
    t: int = 0
    root_order: tuple | None = None
    tree: str = "lowest"
    seed: int = 0
    star_rule: str = "min"
    corrections: str = "full"
    corrupt: frozenset = frozenset()
    max_crossings: int | None = None
    states: list = field(init=False, repr=False)
    orders: list = field(init=False, repr=False)
    edges: dict = field(init=False, repr=False)

    def __post_init__(self):
        check_cap(self.d, self.max_crossings)
        if self.star_rule not in STAR_RULES:
            raise ValueError(f"unknown star rule {self.star_rule!r}")
        if self.corrections not in CORRECTIONS:
            raise ValueError(f"unknown corrections {self.corrections!r}")
        self.sk = skeleton(self.d)
        self.n = len(self.sk.crossings)
        self.cuts = cut_loci(self.d)
        self.shift_i = -self.d.n_minus
        self.shift_q = self.d.n_plus - 2 * self.d.n_minus
        self.states = [self._state_data(s) for s in range(1 << self.n)]
        self.edges = {}
        self._propagate()
        self._bases = {}
        self._diffs = {}

    # structure -----------------------------------------------------------
    def _state_data(self, s):
        cycles = tuple(resolve(self.d, s))
        arc_cycle, sites = {}, {}
        for k, cyc in enumerate(cycles):
            for a, _ in cyc.segments:
                arc_cycle[a] = k
            _trace_sites(self.sk, cyc, k, star_position(cyc, self.star_rule), sites)
        return StateData(s, cycles, arc_cycle, sites)

    def _parent_bit(self, s, rng):
        bits = [i for i in range(self.n) if s >> i & 1]
        if self.tree == "lowest":
            return bits[0]
        if self.tree == "highest":
            return bits[-1]
        if self.tree == "random":
            return rng.choice(bits)
        raise ValueError(f"unknown tree rule {self.tree!r}")

    def _classify(self, s, i):
        """Kind, involved cycles and bars for resmoothing bit ``i`` of ``s``."""
        c = self.sk.crossings[i]
        sign = self.sk.signs[c]
        src, dst = self.states[s], self.states[s | (1 << i)]
        pa = smoothing_pairs(c, sign, 0)
        pb = smoothing_pairs(c, sign, 1)
        (k1, b1), (k2, b2) = (src.sites[frozenset(p)] for p in pa)
        (l1, e1), (l2, e2) = (dst.sites[frozenset(p)] for p in pb)
        n1, n2 = len(src.cycles), len(dst.cycles)
        if k1 != k2:
            assert n2 == n1 - 1 and l1 == l2 and e1 == e2, "inconsistent merge"
            return MERGE, (k1, k2), (b1, b2), (l1,), (e1,)
        if n2 == n1 + 1:
            assert b1 == b2 and l1 != l2, "inconsistent split"
            return SPLIT, (k1,), (b1,), (l1, l2), (e1, e2)
        assert n2 == n1, "resmoothing changed the cycle count by more than one"
        return SINGLE, (k1,), (b1,), (l1,), (e1,)

    def _rest_map(self, s, s2, involved):
        by_arcs = {cyc.arcs: k for k, cyc in enumerate(self.states[s2].cycles)}
        return {k: by_arcs[cyc.arcs] for k, cyc in enumerate(self.states[s].cycles)
                if k not in involved}

    def _propagate(self):
        k0 = len(self.states[0].cycles)
        root = tuple(range(k0)) if self.root_order is None else tuple(self.root_order)
        if sorted(root) != list(range(k0)):
            raise ValueError("root order must be a permutation of the all-A cycles")
        self.orders = [None] * (1 << self.n)
        self.orders[0] = root
        rng = random.Random(self.seed)
        for s in range(1, 1 << self.n):
            i = self._parent_bit(s, rng)
            p = s ^ (1 << i)
            kind, ins, _, outs, _ = self._classify(p, i)
            labels = {k: r + 1 for r, k in enumerate(self.orders[p])}
            rest_map = self._rest_map(p, s, ins)
            b = labels[ins[1]] if kind == MERGE else None
            rest, out_labels = propagate_labels(
                kind, {k: l for k, l in labels.items() if k not in ins}, labels[ins[0]], b)
            new = {rest_map[k]: l for k, l in rest.items()}
            new.update(zip(outs, out_labels))
            order = sorted(new, key=new.get)
            assert sorted(new.values()) == list(range(1, len(new) + 1))
            self.orders[s] = tuple(order)

    def edge(self, s, i):
        """The decorated map from ``s`` along bit ``i`` (which must be 0 in ``s``)."""
        key = (s, i)
        if key in self.edges:
            return self.edges[key]
        if s >> i & 1:
            raise ValueError("bit already set")
        s2 = s | (1 << i)
        kind, ins, bins, outs, bouts = self._classify(s, i)
        rest = self._rest_map(s, s2, ins)
        pre = post = 1
        if self.corrections == "full":
            go = self.orders[s]
            pre = front_sign(go, ins)
            seq = list(outs) + [rest[k] for k in go if k not in ins]
            post = permutation_sign(seq, self.orders[s2])
        if (s, self.sk.crossings[i]) in self.corrupt:
            post = -post
        if self.corrections == "none":
            bins = tuple(False for _ in bins)
            bouts = tuple(False for _ in bouts)
        e = EdgeMap(s, s2, self.sk.crossings[i], kind, ins, bins, outs, bouts, rest, pre, post)
        self.edges[key] = e
        return e

    def all_edges(self):
        for s in range(1 << self.n):
            for i in range(self.n):
                if not s >> i & 1:
                    yield self.edge(s, i)

    def apply_edge(self, e, labels):
        """Image of a basis vector; ``labels`` are listed by source global order.

        Returns ``{target labels by global order: coefficient}``.
        """
        if e.kind == SINGLE:
            return {}
        go, go2 = self.orders[e.source], self.orders[e.target]
        by_cycle = dict(zip(go, labels))
        coef = e.pre_sign * e.post_sign
        vals = []
        for k, b in zip(e.inputs, e.pre_bars):
            x = by_cycle[k]
            if b and x:
                coef = -coef
            vals.append(x)
        t = self.t
        if e.kind == MERGE:
            x, y = vals
            res = ([(t, (0,))] if t else []) if (x and y) else [(1, (x | y,))]
        else:
            res = [(1, (0, 1)), (1, (1, 0))] if vals[0] == 0 else \
                  [(1, (1, 1))] + ([(t, (0, 0))] if t else [])
        base = {e.rest[k]: x for k, x in by_cycle.items() if k not in e.inputs}
        out = {}
        for cf, outlab in res:
            cf *= coef
            lab = dict(base)
            for k, x, b in zip(e.outputs, outlab, e.post_bars):
                lab[k] = x
                if b and x:
                    cf = -cf
            key = tuple(lab[k] for k in go2)
            out[key] = out.get(key, 0) + cf
        return {k: v for k, v in out.items() if v}

    # chain complex ---------------------------------------------------------
    def basis(self, i):
        """Unshifted degree-``i`` basis: ``(mask, labels by global order)`` sorted."""
        if i not in self._bases:
            from itertools import product
            items = []
            for s in range(1 << self.n):
                if bin(s).count("1") != i:
                    continue
                k = len(self.states[s].cycles)
                items.extend((s, lab) for lab in product((0, 1), repeat=k))
            self._bases[i] = items
        return self._bases[i]

    def q_grade(self, item):
        s, lab = item
        return bin(s).count("1") + len(lab) - 2 * sum(lab) + self.shift_q

    def q_grades(self, i):
        return [self.q_grade(b) for b in self.basis(i)]

    def differential(self, i):
        """Matrix of ``C^i -> C^(i+1)`` (unshifted degrees)."""
        if i in self._diffs:
            return self._diffs[i]
        src, dst = self.basis(i), self.basis(i + 1)
        index = {b: r for r, b in enumerate(dst)}
        entries = {}
        for col, (s, lab) in enumerate(src):
            for bit in range(self.n):
                if s >> bit & 1:
                    continue
                e = self.edge(s, bit)
                for lab2, v in self.apply_edge(e, lab).items():
                    r = index[(e.target, lab2)]
                    entries[(r, col)] = entries.get((r, col), 0) + v
        m = SparseMatrix(len(dst), len(src), entries)
        self._diffs[i] = m
        return m

    def degrees(self):
        return range(0, self.n + 1)

    def dump(self):
        return "\n".join(e.dump() for e in self.all_edges())


class D2Report(NamedTuple):
    ok: bool
    faces: list  # (state, crossing, crossing)


def check_d2(cube, max_faces=10):
    """Verify ``d∘d = 0`` degree by degree and list offending faces."""
    faces = []
    for i in range(cube.n - 1):
        prod = cube.differential(i + 1) @ cube.differential(i)
        if prod.is_zero():
            continue
        src, dst = cube.basis(i), cube.basis(i + 2)
        for (r, c) in sorted(prod.entries):
            s, s2 = src[c][0], dst[r][0]
            bits = [b for b in range(cube.n) if (s2 ^ s) >> b & 1]
            face = (s, cube.sk.crossings[bits[0]], cube.sk.crossings[bits[1]])
            if face not in faces:
                faces.append(face)
            if len(faces) >= max_faces:
                break
    return D2Report(not faces, faces)


def face_paths(cube, s, i1, i2, labels):
    """Both composites around the face at ``s`` spanned by bits ``i1, i2``.

    Returns ``(via i1 then i2, via i2 then i1)`` as dicts keyed by labels.
    """
    out = []
    for a, b in ((i1, i2), (i2, i1)):
        total = {}
        e1 = cube.edge(s, a)
        for lab, v in cube.apply_edge(e1, labels).items():
            e2 = cube.edge(e1.target, b)
            for lab2, w in cube.apply_edge(e2, lab).items():
                total[lab2] = total.get(lab2, 0) + v * w
        out.append({k: v for k, v in total.items() if v})
    return tuple(out)


def build_cube(d, t=0, **options):
    return SignedCube(d, t=t, **options)
