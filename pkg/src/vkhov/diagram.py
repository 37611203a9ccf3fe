"""Signed oriented Gauss codes.

A diagram is a tuple of components, each a cyclic tuple of :class:`Pass`
records. Virtual crossings are not stored; the Gauss code alone determines
the virtual link.

Text grammar::

    code      := component ("|" component)*
    component := pass*
    pass      := ("O" | "U") integer ("+" | "-")

Whitespace is ignored. The empty code ``""`` is the 0-crossing unknot and
``"|"`` the 2-component unlink.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

OVER = "O"
UNDER = "U"


class GaussCodeError(ValueError):
    """Syntax or validation failure. ``position`` is a character offset or ``None``."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class Pass(NamedTuple):
    crossing: int
    role: str  # OVER or UNDER
    sign: int  # +1 or -1

    def __str__(self):
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


class SemiArc(NamedTuple):
    """Interval from the pass at ``start`` to the pass at ``end``.

    Both are ``(component, position)``; a 0-crossing component has one closed
    arc whose ends are ``(component, None)``.
    """

    arc_id: int
    start: tuple
    end: tuple


def _other(role):
    return UNDER if role == OVER else OVER


@dataclass(frozen=True)
class VirtualLinkDiagram:
    components: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        comps = tuple(tuple(Pass(*p) for p in comp) for comp in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise GaussCodeError("a diagram needs at least one component")
        seen = {}
        for comp in comps:
            for p in comp:
                if not isinstance(p.crossing, int) or p.crossing < 1:
                    raise GaussCodeError(f"crossing id must be a positive integer, got {p.crossing!r}")
                if p.role not in (OVER, UNDER):
                    raise GaussCodeError(f"bad role {p.role!r}")
                if p.sign not in (1, -1):
                    raise GaussCodeError(f"bad sign {p.sign!r}")
                seen.setdefault(p.crossing, []).append(p)
        for c, ps in seen.items():
            if len(ps) != 2:
                raise GaussCodeError(f"crossing {c} appears {len(ps)} times, expected 2")
            if ps[0].sign != ps[1].sign:
                raise GaussCodeError(f"crossing {c} has mismatched signs")
            if ps[0].role == ps[1].role:
                raise GaussCodeError(f"crossing {c} has both passes {ps[0].role}")
        if seen and any(len(comp) == 0 for comp in comps):
            raise GaussCodeError("empty components are only allowed in a 0-crossing unlink")

    # counts -----------------------------------------------------------------
    @property
    def crossings(self):
        return tuple(sorted({p.crossing for comp in self.components for p in comp}))

    @property
    def crossing_count(self):
        return sum(len(comp) for comp in self.components) // 2

    @property
    def component_count(self):
        return len(self.components)

    def sign(self, c):
        for comp in self.components:
            for p in comp:
                if p.crossing == c:
                    return p.sign
        raise KeyError(f"unknown crossing {c}")

    def signs(self):
        return {p.crossing: p.sign for comp in self.components for p in comp}

    @property
    def n_plus(self):
        return sum(1 for s in self.signs().values() if s > 0)

    @property
    def n_minus(self):
        return sum(1 for s in self.signs().values() if s < 0)

    @property
    def writhe(self):
        return self.n_plus - self.n_minus

    def is_positive(self):
        return self.n_minus == 0

    def semi_arcs(self):
        """Semi-arcs numbered consecutively over components in order."""
        arcs = []
        for ci, comp in enumerate(self.components):
            m = len(comp)
            if m == 0:
                arcs.append(SemiArc(len(arcs), (ci, None), (ci, None)))
                continue
            for k in range(m):
                arcs.append(SemiArc(len(arcs), (ci, k), (ci, (k + 1) % m)))
        return arcs

    # transformations --------------------------------------------------------
    def _check_ids(self, S):
        S = set(S)
        unknown = S - set(self.crossings)
        if unknown:
            raise KeyError(f"unknown crossing ids {sorted(unknown)}")
        return S

    def _map(self, fn):
        return VirtualLinkDiagram(tuple(tuple(fn(p) for p in comp) for comp in self.components))

    def mirror(self):
        """Negate every sign and exchange Over/Under."""
        return self._map(lambda p: Pass(p.crossing, _other(p.role), -p.sign))

    def switch(self, S):
        """Crossing change at each crossing of ``S``."""
        S = self._check_ids(S)
        return self._map(lambda p: Pass(p.crossing, _other(p.role), -p.sign) if p.crossing in S else p)

    def virtualize(self, S):
        """Negate the sign at each crossing of ``S``; roles are kept."""
        S = self._check_ids(S)
        return self._map(lambda p: Pass(p.crossing, p.role, -p.sign) if p.crossing in S else p)

    def z_partner(self, S):
        """The Z-move partner: exchange roles at ``S`` and keep signs.

        Equal to ``switch`` followed by ``virtualize`` on the same set.
        """
        S = self._check_ids(S)
        return self._map(lambda p: Pass(p.crossing, _other(p.role), p.sign) if p.crossing in S else p)

    def reverse(self, comps):
        """Reverse the orientation of the given component indices.

        A crossing whose strands are reversed an odd number of times changes sign.
        """
        comps = set(comps)
        owner = {}
        for ci, comp in enumerate(self.components):
            for p in comp:
                owner.setdefault(p.crossing, []).append(ci)
        flip = {c for c, cs in owner.items() if sum(ci in comps for ci in cs) % 2}
        out = []
        for ci, comp in enumerate(self.components):
            comp = [Pass(p.crossing, p.role, -p.sign if p.crossing in flip else p.sign) for p in comp]
            if ci in comps:
                comp = comp[::-1]
            out.append(tuple(comp))
        return VirtualLinkDiagram(tuple(out))

    def relabel(self):
        """Renumber crossings 1..n in order of first appearance."""
        new = {}
        for comp in self.components:
            for p in comp:
                new.setdefault(p.crossing, len(new) + 1)
        return self._map(lambda p: Pass(new[p.crossing], p.role, p.sign))

    def _insert(self, arc_id, passes):
        arcs = self.semi_arcs()
        if not 0 <= arc_id < len(arcs):
            raise IndexError(f"no semi-arc {arc_id}")
        ci, k = arcs[arc_id].start
        comps = [list(c) for c in self.components]
        at = 0 if k is None else k + 1
        comps[ci][at:at] = passes
        return comps

    def r1(self, arc_id, sign=1, over_first=True):
        """Insert a kink with the given sign on a semi-arc."""
        c = max(self.crossings, default=0) + 1
        roles = (OVER, UNDER) if over_first else (UNDER, OVER)
        comps = self._insert(arc_id, [Pass(c, r, sign) for r in roles])
        return VirtualLinkDiagram(tuple(map(tuple, comps)))

    def r2(self, arc1, arc2, sign=1, antiparallel=False):
        """Insert a clasp of two opposite-sign crossings.

        The first strand is placed on ``arc1`` passing over both new crossings,
        the second on ``arc2``. ``arc1 == arc2`` folds the arc over itself.
        """
        a = max(self.crossings, default=0) + 1
        b = a + 1
        first = [Pass(a, OVER, sign), Pass(b, OVER, -sign)]
        second = [Pass(b, UNDER, -sign), Pass(a, UNDER, sign)] if antiparallel else \
                 [Pass(a, UNDER, sign), Pass(b, UNDER, -sign)]
        arcs = self.semi_arcs()
        for x in (arc1, arc2):
            if not 0 <= x < len(arcs):
                raise IndexError(f"no semi-arc {x}")
        comps = [list(c) for c in self.components]
        # insert later positions first so earlier indices stay valid
        spots = []
        for x, ps in ((arc1, first), (arc2, second)):
            ci, k = arcs[x].start
            at = 0 if k is None else k + 1
            spots.append((ci, at, x == arc1, ps))
        if arc1 == arc2:
            ci, at, _, _ = spots[0]
            comps[ci][at:at] = first + second
        else:
            for ci, at, _, ps in sorted(spots, key=lambda s: (s[0], s[1]), reverse=True):
                comps[ci][at:at] = ps
        return VirtualLinkDiagram(tuple(map(tuple, comps)))

    # text ----------------------------------------------------------------------
    def to_code(self):
        return "|".join("".join(str(p) for p in comp) for comp in self.components)

    def __str__(self):
        return self.to_code()

    def unsigned_sequence(self):
        """Gauss sequence with signs stripped."""
        return tuple(tuple((p.crossing, p.role) for p in comp) for comp in self.components)


def parse_gauss_code(text, name=None):
    """Parse a Gauss code, reporting the offending character offset on error."""
    comps = [[]]
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "|":
            comps.append([])
            i += 1
            continue
        if ch not in "OU":
            raise GaussCodeError(f"expected 'O', 'U' or '|', got {ch!r}", i)
        start = i
        i += 1
        while i < n and text[i].isspace():
            i += 1
        j = i
        while j < n and text[j].isdigit():
            j += 1
        if j == i:
            raise GaussCodeError("expected crossing number", i)
        num = int(text[i:j])
        i = j
        while i < n and text[i].isspace():
            i += 1
        if i >= n or text[i] not in "+-":
            raise GaussCodeError("expected sign '+' or '-'", i)
        sign = 1 if text[i] == "+" else -1
        i += 1
        if num < 1:
            raise GaussCodeError("crossing id must be >= 1", start)
        comps[-1].append(Pass(num, ch, sign))
    return VirtualLinkDiagram(tuple(map(tuple, comps)), name=name)


def parse_catalog(text):
    """Parse ``name: code`` lines. Blank lines and ``#`` comments are skipped."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GaussCodeError(f"line {lineno}: expected 'name: code'")
        name, code = line.split(":", 1)
        name = name.strip()
        if not name:
            raise GaussCodeError(f"line {lineno}: empty name")
        out[name] = parse_gauss_code(code, name=name)
    return out


def random_diagram(n_crossings, rng=None, n_components=1, positive=False):
    """Uniformly shuffled Gauss code with ``n_crossings`` crossings.

    Components are cut from one shuffled word at random points, so each is
    nonempty. ``rng`` is a :class:`random.Random` or a seed.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if n_crossings == 0:
        return VirtualLinkDiagram(tuple(() for _ in range(n_components)))
    if n_components > 2 * n_crossings:
        raise ValueError("too many components for the crossing count")
    passes = []
    for c in range(1, n_crossings + 1):
        s = 1 if positive else rng.choice((1, -1))
        passes += [Pass(c, OVER, s), Pass(c, UNDER, s)]
    rng.shuffle(passes)
    cuts = sorted(rng.sample(range(1, len(passes)), n_components - 1))
    bounds = [0] + cuts + [len(passes)]
    comps = tuple(tuple(passes[bounds[k]:bounds[k + 1]]) for k in range(n_components))
    return VirtualLinkDiagram(comps).relabel()


def diagram_from_passes(components: Iterable[Iterable[tuple]]):
    return VirtualLinkDiagram(tuple(tuple(Pass(*p) for p in comp) for comp in components))
