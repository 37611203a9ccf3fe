"""Source-sink orientations, cut loci, stars and bar parities.

The canonical source-sink orientation makes the over strand's two
half-edges point into every crossing and the under strand's point out.
That rule is a function of the crossing alone, so mirroring (which swaps
roles) exchanges in- and out-pointing half-edges.

A semi-arc inherits a direction near each of its ends from the crossing it
touches. When the two ends disagree the arc carries a cut locus, placed at
its midpoint. Positions on a cycle are half-arcs ``(arc, half)`` with
``half = 0`` next to the arc's start and ``half = 1`` next to its end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagram import OVER
from .smoothing import resolve, skeleton

IN_STRAND = OVER
OVER_STRAND_IN = "OverStrandIn"
WITH_TRAVEL = "WithTravel"
AGAINST_TRAVEL = "AgainstTravel"


@dataclass(frozen=True)
class SourceSinkAssignment:
    pattern: dict       # crossing -> OVER_STRAND_IN
    end_directions: dict  # (arc, end) -> WITH_TRAVEL | AGAINST_TRAVEL

    def in_half_edges(self):
        """Half-edges pointing into their crossing."""
        return frozenset((c, IN_STRAND, io) for c in self.pattern for io in ("in", "out"))


def _end_agrees(sk, arc, end):
    """Does the local direction near this end of ``arc`` follow the knot?"""
    he = sk.arcs[arc][end]
    if end == 1:
        return he[1] == IN_STRAND
    return he[1] != IN_STRAND


def canonical_source_sink(d):
    sk = skeleton(d)
    dirs = {}
    for a in range(len(sk.arcs)):
        if a in sk.closed:
            dirs[(a, 0)] = dirs[(a, 1)] = WITH_TRAVEL
            continue
        for end in (0, 1):
            dirs[(a, end)] = WITH_TRAVEL if _end_agrees(sk, a, end) else AGAINST_TRAVEL
    return SourceSinkAssignment({c: OVER_STRAND_IN for c in sk.crossings}, dirs)


def cut_loci(d):
    """Arcs whose two end-directions disagree.

    With over-in at every crossing this happens exactly when consecutive
    passes have the same role.
    """
    ss = canonical_source_sink(d)
    n = len(skeleton(d).arcs)
    return frozenset(a for a in range(n) if ss.end_directions[(a, 0)] != ss.end_directions[(a, 1)])


def half_arc_frame(d, arc, half):
    """+1 if the local direction on this half-arc follows the knot, else -1."""
    sk = skeleton(d)
    if arc in sk.closed:
        return 1
    return 1 if _end_agrees(sk, arc, half) else -1


def cycle_positions(cycle):
    """Half-arcs in traversal order around a cycle."""
    out = []
    for a, direction in cycle.segments:
        out.extend(((a, 0), (a, 1)) if direction > 0 else ((a, 1), (a, 0)))
    return out


class Star(NamedTuple):
    cycle_id: int
    position: tuple  # (arc, half)


STAR_RULES = ("min", "max")


def star_position(cycle, rule="min"):
    """Min rule: smallest arc, on the half after a possible cut locus.

    Max rule: largest arc, on the half before it. Neither ever sits on a cut.
    """
    if rule == "min":
        a = min(cycle.arcs)
        direction = dict(cycle.segments)[a]
        return (a, 1) if direction > 0 else (a, 0)
    if rule == "max":
        a = max(cycle.arcs)
        direction = dict(cycle.segments)[a]
        return (a, 0) if direction > 0 else (a, 1)
    raise ValueError(f"unknown star rule {rule!r}")


def star_markings(d, state, rule="min"):
    return [Star(c.cycle_id, star_position(c, rule)) for c in resolve(d, state)]


def _cuts_between(cycle, cuts, start, stop, step):
    pos = cycle_positions(cycle)
    i = pos.index(start)
    j = pos.index(stop)
    count = 0
    k = i
    while k != j:
        nxt = (k + step) % len(pos)
        if pos[k][0] == pos[nxt][0] and pos[k][0] in cuts:
            count += 1
        k = nxt
    return count


def bar_parity(d, cycle, position, rule="min", direction=1):
    """Parity (0 even, 1 odd) of cut loci between ``position`` and the star."""
    if position not in cycle_positions(cycle):
        raise ValueError(f"position {position} is not on cycle {cycle.cycle_id}")
    cuts = cut_loci(d)
    return _cuts_between(cycle, cuts, star_position(cycle, rule), position, direction) % 2


def cut_count(d, cycle):
    cuts = cut_loci(d)
    return sum(1 for a in cycle.arcs if a in cuts)


def debug_dump(d, states=None, rule="min"):
    lines = [f"arc {a}: CUT" for a in sorted(cut_loci(d))]
    if states is None:
        states = range(1 << d.crossing_count)
    for s in states:
        for k, c in enumerate(resolve(d, s)):
            lines.append(f"state {s} cycle {k} star@{star_position(c, rule)[0]}")
    return "\n".join(lines)
