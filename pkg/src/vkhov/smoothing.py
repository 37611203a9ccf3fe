"""States, cycles, enhanced states and the bracket state sums.

Half-edges are ``(crossing, role, io)`` with ``io`` in ``{"in", "out"}``.
Semi-arc ``a`` leaves the ``out`` half-edge of one pass and enters the ``in``
half-edge of the next. At a crossing the A-smoothing of a positive crossing
is the oriented reconnection, the B-smoothing the disoriented one; for a
negative crossing it is the other way round.

States are integer bitmasks: bit ``k`` refers to the ``k``-th crossing in
ascending id order and is set for a B-smoothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .diagram import OVER, UNDER
from .laurent import LaurentPolynomial

MAX_CROSSINGS = 24
IN, OUT = "in", "out"


class CrossingCapError(ValueError):
    pass


def check_cap(d, cap=None):
    cap = MAX_CROSSINGS if cap is None else cap
    if d.crossing_count > cap:
        raise CrossingCapError(f"{d.crossing_count} crossings exceeds the cap of {cap}")


@dataclass(frozen=True)
class Skeleton:
    """Semi-arcs as ``(start_half_edge, end_half_edge)`` plus lookup tables."""

    arcs: tuple
    end_of: dict  # half-edge -> (arc, 0 start | 1 end)
    crossings: tuple
    signs: dict
    closed: frozenset  # arcs of 0-crossing components


@lru_cache(maxsize=256)
def skeleton(d):
    arcs, closed = [], set()
    for comp in d.components:
        m = len(comp)
        if m == 0:
            closed.add(len(arcs))
            arcs.append((None, None))
            continue
        for k in range(m):
            p, q = comp[k], comp[(k + 1) % m]
            arcs.append(((p.crossing, p.role, OUT), (q.crossing, q.role, IN)))
    end_of = {}
    for a, (s, e) in enumerate(arcs):
        if s is not None:
            end_of[s] = (a, 0)
            end_of[e] = (a, 1)
    return Skeleton(tuple(arcs), end_of, d.crossings, d.signs(), frozenset(closed))


def is_oriented_choice(sign, bit):
    """True when this smoothing choice is the oriented reconnection."""
    return (bit == 0) == (sign > 0)


def smoothing_pairs(c, sign, bit):
    """The two half-edge pairs joined by smoothing crossing ``c``.

    The pair containing the outgoing over half-edge is listed first.
    """
    if is_oriented_choice(sign, bit):
        return ((c, UNDER, IN), (c, OVER, OUT)), ((c, OVER, IN), (c, UNDER, OUT))
    return ((c, OVER, OUT), (c, UNDER, OUT)), ((c, OVER, IN), (c, UNDER, IN))


class Cycle(NamedTuple):
    """A traced loop: ``segments`` are ``(arc, direction)`` with direction ±1.

    The first segment is the minimal arc traversed forwards; ``cycle_id`` is
    that arc's id.
    """

    cycle_id: int
    segments: tuple

    @property
    def arcs(self):
        return frozenset(a for a, _ in self.segments)


def resolve(d, state):
    """Trace the cycles of a state, sorted by ``cycle_id``."""
    sk = skeleton(d)
    n = len(sk.crossings)
    if not 0 <= state < (1 << n):
        raise ValueError(f"state {state} is not a state of a {n}-crossing diagram")
    partner = {}
    for k, c in enumerate(sk.crossings):
        for h1, h2 in smoothing_pairs(c, sk.signs[c], (state >> k) & 1):
            partner[h1] = h2
            partner[h2] = h1
    seen = set()
    cycles = []
    for a0 in range(len(sk.arcs)):
        if a0 in seen:
            continue
        if a0 in sk.closed:
            seen.add(a0)
            cycles.append(Cycle(a0, ((a0, 1),)))
            continue
        segs = []
        a, entered = a0, 0
        while True:
            seen.add(a)
            segs.append((a, 1 if entered == 0 else -1))
            leave = sk.arcs[a][1 - entered]
            a, entered = sk.end_of[partner[leave]]
            if a == a0:
                if entered != 0:
                    raise AssertionError("cycle closed against its own direction")
                break
        cycles.append(Cycle(a0, tuple(segs)))
    return cycles


def state_count(d):
    return 1 << d.crossing_count


def i_grade(state):
    return bin(state).count("1")


class EnhancedState(NamedTuple):
    """A state with a label per cycle (in ``cycle_id`` order): 0 for 1, 1 for X."""

    state: int
    labels: tuple

    @property
    def i(self):
        return i_grade(self.state)

    @property
    def lam(self):
        return len(self.labels) - 2 * sum(self.labels)

    @property
    def j(self):
        return self.i + self.lam


def enhanced_states(d):
    check_cap(d)
    for s in range(state_count(d)):
        k = len(resolve(d, s))
        for labels in product((0, 1), repeat=k):
            yield EnhancedState(s, labels)


def q_grade(es, d):
    return es.j + d.n_plus - 2 * d.n_minus


DELTA = LaurentPolynomial({2: -1, -2: -1}, "A")


def bracket_a(d):
    """Bracket polynomial in ``A`` with one factor of delta per loop."""
    check_cap(d)
    n = d.crossing_count
    out = {}
    for s in range(state_count(d)):
        b = i_grade(s)
        k = len(resolve(d, s))
        out[(n - 2 * b, k)] = out.get((n - 2 * b, k), 0) + 1
    total = LaurentPolynomial({}, "A")
    for (e, k), mult in out.items():
        total = total + LaurentPolynomial({e: mult}, "A") * DELTA ** k
    return total


def bracket_q(d):
    """Sum over enhanced states of ``(-1)^i q^j``."""
    terms = {}
    for es in enhanced_states(d):
        terms[es.j] = terms.get(es.j, 0) + (-1) ** es.i
    return LaurentPolynomial(terms, "q")


def a_to_q(poly_a, n_crossings):
    """Rescale by ``A^-c`` and substitute ``A^2 -> -q^-1``."""
    return poly_a.shift(-n_crossings).substitute(-1, "q", sign_per_step=-1, step=2)


def jones(d):
    """``J(q) = (-1)^{n-} q^{n+ - 2n-} <K>_q``; the unknot gives ``q + q^-1``."""
    np_, nm = d.n_plus, d.n_minus
    return bracket_q(d).shift(np_ - 2 * nm) * ((-1) ** nm)


def f_poly(d):
    """Normalized bracket ``(-A^3)^{-wr} <K> / delta``."""
    w = d.writhe
    br = bracket_a(d).divide_exact(DELTA)
    return br.shift(-3 * w) * ((-1) ** (w % 2))


def v_poly(d):
    """``f`` with ``A -> t^(-1/4)``; exponents are quarter integers."""
    from fractions import Fraction
    return f_poly(d).substitute(Fraction(-1, 4), "t", step=1)


def oriented_state(d):
    """The state using the oriented reconnection at every crossing."""
    sk = skeleton(d)
    return sum(1 << k for k, c in enumerate(sk.crossings) if sk.signs[c] < 0)


def seifert_circle_count(d):
    return len(resolve(d, oriented_state(d)))
