"""Khovanov homology of the signed cube over Z, Q and Z/2.

The differential preserves the quantum grade when ``t = 0``, so each
``(degree, q)`` block is handled separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .cube import build_cube
from .laurent import LaurentPolynomial
from .linalg import prime_powers, rank_mod2, rank_q, smith_normal_form

COEFFS = ("Z", "Q", "Z2")


class HomologyGroup(NamedTuple):
    free: int
    torsion: tuple = ()  # sorted prime powers

    def to_json(self):
        return {"free": self.free, "torsion": [_pp(x) for x in self.torsion]}


def _pp(n):
    (p, e), = prime_powers(n)
    return f"{p}^{e}"


class PoincarePolynomial(dict):
    """``{(i, j): coefficient}`` standing for ``sum c t^i q^j``."""

    def at_t_minus_one(self):
        terms = {}
        for (i, j), c in self.items():
            terms[j] = terms.get(j, 0) + (-1) ** (i % 2) * c
        return LaurentPolynomial(terms, "q")

    def __mul__(self, other):
        out = PoincarePolynomial()
        for (i, j), c in self.items():
            for (k, l), e in other.items():
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + c * e
        return PoincarePolynomial({k: v for k, v in out.items() if v})

    def __str__(self):
        if not self:
            return "0"
        return " + ".join(f"{c}*t^{i}*q^{j}" for (i, j), c in sorted(self.items()))


@dataclass
class GradedHomology:
    groups: dict  # (i, j) -> HomologyGroup, shifted, nonzero only
    coeffs: str
    shift_i: int = 0
    shift_q: int = 0
    meta: dict = field(default_factory=dict)

    def table(self):
        return {k: (g.free, tuple(sorted(g.torsion))) for k, g in self.groups.items()}

    def __eq__(self, other):
        return isinstance(other, GradedHomology) and self.table() == other.table()

    def rank(self, i, j):
        g = self.groups.get((i, j))
        return g.free if g else 0

    def total_rank(self):
        return sum(g.free for g in self.groups.values())

    def to_json(self):
        return {
            "coeffs": self.coeffs,
            "table": {f"({i},{j})": g.to_json() for (i, j), g in sorted(self.groups.items())},
            "shifts": {"homological": self.shift_i, "quantum": self.shift_q},
        }

    def __str__(self):
        lines = []
        for (i, j), g in sorted(self.groups.items()):
            tor = "".join(f" + Z/{_pp(x)}" for x in g.torsion)
            lines.append(f"({i},{j}): rank {g.free}{tor}")
        return "\n".join(lines) or "(zero)"


def poincare_polynomial(h):
    return PoincarePolynomial({k: g.free for k, g in h.groups.items() if g.free})


def euler_characteristic_q(h):
    return poincare_polynomial(h).at_t_minus_one()


def _blocks(cube, i):
    """Row/column index lists of the differential from degree ``i`` split by q."""
    by_q = {}
    for k, q in enumerate(cube.q_grades(i)):
        by_q.setdefault(q, []).append(k)
    return by_q


def _block_data(mat, rows, cols, coeffs):
    """Rank and torsion factors of a block."""
    if not rows or not cols:
        return 0, ()
    sub = mat.submatrix(rows, cols)
    if coeffs == "Z":
        snf = smith_normal_form(sub)
        return snf.rank, snf.torsion
    if coeffs == "Q":
        return rank_q(sub), ()
    if coeffs == "Z2":
        return rank_mod2(sub), ()
    raise ValueError(f"unknown coefficients {coeffs!r}")


def homology_of_cube(cube, coeffs="Z"):
    if coeffs not in COEFFS:
        raise ValueError(f"coefficients must be one of {COEFFS}")
    if cube.t != 0:
        raise ValueError("graded homology needs t = 0")
    n = cube.n
    grades = {i: _blocks(cube, i) for i in range(n + 1)}
    out_rank, in_data = {}, {}
    for i in range(n):
        mat = cube.differential(i)
        for q, cols in grades[i].items():
            rows = grades[i + 1].get(q, [])
            r, tor = _block_data(mat, rows, cols, coeffs)
            out_rank[(i, q)] = r
            in_data[(i + 1, q)] = (r, tor)
    groups = {}
    for i in range(n + 1):
        for q, cols in grades[i].items():
            r_in, tor = in_data.get((i, q), (0, ()))
            free = len(cols) - out_rank.get((i, q), 0) - r_in
            torsion = tuple(sorted(pp for f in tor for pp in
                                   (p ** e for p, e in prime_powers(f))))
            if free or torsion:
                groups[(i + cube.shift_i, q)] = HomologyGroup(free, torsion)
    return GradedHomology(groups, coeffs, cube.shift_i, cube.shift_q)


def khovanov_homology(d, coeffs="Z", **cube_options):
    """Graded Khovanov homology with the ``[-n-]{n+ - 2n-}`` shifts applied."""
    return homology_of_cube(build_cube(d, t=0, **cube_options), coeffs)


def z_equivalence_check(d, crossing, coeffs="Z"):
    """Compare ``d`` with its Z-move partner at ``crossing``."""
    return khovanov_homology(d, coeffs) == khovanov_homology(d.z_partner({crossing}), coeffs)


def universal_coefficients_z2(hz):
    """Z/2 ranks predicted from an integral table."""
    out = {}
    for (i, j), g in hz.groups.items():
        even = sum(1 for x in g.torsion if x % 2 == 0)
        if g.free or even:
            out[(i, j)] = out.get((i, j), 0) + g.free + even
        if even:
            out[(i - 1, j)] = out.get((i - 1, j), 0) + even
    return {k: v for k, v in out.items() if v}
