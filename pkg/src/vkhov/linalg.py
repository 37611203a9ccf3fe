"""Exact ranks and Smith normal form with Python integers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple


def _rows(m):
    """Sparse rows ``{row: {col: value}}`` from a SparseMatrix or dense input."""
    if hasattr(m, "entries"):
        rows = {}
        for (r, c), v in m.entries.items():
            rows.setdefault(r, {})[c] = v
        return rows, m.nrows, m.ncols
    dense = [list(map(int, row)) for row in m]
    nrows = len(dense)
    ncols = len(dense[0]) if nrows else 0
    rows = {}
    for r, row in enumerate(dense):
        nz = {c: v for c, v in enumerate(row) if v}
        if nz:
            rows[r] = nz
    return rows, nrows, ncols


def rank_q(m):
    """Rank over the rationals by incremental exact elimination."""
    rows, _, _ = _rows(m)
    pivots = {}
    for row in rows.values():
        v = {c: Fraction(x) for c, x in row.items()}
        while v:
            c = min(v)
            p = pivots.get(c)
            if p is None:
                lead = v[c]
                pivots[c] = {k: x / lead for k, x in v.items()}
                break
            f = v[c]
            for k, x in p.items():
                y = v.get(k, 0) - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)


def rank_mod_p(m, p):
    rows, _, _ = _rows(m)
    pivots = {}
    for row in rows.values():
        v = {c: x % p for c, x in row.items() if x % p}
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(v[c], -1, p)
                pivots[c] = {k: x * inv % p for k, x in v.items()}
                break
            f = v[c]
            for k, x in piv.items():
                y = (v.get(k, 0) - f * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)


def rank_mod2(m):
    """Rank over Z/2 with rows packed into integers."""
    rows, _, _ = _rows(m)
    basis = {}  # leading bit -> row
    for row in rows.values():
        v = 0
        for c, x in row.items():
            if x & 1:
                v |= 1 << c
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


class SmithDecomposition(NamedTuple):
    factors: tuple  # nonzero invariant factors, each dividing the next
    shape: tuple

    @property
    def rank(self):
        return len(self.factors)

    @property
    def torsion(self):
        return tuple(f for f in self.factors if f > 1)


def _eliminate_units(rows):
    """Peel off ±1 pivots; returns the count removed and the leftover rows."""
    units = 0
    cols = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    changed = True
    while changed:
        changed = False
        for r in sorted(rows, key=lambda r: len(rows[r])):
            row = rows.get(r)
            if not row:
                continue
            piv = next((c for c in sorted(row, key=lambda c: len(cols[c])) if abs(row[c]) == 1), None)
            if piv is None:
                continue
            p = row[piv]
            for r2 in list(cols[piv]):
                if r2 == r:
                    continue
                other = rows[r2]
                f = other[piv] * p  # p = ±1 so p^-1 = p
                for c, x in row.items():
                    y = other.get(c, 0) - f * x
                    if y:
                        if c not in other:
                            cols[c].add(r2)
                        other[c] = y
                    else:
                        if c in other:
                            del other[c]
                            cols[c].discard(r2)
                if not other:
                    del rows[r2]
            for c in row:
                cols[c].discard(r)
            del rows[r]
            units += 1
            changed = True
    return units, rows


def _dense_snf(a):
    """Diagonal entries of the Smith form of a small dense integer matrix."""
    diag = []
    while a and a[0]:
        nz = [(abs(x), i, j) for i, row in enumerate(a) for j, x in enumerate(row) if x]
        if not nz:
            break
        _, i, j = min(nz)
        a[0], a[i] = a[i], a[0]
        for row in a:
            row[0], row[j] = row[j], row[0]
        while True:
            p = a[0][0]
            moved = False
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                    if a[i][0]:
                        a[0], a[i] = a[i], a[0]
                        moved = True
                        break
            if moved:
                continue
            for j in range(1, len(a[0])):
                if a[0][j]:
                    q = a[0][j] // p
                    for row in a:
                        row[j] -= q * row[0]
                    if a[0][j]:
                        for row in a:
                            row[0], row[j] = row[j], row[0]
                        moved = True
                        break
            if moved:
                continue
            bad = next((i for i in range(1, len(a)) if any(x % p for x in a[i][1:])), None)
            if bad is None:
                break
            a[0] = [x + y for x, y in zip(a[0], a[bad])]
        diag.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
    return diag


def _normalize(diag):
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return tuple(d)


def smith_normal_form(m):
    """Invariant factors of an integer matrix (dense nested lists or sparse)."""
    rows, nrows, ncols = _rows(m)
    rows = {r: dict(v) for r, v in rows.items()}
    units, rest = _eliminate_units(rows)
    cols = sorted({c for row in rest.values() for c in row})
    ci = {c: k for k, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for k, row in enumerate(rest.values()):
        for c, x in row.items():
            dense[k][ci[c]] = x
    diag = [1] * units + _dense_snf(dense)
    return SmithDecomposition(_normalize(diag), (nrows, ncols))


def prime_powers(n):
    """Factor ``n > 1`` into prime powers, e.g. 12 -> [(2, 2), (3, 1)]."""
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out
