"""The rank-two algebra ``R[X]/(X^2 - hX - t)`` and its structure maps.

Coefficients may be ``int`` (Z), ``Fraction`` (Q), :class:`Mod2` or
:class:`Poly` (Z[h, t]). Elements are ``a*1 + b*X``; tensors are stored as
the four coefficients on ``11, 1X, X1, XX``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class Mod2:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = int(v.v if isinstance(v, Mod2) else v) & 1

    def _c(self, o):
        return o if isinstance(o, Mod2) else Mod2(o)

    def __add__(self, o):
        return Mod2(self.v ^ self._c(o).v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, o):
        return Mod2(self.v & self._c(o).v)

    __rmul__ = __mul__

    def __eq__(self, o):
        if isinstance(o, (int, Mod2)):
            return self.v == self._c(o).v
        return NotImplemented

    def __hash__(self):
        return self.v

    def __repr__(self):
        return f"Mod2({self.v})"


class Poly:
    """Polynomials in ``h`` and ``t`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, (int, Fraction)):
            terms = {(0, 0): terms}
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def h(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    def _c(self, o):
        return o if isinstance(o, Poly) else Poly(o)

    def __add__(self, o):
        o = self._c(o)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        o = self._c(o)
        out = {}
        for (a, b), v in self.terms.items():
            for (c, d), w in o.terms.items():
                out[(a + c, b + d)] = out.get((a + c, b + d), 0) + v * w
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, Poly)):
            return self.terms == self._c(o).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), v in sorted(self.terms.items()):
            mono = "*".join(x for x in (f"h^{a}" if a else "", f"t^{b}" if b else "") if x)
            parts.append(f"{v}*{mono}" if mono else f"{v}")
        return " + ".join(parts)


def _is_zero(x):
    return x == 0


@dataclass(frozen=True)
class FrobeniusSpec:
    """Parameters of ``X^2 = hX + t``. ``diagnostic`` allows ``h != 0``."""

    h: object = 0
    t: object = 0
    ring: str = "Z"
    diagnostic: bool = False

    def __post_init__(self):
        if not _is_zero(self.h) and not self.diagnostic:
            raise ValueError("h must be 0 outside diagnostic mode")

    def coerce(self, x):
        if self.ring == "Q":
            return Fraction(x)
        if self.ring == "Z2":
            return Mod2(x)
        if self.ring in ("Z[t]", "Z[h,t]"):
            return x if isinstance(x, Poly) else Poly(x)
        return x


KHOVANOV = FrobeniusSpec(0, 0, "Z")
LEE = FrobeniusSpec(0, Fraction(1), "Q")
F3 = FrobeniusSpec(Poly(0), Poly.t(), "Z[t]")
F5 = FrobeniusSpec(Poly.h(), Poly.t(), "Z[h,t]", diagnostic=True)


@dataclass(frozen=True)
class AlgebraElement:
    one: object
    x: object
    spec: FrobeniusSpec = KHOVANOV

    @classmethod
    def of(cls, one, x, spec=KHOVANOV):
        return cls(spec.coerce(one), spec.coerce(x), spec)

    def _same(self, o):
        if o.spec != self.spec:
            raise ValueError("ring mismatch")

    def __add__(self, o):
        self._same(o)
        return AlgebraElement(self.one + o.one, self.x + o.x, self.spec)

    def __sub__(self, o):
        self._same(o)
        return AlgebraElement(self.one - o.one, self.x - o.x, self.spec)

    def __neg__(self):
        return AlgebraElement(-self.one, -self.x, self.spec)

    def scale(self, r):
        return AlgebraElement(r * self.one, r * self.x, self.spec)

    def __mul__(self, o):
        return mul(self, o)

    def __eq__(self, o):
        if not isinstance(o, AlgebraElement):
            return NotImplemented
        return self.one == o.one and self.x == o.x

    def __hash__(self):
        return hash((repr(self.one), repr(self.x)))

    def is_zero(self):
        return self.one == 0 and self.x == 0

    def __repr__(self):
        return f"({self.one})*1 + ({self.x})*X"


def one(spec=KHOVANOV):
    return AlgebraElement.of(1, 0, spec)


def X(spec=KHOVANOV):
    return AlgebraElement.of(0, 1, spec)


@dataclass(frozen=True)
class Tensor2:
    """Coefficients on ``1⊗1, 1⊗X, X⊗1, X⊗X``."""

    c: tuple
    spec: FrobeniusSpec = KHOVANOV

    @classmethod
    def pure(cls, a, b):
        a._same(b)
        return cls((a.one * b.one, a.one * b.x, a.x * b.one, a.x * b.x), a.spec)

    def __add__(self, o):
        return Tensor2(tuple(p + q for p, q in zip(self.c, o.c)), self.spec)

    def __neg__(self):
        return Tensor2(tuple(-p for p in self.c), self.spec)

    def scale(self, r):
        return Tensor2(tuple(r * p for p in self.c), self.spec)

    def __eq__(self, o):
        return isinstance(o, Tensor2) and all(p == q for p, q in zip(self.c, o.c))

    def __hash__(self):
        return hash(tuple(repr(p) for p in self.c))

    def is_zero(self):
        return all(p == 0 for p in self.c)

    def map_factors(self, f, g):
        """Apply linear maps ``f ⊗ g``."""
        basis = (one(self.spec), X(self.spec))
        out = Tensor2.zero(self.spec)
        for k, coef in enumerate(self.c):
            a, b = basis[k >> 1], basis[k & 1]
            out = out + Tensor2.pure(f(a), g(b)).scale(coef)
        return out

    @classmethod
    def zero(cls, spec=KHOVANOV):
        z = spec.coerce(0)
        return cls((z, z, z, z), spec)

    def __repr__(self):
        names = ("1⊗1", "1⊗X", "X⊗1", "X⊗X")
        return " + ".join(f"({c})*{n}" for c, n in zip(self.c, names))


def mul(a, b):
    """Product with ``X^2 = hX + t``."""
    a._same(b)
    h, t = a.spec.h, a.spec.t
    xx = a.x * b.x
    return AlgebraElement(a.one * b.one + xx * t, a.one * b.x + a.x * b.one + xx * h, a.spec)


def mul_tensor(w):
    """``m`` applied to an element of ``V ⊗ V``."""
    sp = w.spec
    c11, c1x, cx1, cxx = w.c
    return AlgebraElement(c11 + cxx * sp.t, c1x + cx1 + cxx * sp.h, sp)


def comul(a):
    """``Δ(1) = 1⊗X + X⊗1 - h 1⊗1``, ``Δ(X) = X⊗X + t 1⊗1``."""
    sp = a.spec
    c11 = -(a.one * sp.h) + a.x * sp.t
    z = sp.coerce(0)
    return Tensor2((c11, a.one + z, a.one + z, a.x + z), sp)


def counit(a):
    return a.x


def unit_map(r, spec=KHOVANOV):
    return AlgebraElement.of(0, 0, spec) + one(spec).scale(r)


def eta(a):
    """The single-cycle map, which is zero."""
    return AlgebraElement(a.one * 0, a.x * 0, a.spec)


def _conjugate(a):
    return AlgebraElement(a.one, -a.x, a.spec)


def bar(a):
    """``X -> -X``. Only defined when ``h = 0``."""
    if not _is_zero(a.spec.h):
        raise ValueError("bar is undefined for h != 0")
    return _conjugate(a)


def bar_tensor(w):
    return w.map_factors(bar, bar)


def mul_comul_diagnostic(spec):
    """Composite around the corrected problem square, applied to 1 and to X.

    The second output factor is conjugated at its cut locus and the order
    sign is -1, then the two factors are multiplied back together. With
    ``h`` formal this returns ``(h, hX)``: the composite vanishes only at h = 0.
    """
    ident = lambda a: a  # noqa: E731
    out = []
    for a in (one(spec), X(spec)):
        w = comul(a).map_factors(ident, _conjugate)
        out.append(mul_tensor(-w))
    return tuple(out)


def problem_square(spec=KHOVANOV):
    """``m∘Δ(1)`` around the problem square with no, bar and bar+order corrections."""
    ident = lambda a: a  # noqa: E731
    d1 = comul(one(spec))
    raw = mul_tensor(d1)
    barred = bar(mul_tensor(d1.map_factors(ident, bar)))
    ordered = mul_tensor(-d1.map_factors(ident, bar))
    return {"uncorrected": raw, "bar": barred, "bar+order": ordered}
