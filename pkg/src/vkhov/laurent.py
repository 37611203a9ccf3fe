"""Exact Laurent polynomials with integer coefficients.

Exponents are integers, or :class:`fractions.Fraction` for the ``t^(1/4)``
form of the Jones polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _norm_exp(e):
    if isinstance(e, Fraction):
        return int(e) if e.denominator == 1 else e
    return int(e)


def _fmt_exp(e):
    return str(e) if isinstance(e, int) else f"{e.numerator}/{e.denominator}"


class LaurentPolynomial:
    """A finitely supported map ``exponent -> int`` in a named variable."""

    __slots__ = ("var", "terms")

    def __init__(self, terms=None, var="q"):
        clean = {}
        for e, c in (terms or {}).items():
            c = int(c)
            if c:
                e = _norm_exp(e)
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.var = var
        self.terms = clean

    @classmethod
    def monomial(cls, coef, exp, var="q"):
        return cls({exp: coef}, var)

    @classmethod
    def constant(cls, c, var="q"):
        return cls({0: c}, var)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.var != self.var and other.terms and self.terms:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPolynomial({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var if self.terms else other.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out, self.var if self.terms else other.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPolynomial({-e * -n: c ** -n}, self.var)
        out = LaurentPolynomial({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = LaurentPolynomial({0: other}, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.var == other.var and self.terms == other.terms

    def __hash__(self):
        return hash((self.var, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # structure ------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    @property
    def min_exp(self):
        return min(self.terms) if self.terms else None

    @property
    def max_exp(self):
        return max(self.terms) if self.terms else None

    def coefficient(self, e):
        return self.terms.get(_norm_exp(e), 0)

    def shift(self, k):
        """Multiply by ``var**k``."""
        return LaurentPolynomial({e + k: c for e, c in self.terms.items()}, self.var)

    def substitute(self, scale, var, sign_per_step=1, step=1):
        """Map ``var**e`` to ``sign_per_step**(e // step) * new_var**(scale*e/step)``.

        ``step`` must divide every exponent. This covers ``A^2 -> -q^-1``
        (``scale=-1, step=2, sign=-1``) and ``A -> t^(-1/4)`` (``scale=Fraction(-1, 4)``).
        """
        out = {}
        for e, c in self.terms.items():
            if Fraction(e) % step:
                raise ValueError(f"exponent {e} not divisible by {step}")
            k = Fraction(e) / step
            if sign_per_step == -1 and int(k) % 2:
                c = -c
            ne = _norm_exp(Fraction(scale) * k)
            out[ne] = out.get(ne, 0) + c
        return LaurentPolynomial(out, var)

    def divide_exact(self, other):
        """Exact quotient ``self / other``; raises ``ValueError`` on a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = LaurentPolynomial(self.terms, self.var)
        lead_e = other.max_exp
        lead_c = other.terms[lead_e]
        floor = self.min_exp - other.min_exp if self.terms else 0
        quot = {}
        while rem.terms:
            e = rem.max_exp
            c = rem.terms[e]
            qe = e - lead_e
            if c % lead_c or qe < floor:
                raise ValueError("inexact division")
            qc = c // lead_c
            quot[qe] = qc
            rem = rem - LaurentPolynomial({qe: qc}, self.var) * other
        return LaurentPolynomial(quot, self.var)

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self.terms.items())

    # i/o --------------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, e in enumerate(sorted(self.terms)):
            c = self.terms[e]
            body = f"{abs(c)}*{self.var}^{_fmt_exp(e)}"
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({self.terms!r}, var={self.var!r})"

    def to_json(self):
        return {
            "var": self.var,
            "terms": [[e if isinstance(e, int) else _fmt_exp(e), c]
                      for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj):
        terms = {}
        for e, c in obj["terms"]:
            terms[Fraction(e) if isinstance(e, str) else e] = c
        return cls(terms, obj["var"])
