from fractions import Fraction
from itertools import product

import pytest

from vkhov.algebra import (F3, F5, KHOVANOV, LEE, AlgebraElement, FrobeniusSpec, Mod2, Poly,
                           Tensor2, X, bar, bar_tensor, comul, counit, eta, mul, mul_comul_diagnostic,
                           mul_tensor, one, problem_square, unit_map)

SPECS = [KHOVANOV, LEE, F3, FrobeniusSpec(0, 1, "Z"), FrobeniusSpec(0, 0, "Z2")]
ALL_SPECS = SPECS + [F5]


def basis(spec):
    return one(spec), X(spec)


def test_mul_examples():
    assert mul(X(), X()).is_zero()
    assert mul(X(LEE), X(LEE)) == one(LEE)
    a = AlgebraElement.of(3, -2)
    assert mul(one(), a) == a


def test_mul_ring_mismatch():
    with pytest.raises(ValueError):
        mul(X(KHOVANOV), X(LEE))


def test_comul_examples():
    assert comul(one()) == Tensor2.pure(one(), X()) + Tensor2.pure(X(), one())
    assert comul(X(LEE)) == Tensor2.pure(X(LEE), X(LEE)) + Tensor2.pure(one(LEE), one(LEE))
    assert comul(AlgebraElement.of(0, 0)).is_zero()


def test_comul_formal():
    h, t = F5.h, F5.t
    d1 = comul(one(F5))
    assert d1.c == (-h, Poly(1), Poly(1), Poly(0))
    assert comul(X(F5)).c == (t, Poly(0), Poly(0), Poly(1))


def test_counit_unit_eta():
    assert counit(AlgebraElement.of(5, 7)) == 7
    assert unit_map(1) == one()
    assert eta(AlgebraElement.of(5, 7)).is_zero()


def _counit_left(w):
    b = basis(w.spec)
    out = AlgebraElement.of(0, 0, w.spec)
    for k, c in enumerate(w.c):
        out = out + b[k & 1].scale(counit(b[k >> 1]) * c)
    return out


def _counit_right(w):
    b = basis(w.spec)
    out = AlgebraElement.of(0, 0, w.spec)
    for k, c in enumerate(w.c):
        out = out + b[k >> 1].scale(counit(b[k & 1]) * c)
    return out


@pytest.mark.parametrize("spec", SPECS)
def test_counit_identities(spec):
    for a in basis(spec):
        assert _counit_left(comul(a)) == a
        assert _counit_right(comul(a)) == a


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_frobenius_identity(spec):
    """(1⊗m)(Δ⊗1) = Δ∘m on every basis tensor."""
    b = basis(spec)
    for x, y in product(b, b):
        lhs = Tensor2.zero(spec)
        d = comul(x)
        for k, c in enumerate(d.c):
            lhs = lhs + Tensor2.pure(b[k >> 1], mul(b[k & 1], y)).scale(c)
        assert lhs == comul(mul(x, y))


def test_tube_cutting():
    b = basis(KHOVANOV)
    x = X()
    for p, q in product(b, b):
        assert counit(mul(p, q)) == counit(mul(p, x)) * counit(q) + counit(p) * counit(mul(q, x))


@pytest.mark.parametrize("spec", SPECS)
def test_bar_properties(spec):
    assert bar(X(spec)) == -X(spec)
    for a in basis(spec) + (AlgebraElement.of(2, 3, spec),):
        assert bar(bar(a)) == a
    for p, q in product(basis(spec), basis(spec)):
        assert bar(mul(p, q)) == mul(bar(p), bar(q))
    for a in basis(spec):
        assert comul(bar(a)) == -bar_tensor(comul(a))


def test_bar_needs_h_zero():
    with pytest.raises(ValueError):
        bar(X(F5))
    with pytest.raises(ValueError):
        FrobeniusSpec(1, 0)


def test_problem_square_corrections():
    ps = problem_square(KHOVANOV)
    assert ps["uncorrected"] == X().scale(2)
    assert ps["bar"].is_zero()
    assert ps["bar+order"].is_zero()


def test_h_obstruction():
    a, b = mul_comul_diagnostic(F5)
    assert a == one(F5).scale(F5.h)
    assert b == X(F5).scale(F5.h)
    for spec in (KHOVANOV, F3, LEE):
        assert all(v.is_zero() for v in mul_comul_diagnostic(spec))


def test_mod2_and_rationals():
    s = FrobeniusSpec(0, 1, "Z2")
    assert mul(X(s), X(s)) == one(s)
    assert Mod2(3) == 1 and Mod2(1) + Mod2(1) == 0
    assert one(LEE).one == Fraction(1)
