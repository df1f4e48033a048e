"""Exact rational-function field arithmetic and the half-power registry."""

from fractions import Fraction

import pytest

from qtbranch.ratfield import (
    MPoly,
    NearPoleError,
    PoleError,
    RatFun,
    VarRegistry,
    bareiss_det,
    ring_of,
)

try:
    from hypothesis import given, settings, strategies as st

    HAVE_HYPOTHESIS = True
except ImportError:
    HAVE_HYPOTHESIS = False


R = ring_of("Q", "T")


def rf(name):
    return RatFun.from_mpoly(R.var(name))


def const(k):
    return RatFun.from_int(R, k)


Q, T = rf("Q"), rf("T")
ONE, ZERO = const(1), const(0)


def test_add_to_one():
    # Q/(1-Q) + (1-2Q)/(1-Q) = 1
    a = Q / (ONE - Q)
    b = (ONE - 2 * Q) / (ONE - Q)
    assert a + b == ONE


def test_pow_zero():
    assert Q ** 0 == ONE


def test_cancellation_to_polynomial():
    f = (ONE - Q ** 2) / (ONE - Q)
    assert f == ONE + Q
    assert not f.den  # canonical form carries no denominator factors


def test_equality_cross_multiplication():
    assert Q / (ONE - Q) == Q * (ONE + Q) / (ONE - Q ** 2)
    assert ZERO == ZERO / ((ONE - Q) * (ONE - T))
    assert Q != T


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Q / ZERO


def test_specialize_examples():
    assert T.specialize({"T": Q}, R) == Q
    assert ((ONE - T) / (ONE - Q)).specialize({"T": Q}, R) == ONE
    with pytest.raises(PoleError):
        (ONE / (ONE - Q)).specialize({"Q": ONE}, R)


def test_specialize_error_carries_assignment():
    try:
        (ONE / (ONE - Q)).specialize({"Q": ONE}, R)
    except PoleError as err:
        assert "Q" in str(err)
    else:
        pytest.fail("expected a pole")


def test_specialize_homomorphic():
    x = (ONE + Q * T) / (ONE - T)
    y = (Q - T) / (ONE + Q)
    images = {"T": Q ** 2}
    assert (x * y).specialize(images, R) == x.specialize(images, R) * y.specialize(images, R)


def test_eval_complex_examples():
    assert Q.eval_complex({"Q": 0.5, "T": 0.0}) == pytest.approx(0.5)
    f = (ONE - Q ** 2) / (ONE - Q)
    assert f.eval_complex({"Q": 0.3, "T": 0.0}) == pytest.approx(1.3)
    with pytest.raises(NearPoleError):
        (ONE / (ONE - Q)).eval_complex({"Q": 1.0, "T": 0.0})


def test_specialize_then_eval_matches_composition():
    f = (ONE + Q * T) / (ONE - Q * T ** 2)
    g = f.specialize({"T": Q ** 2}, R)
    direct = f.eval_complex({"Q": 0.37, "T": 0.37 ** 2})
    composed = g.eval_complex({"Q": 0.37, "T": 0.0})
    assert composed == pytest.approx(direct, rel=1e-12)


def test_negative_powers():
    f = Q ** -2
    assert f * Q ** 2 == ONE
    assert (Q + T) ** -1 * (Q + T) == ONE


def test_reciprocal():
    f = (ONE - Q) / (ONE + T)
    assert f * f.reciprocal() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.reciprocal()


def test_as_frac():
    assert (const(3) / const(4)).as_frac() == Fraction(3, 4)
    assert Q.as_frac() is None


def test_fraction_coercion():
    assert Q * Fraction(1, 2) + Q * Fraction(1, 2) == Q
    assert (Q * 3).as_frac() is None


def test_laurent_exact_div():
    # exponent vectors may be negative; division still exact
    ring = ring_of("x")
    x = ring.var("x")
    one = MPoly(ring, {(0,): 1})
    xinv = MPoly(ring, {(-1,): 1})
    x3 = MPoly(ring, {(3,): 1})
    got = (x3 - xinv).exact_div(x - xinv)
    assert got == x * x + one


def test_bareiss_det():
    ring = ring_of("a", "b")
    a, b = ring.var("a"), ring.var("b")
    one = MPoly(ring, {(0, 0): 1})
    det = bareiss_det([[a, b], [b, a]])
    assert det == a * a - b * b
    det3 = bareiss_det([[a, b, one], [b, a, b], [one, b, a]])
    assert det3 == a * (a * a - b * b) - b * (a * b - b) + (b * b - a)


if HAVE_HYPOTHESIS:

    def small_ratfun():
        mono = st.tuples(st.integers(0, 2), st.integers(0, 2))
        poly = st.dictionaries(mono, st.integers(-3, 3), max_size=3).map(
            lambda d: RatFun.from_mpoly(MPoly(R, d))
        )
        return poly

    @settings(max_examples=60, deadline=None)
    @given(small_ratfun(), small_ratfun(), small_ratfun())
    def test_field_axioms(x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        if not y.is_zero:
            assert (x / y) * y == x

    @settings(max_examples=40, deadline=None)
    @given(small_ratfun(), small_ratfun())
    def test_equality_consistent_with_arithmetic(x, y):
        assert (x == y) == (x - y).is_zero


def test_registry_half_powers():
    reg = VarRegistry(half=("q", "t"), full=("z",))
    q = reg.power("q", Fraction(1))
    qh = reg.power("q", Fraction(1, 2))
    assert qh * qh == q
    qt_half = reg.power("q", Fraction(1, 2)) * reg.power("t", Fraction(1, 2))
    assert qt_half ** 2 == reg.power("q", 1) * reg.power("t", 1)
    z = reg.power("z", 1)
    assert z ** -1 * z == RatFun.from_int(z.ring, 1)
    with pytest.raises(ValueError):
        reg.power("z", Fraction(1, 2))  # full variables have no square root


def test_registry_rejects_unknown():
    reg = VarRegistry(half=("q",), full=())
    with pytest.raises(KeyError):
        reg.power("w", 1)


def test_str_rendering_stable():
    f = (ONE - Q * T) / ((ONE - Q) * (ONE - T))
    s = str(f)
    assert "Q" in s and "T" in s
    # rendering round-trips through equality, not parsing; just pin shape
    assert s.count("/") == 1


def test_json_rendering():
    f = (ONE + Q) / (ONE - T)
    data = f.to_json()
    assert set(data) >= {"num", "den"}
