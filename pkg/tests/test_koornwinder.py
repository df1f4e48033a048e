"""Koornwinder polynomial assembly, parameter symmetries, named
specializations and the two-family Cauchy identity."""

import itertools
from fractions import Fraction

import pytest

from qtbranch.koornwinder import (
    RING_K6,
    KoornwinderParams,
    koornwinder_K,
    koornwinder_classical,
    macdonald_BC,
    macdonald_CB,
    macdonald_CC,
    mimachi_check,
)
from qtbranch.partitions import partitions_in_box
from qtbranch.ratfield import RatFun, ring_of
from qtbranch.report import FAIL, PASS, VerificationReport
from qtbranch.symfunc import odd_ortho_schur, ortho_schur, symp_schur


def _generic():
    return KoornwinderParams.generic()


def test_empty_shape_is_one():
    K = koornwinder_K((), 2, _generic())
    assert sorted(K.terms) == [(0, 0)]
    assert K.terms[(0, 0)] == 1


def test_too_long_shape_rejected():
    with pytest.raises(ValueError):
        koornwinder_K((1, 1), 1, _generic())


def test_n1_monic_three_term_constant():
    # degree-1 case: x + 1/x + (e1 - e3)/(e4 - 1) in the parameter
    # elementary symmetrics, straight from the three-term recurrence
    pp = _generic()
    K = koornwinder_K((1,), 1, pp)
    assert K.terms[(1,)] == 1
    e1 = sum(pp.quad, RatFun.from_int(RING_K6, 0))
    e3 = sum(
        (a * b * c for a, b, c in itertools.combinations(pp.quad, 3)),
        RatFun.from_int(RING_K6, 0),
    )
    e4 = pp.t0 * pp.t1 * pp.t2 * pp.t3
    assert K.terms[(0,)] == (e1 - e3) / (e4 - 1)
    # no dependence on t at n=1
    assert K.terms[(0,)].specialize({"t": RatFun.from_int(RING_K6, 7)}, RING_K6) == K.terms[(0,)]


def test_s4_parameter_symmetry_box22():
    # with all parameters generic, permuting the quadruple equals applying
    # the generator permutation to each coefficient
    pp = _generic()
    names = ("t0", "t1", "t2", "t3")
    gens = {nm: RatFun.from_mpoly(RING_K6.var(nm)) for nm in names}
    for lam in partitions_in_box(2, 2):
        K = koornwinder_K(lam, 2, pp)
        for perm in itertools.permutations(range(4)):
            images = {names[i]: gens[names[perm[i]]] for i in range(4)}
            for key, c in K.terms.items():
                assert c.specialize(images, RING_K6) == c, (lam.parts, perm, key)


def test_inversion_symmetry():
    pp = _generic()
    K = koornwinder_K((2, 1), 2, pp)
    Kinv = koornwinder_K((2, 1), 2, pp.inverted())
    assert set(K.terms) == set(Kinv.terms)
    for key in K.terms:
        assert K.terms[key] == Kinv.terms[key]


def test_negation_sign_rule():
    # K_lam(-x; q,t; -t̲) = (-1)^{|lam|} K_lam(x; q,t; t̲): on the
    # coefficient of a weight w this reads (-1)^{|lam| - |w|}
    pp = _generic()
    K = koornwinder_K((2, 1), 2, pp)
    Kneg = koornwinder_K((2, 1), 2, pp.negated_quad())
    assert set(K.terms) == set(Kneg.terms)
    for key in K.terms:
        sign = -1 if (3 - sum(key)) % 2 else 1
        assert Kneg.terms[key] == K.terms[key] * sign


def test_parameter_collision_reported():
    ring = ring_of("q", "t")
    q = RatFun.from_mpoly(ring.var("q"))
    t = RatFun.from_mpoly(ring.var("t"))
    one = RatFun.from_int(ring, 1)
    pp = KoornwinderParams(q, t, one, one, one, one)
    with pytest.raises(ArithmeticError, match=r"cell \(1, 1\)"):
        koornwinder_K((1,), 1, pp)


def test_classical_reductions_rank_le_2():
    ring = ring_of("q")
    q = RatFun.from_mpoly(ring.var("q"))
    chars = {"sp": symp_schur, "o": ortho_schur, "so": odd_ortho_schur}
    for fam, char in chars.items():
        for n in (1, 2):
            for lam in partitions_in_box(4, n, lambda m: m.size <= 4):
                K = koornwinder_classical(fam, lam, n, q).expand_monomials()
                C = char(lam, n, ring=ring).expand_monomials()
                assert set(K) == set(C), (fam, lam.parts, n)
                for key in K:
                    assert K[key] == C[key], (fam, lam.parts, n, key)


def test_cc_symplectic_point():
    ring = ring_of("q")
    q = RatFun.from_mpoly(ring.var("q"))
    P = macdonald_CC((1,), 1, q, q, q)
    assert sorted(P.terms) == [(1,)]
    assert P.terms[(1,)] == 1


def test_cb_cc_generic_one_row():
    ring = ring_of("q", "t", "s")
    q, t, s = (RatFun.from_mpoly(ring.var(nm)) for nm in ring.names)
    for fn in (macdonald_CB, macdonald_CC):
        P = fn((1,), 1, q, t, s)
        # quadruple closed under negation kills the constant term
        assert sorted(P.terms) == [(1,)]
        assert P.terms[(1,)] == 1
    P = macdonald_CB((1, 1), 2, q, t, s)
    assert P.terms[(1, 1)] == 1
    assert (1, 0) not in P.terms


def test_bc_odd_half_powers():
    ring = ring_of("q", "t", "s")
    q, t, s = (RatFun.from_mpoly(ring.var(nm)) for nm in ring.names)
    with pytest.raises(ArithmeticError, match="square root"):
        macdonald_BC((1,), 1, q, t, s)
    ring2 = ring_of("Q", "t", "s")
    Q, t2, s2 = (RatFun.from_mpoly(ring2.var(nm)) for nm in ring2.names)
    P = macdonald_BC((1,), 1, Q * Q, t2, s2, q_half=Q)
    want = (s2 - 1) * (1 + Q) * (1 + Q * s2) / ((Q * s2 - 1) * (Q * s2 + 1))
    assert P.terms[(0,)] == want
    assert P.terms[(1,)] == 1


def test_mimachi_small_boxes():
    for (m, n) in ((1, 1), (2, 1), (1, 2)):
        rep = mimachi_check(m, n)
        assert rep.status == PASS, (m, n, rep.witness)
        assert rep.witness is None
        back = VerificationReport.from_json(rep.to_json())
        assert back.status == rep.status and back.params == rep.params


def test_mimachi_detects_breakage(monkeypatch):
    # the identity holds for every generic parameter pack, so a false case
    # has to corrupt a polynomial: double one K and expect a witness
    import qtbranch.koornwinder as kw

    real = kw.koornwinder_K

    def tampered(lam, n, params):
        K = real(lam, n, params)
        if lam.parts == (1,) and n == 1:
            return K.scale(RatFun.from_int(params.ring, 2))
        return K

    monkeypatch.setattr(kw, "koornwinder_K", tampered)
    rep = kw.mimachi_check(1, 1)
    assert rep.status == FAIL
    assert rep.witness is not None and "lhs" in rep.witness
