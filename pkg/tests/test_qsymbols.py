"""Hook-product symbol calculus: q-Pochhammer, C-symbols, coefficient families."""

import pytest

from qtbranch.partitions import (
    Partition,
    Weight,
    aspartition,
    double_col,
    double_row,
    partitions_in_box,
    partitions_up_to_size,
    stats,
    two_core_empty,
)
from qtbranch.qsymbols import (
    c_symbol,
    coeff_c,
    coeff_c_hat,
    coeff_d,
    coeff_d_hat,
    coeff_e,
    coeff_e_hat,
    coeff_f,
    delta0,
    kappa1,
    kappa1_quotient_form,
    kappa2,
    q_poch,
)
from qtbranch.ratfield import PoleError, RatFun, ring_of

R = ring_of("z", "q", "t", "w", "a", "b")


def rf(name):
    return RatFun.from_mpoly(R.var(name))


Z, Q, T, W, A, B = (rf(n) for n in ("z", "q", "t", "w", "a", "b"))
ONE = RatFun.from_int(R, 1)


# -- q-Pochhammer -------------------------------------------------------------

def test_q_poch_basics():
    assert q_poch(Z, Q, 0) == ONE
    assert q_poch(Z, Q, 2) == (ONE - Z) * (ONE - Z * Q)
    with pytest.raises((PoleError, ZeroDivisionError)):
        q_poch(Q, Q, -1)


def test_q_poch_concatenation():
    for n in (-2, -1, 0, 1, 3):
        for m in (-1, 0, 2):
            lhs = q_poch(Z, Q, n) * q_poch(Z * Q ** n, Q, m)
            assert lhs == q_poch(Z, Q, n + m), (n, m)


def test_q_poch_negative_is_reciprocal():
    assert q_poch(Z, Q, -2) * q_poch(Z * Q ** -2, Q, 2) == ONE


# -- C-symbols ----------------------------------------------------------------

def test_single_row_reductions():
    for N in range(5):
        row = Partition((N,)) if N else Partition(())
        assert c_symbol("0", row, Z, Q, T) == q_poch(Z, Q, N)
        assert c_symbol("-", row, Z, Q, T) == q_poch(Z, Q, N)
        assert c_symbol("+", row, Z, Q, T) == q_poch(Z, Q, 2 * N) / q_poch(Z, Q, N)


def test_cplus_single_box():
    assert c_symbol("+", (1,), Z, Q, T) == ONE - Z * Q


def test_weight_negative_row():
    w = Weight((-1,))
    assert c_symbol("0", w, Z, Q, T) == ONE / (ONE - Z / Q)


def test_weight_extension_consistent_with_partitions():
    # a partition viewed as a weight gives the same symbols
    lam = Partition((3, 1))
    w = Weight((3, 1, 0))
    for kind in ("0", "-", "+"):
        assert c_symbol(kind, lam, Z, Q, T) == c_symbol(kind, w, Z, Q, T)


def test_multi_argument_multiplicative():
    lam = (2, 1)
    got = c_symbol("0", lam, [Z, W], Q, T)
    assert got == c_symbol("0", lam, Z, Q, T) * c_symbol("0", lam, W, Q, T)


def test_parity_refinement_multiplies_to_full():
    for lam in partitions_up_to_size(6):
        for kind in ("0", "-", "+"):
            full = c_symbol(kind, lam, Z, Q, T)
            even = c_symbol(kind + "e", lam, Z, Q, T)
            odd = c_symbol(kind + "o", lam, Z, Q, T)
            assert even * odd == full, (lam, kind)


# -- identity suite (small sweep; the acceptance gate does the 4^4 box) -------

def _mono(c, ze, qe, te):
    ring = R
    from qtbranch.ratfield import MPoly

    e = [0] * ring.nvars
    e[ring.index["z"]] = ze
    e[ring.index["q"]] = qe
    e[ring.index["t"]] = te
    return RatFun.from_mpoly(MPoly(ring, {tuple(e): c}))


def test_conjugation_suite():
    for lam in partitions_in_box(3, 3):
        lam = aspartition(lam)
        lc = lam.conjugate()
        s = stats(lam)
        sz, nl, nlc = lam.size, s.n, s.n_conj
        zin = ONE / Z
        # C0
        lhs = c_symbol("0", lc, Z, T, Q)
        rhs = _mono((-1) ** sz, sz, -nlc, nl) * c_symbol("0", lam, zin, Q, T)
        assert lhs == rhs, lam
        # C-
        assert c_symbol("-", lc, Z, T, Q) == c_symbol("-", lam, Z, Q, T)
        # C+
        lhs = c_symbol("+", lc, Z, T, Q)
        rhs = _mono((-1) ** sz, sz, -3 * nlc, 3 * nl + sz) * c_symbol(
            "+", lam, ONE / (Z * Q * T), Q, T
        )
        assert lhs == rhs, lam


def test_reciprocity_suite():
    qin, tin, zin = ONE / Q, ONE / T, ONE / Z
    for lam in partitions_in_box(3, 3):
        lam = aspartition(lam)
        s = stats(lam)
        sz, nl, nlc = lam.size, s.n, s.n_conj
        assert c_symbol("0", lam, zin, qin, tin) == _mono(
            (-1) ** sz, -sz, -nlc, nl
        ) * c_symbol("0", lam, Z, Q, T)
        assert c_symbol("-", lam, zin, qin, tin) == _mono(
            (-1) ** sz, -sz, -nlc, -nl
        ) * c_symbol("-", lam, Z, Q, T)
        assert c_symbol("+", lam, zin, qin, tin) == _mono(
            (-1) ** sz, -sz, -3 * nlc - sz, 3 * nl
        ) * c_symbol("+", lam, Z, Q, T)


def test_double_and_square_suite():
    q2, t2 = Q * Q, T * T
    for lam in partitions_in_box(3, 3):
        lam = aspartition(lam)
        for kind in ("0", "-", "+"):
            assert c_symbol(kind, double_row(lam), Z, Q, T) == c_symbol(
                kind, lam, [Z, Z * Q], q2, T
            ), (lam, kind)
        sq = double_col(lam)
        assert c_symbol("0", sq, Z, Q, T) == c_symbol("0", lam, [Z, Z / T], Q, t2)
        assert c_symbol("-", sq, Z, Q, T) == c_symbol("-", lam, [Z, Z * T], Q, t2)
        assert c_symbol("+", sq, Z, Q, T) == c_symbol("+", lam, [Z / T, Z / t2], Q, t2)
        for kind in ("0", "-", "+"):
            assert c_symbol(kind, lam, [Z, -Z], Q, T) == c_symbol(
                kind, lam, Z * Z, q2, t2
            ), (lam, kind)


def test_add_square_suite():
    for lam in partitions_in_box(2, 2):
        lam = aspartition(lam)
        n = 2
        for N in (1, 2):
            big = Partition(tuple(p + N for p in (lam.parts + (0,) * (n - lam.length))))
            rect = Partition((N,) * n)
            tpw = T ** (n - 1)
            assert c_symbol("0", big, Z, Q, T) == c_symbol("0", rect, Z, Q, T) * c_symbol(
                "0", lam, Z * Q ** N, Q, T
            )
            assert c_symbol("-", big, Z, Q, T) == (
                c_symbol("-", rect, Z, Q, T)
                * c_symbol("-", lam, Z, Q, T)
                * c_symbol("0", lam, Z * Q ** N * tpw, Q, T)
                / c_symbol("0", lam, Z * tpw, Q, T)
            )
            assert c_symbol("+", big, Z, Q, T) == (
                c_symbol("+", rect, Z, Q, T)
                * c_symbol("+", lam, Z * Q ** (2 * N), Q, T)
                * c_symbol("0", lam, Z * Q ** (2 * N) / tpw, Q, T)
                / c_symbol("0", lam, Z * Q ** N / tpw, Q, T)
            )


def test_even_odd_conjugation():
    # minus symbols swap q,t across conjugation parity-wise
    for lam in partitions_up_to_size(8):
        lc = aspartition(lam).conjugate()
        for par in ("e", "o"):
            assert c_symbol("-" + par, lc, Z, T, Q) == c_symbol("-" + par, lam, Z, Q, T)


# -- delta ratios -------------------------------------------------------------

def test_delta0_trivial():
    assert delta0(A, [B], (), Q, T) == ONE
    assert delta0(A, [], (2, 1), Q, T) == ONE


def test_delta0_single_box():
    got = delta0(A, [B], (1,), Q, T)
    assert got == (ONE - B) / (ONE - A * Q / B)


# -- coefficient families ------------------------------------------------------

def test_families_empty_shape():
    for fam in (coeff_c, coeff_d, coeff_e):
        assert fam((), W, Z, Q, T) == ONE
    assert coeff_f((), W, Z, Q, T) == ONE


def test_family_domain_conventions():
    assert coeff_c((2, 1), W, Z, Q, T).is_zero  # conjugate not even
    assert coeff_d((1,), W, Z, Q, T).is_zero  # shape not even
    assert coeff_f((1,), W, Z, Q, T).is_zero  # nonempty 2-core


def test_family_dual_routes_agree():
    for lam in partitions_up_to_size(6):
        if not stats(lam).size % 2:
            pass
        for fam, admissible in (
            (coeff_c, lambda p: all(x % 2 == 0 for x in p.conjugate().parts)),
            (coeff_d, lambda p: all(x % 2 == 0 for x in p.parts)),
            (coeff_e, lambda p: True),
        ):
            if admissible(lam):
                a = fam(lam, W, Z, Q, T, route="symbols")
                b = fam(lam, W, Z, Q, T, route="squares")
                assert a == b, (fam.__name__, lam)


def test_family_dualities():
    win, zin, qin, tin = ONE / W, ONE / Z, ONE / Q, ONE / T
    for lam in partitions_up_to_size(6):
        lam = aspartition(lam)
        if all(x % 2 == 0 for x in lam.conjugate().parts):
            assert coeff_c(lam, W, Z, Q, T) == coeff_c(lam, win, zin, qin, tin)
        if all(x % 2 == 0 for x in lam.parts):
            assert coeff_d(lam, W, Z, Q, T) == coeff_d(lam, win, zin, qin, tin)
        assert coeff_e(lam, W, Z, Q, T) == coeff_e(lam, win, zin, qin, tin)
        if two_core_empty(lam):
            assert coeff_f(lam, W, Z, Q, T) == coeff_f(lam, win, zin, qin, tin)


def test_hatted_families_match_conjugate_swap():
    # hatted families equal the plain ones on conjugate shapes with both
    # arguments inverted and swapped and q,t exchanged (a sign for e)
    zin, win = ONE / Z, ONE / W
    for lam in partitions_up_to_size(6):
        lam = aspartition(lam)
        if all(p % 2 == 0 for p in lam.parts):
            mu = aspartition(tuple(p // 2 for p in lam.parts))
            assert coeff_c_hat(lam, W, Z, Q, T) == coeff_c(
                double_col(mu.conjugate()), zin, win, T, Q
            ), lam
        if all(p % 2 == 0 for p in lam.conjugate().parts):
            mu = aspartition(tuple(p // 2 for p in lam.conjugate().parts)).conjugate()
            assert coeff_d_hat(lam, W, Z, Q, T) == coeff_d(
                double_row(mu.conjugate()), zin, win, T, Q
            ), lam
        sign = -1 if lam.size % 2 else 1
        assert coeff_e_hat(lam, W, Z, Q, T) == coeff_e(
            lam.conjugate(), zin, win, T, Q
        ) * sign, lam


def test_f_on_a_domino():
    val = coeff_f((2,), W, Z, Q, T)
    assert not val.is_zero
    # (2) has cells (1,1),(1,2) with arm+leg parities 1,0
    assert coeff_f((1, 1), W, Z, Q, T) != val  # column domino differs in general


# -- kappa weights ------------------------------------------------------------

def test_kappa_zero_outside_domain():
    assert kappa1((1,), Z, Q, T).is_zero
    assert kappa2((2, 1), Z, Q, T).is_zero


def test_kappa_trivial():
    assert kappa1((), Z, Q, T) == ONE
    assert kappa2((), Z, Q, T) == ONE
    assert kappa1((), None, Q, T) == ONE


def test_kappa1_limit_matches_quotient_form():
    for lam in partitions_up_to_size(8):
        if not two_core_empty(lam):
            continue
        assert kappa1(lam, None, Q, T) == kappa1_quotient_form(lam, Q, T), lam
