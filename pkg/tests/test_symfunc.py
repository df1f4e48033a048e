"""Symmetric polynomials: bases, characters, Macdonald P, omega twist."""

from fractions import Fraction

import pytest

from qtbranch.partitions import Partition, Weight, aspartition, interlaces, partitions_in_box, partitions_up_to_size
from qtbranch.ratfield import MPoly, RatFun, ring_of
from qtbranch.symfunc import (
    RING_QT,
    SymPoly,
    e_basis,
    from_power_sums,
    h_basis,
    m_basis,
    macdonald_P,
    macdonald_Q,
    odd_ortho_schur,
    omega_qt,
    ortho_schur,
    p_basis,
    qt_generators,
    qt_norm,
    schur,
    schur_expand,
    skew_schur,
    specialize_plusminus,
    symp_schur,
    to_power_sums,
    universal_o_truncated,
    universal_so_truncated,
    universal_sp_truncated,
)

Q, T = qt_generators()
ONE = RatFun.from_int(RING_QT, 1)


# -- classical bases -----------------------------------------------------------

def test_basis_examples():
    assert e_basis(1, 2) == m_basis((1,), 2)
    assert h_basis(2, 2) == m_basis((2,), 2) + m_basis((1, 1), 2)
    assert p_basis(2, 1) == m_basis((2,), 1)


def test_symmetry_probe_rejects_asymmetric_input():
    with pytest.raises(ValueError):
        SymPoly.from_monomial_dict(RING_QT, 2, {(2, 0): ONE, (0, 2): ONE + Q})


def test_monomial_product_round_trip():
    a = m_basis((2, 1), 3)
    b = m_basis((1, 1), 3)
    prod = a * b
    rebuilt = SymPoly.from_monomial_dict(RING_QT, 3, prod.expand_monomials())
    assert rebuilt == prod


# -- Schur routes ---------------------------------------------------------------

def test_schur_examples():
    assert schur((1,), 2) == m_basis((1,), 2)
    assert schur((1, 1, 1), 2).is_zero
    for route in ("h", "e"):
        assert skew_schur((2, 1), (), 2, route=route) == schur((2, 1), 2)


def test_skew_schur_routes_agree():
    for route in ("h", "e"):
        got = skew_schur((3, 2, 1), (2, 1), 3, route=route)
        assert got == skew_schur((3, 2, 1), (2, 1), 3, route="h")
    # skewing by the full shape leaves the constant 1
    assert skew_schur((2, 1), (2, 1), 2, route="h") == SymPoly.one(RING_QT, 2)


def test_schur_expand_inverts_schur():
    f = schur((2, 1), 3) + schur((1, 1, 1), 3).scale(Q)
    exp = schur_expand(f)
    assert exp[Partition((2, 1))] == ONE
    assert exp[Partition((1, 1, 1))] == Q


# -- symplectic / orthogonal characters -----------------------------------------

def test_weyl_character_examples():
    sp1 = symp_schur((1,), 1)
    assert sp1.terms == {(1,): ONE, (-1,): ONE}
    assert odd_ortho_schur((), 1) == SymPoly.one(RING_QT, 1)


def test_universal_truncations_match_weyl():
    for lam in partitions_in_box(2, 2):
        assert universal_sp_truncated(lam, 2) == symp_schur(lam, 2), lam
        assert universal_o_truncated(lam, 2) == ortho_schur(lam, 2), lam
        assert universal_so_truncated(lam, 2) == odd_ortho_schur(lam, 2), lam


def test_universal_truncation_vanishes_when_too_long():
    assert universal_sp_truncated((1, 1, 1), 2).is_zero
    assert universal_o_truncated((2, 2, 1), 2).is_zero


def test_interlacing_branching_so_from_sp():
    # so_lam equals the sum of sp_mu over mu whose conjugate interlaces lam'
    lam = Partition((2, 1))
    lamc = lam.conjugate()
    total = SymPoly.zero(RING_QT, 2)
    for mu in partitions_up_to_size(lam.size):
        if mu.length <= 2 and interlaces(mu.conjugate(), lamc):
            total = total + symp_schur(mu, 2)
    assert total == odd_ortho_schur(lam, 2)


def test_half_factor_for_short_orthogonal_shapes():
    # l(lam) < n halves the determinant; the result must still be exact
    o = ortho_schur((1,), 2)
    prod = o * SymPoly.from_monomial_dict(RING_QT, 2, {(0, 0): RatFun.from_int(RING_QT, 2)})
    assert prod.coefficient((1, 0)) == RatFun.from_int(RING_QT, 2)


# -- Macdonald polynomials -------------------------------------------------------

def test_macdonald_examples():
    assert macdonald_P((1, 1), 2, Q, T) == e_basis(2, 2)
    assert macdonald_P((1, 1), 3, Q, T) == e_basis(2, 3)
    P2 = macdonald_P((2,), 2, Q, T)
    expected = (ONE + Q) * (ONE - T) / (ONE - Q * T)
    assert P2.coefficient((2, 0)) == ONE
    assert P2.coefficient((1, 1)) == expected
    for N in (1, 2, 3):
        got = macdonald_P((N, N), 2, Q, T)
        assert got.terms == {(N, N): ONE}


def test_macdonald_routes_agree():
    for lam in partitions_up_to_size(4):
        for n in (2, 3):
            assert macdonald_P(lam, n, Q, T, route="operator") == macdonald_P(
                lam, n, Q, T, route="gram"
            ), (lam, n)


def test_macdonald_dominance_triangular_and_monic():
    from qtbranch.partitions import dominance_le

    P = macdonald_P((3, 1), 3, Q, T)
    assert P.coefficient((3, 1, 0)) == ONE
    for supp in P.terms:
        kappa = Partition(tuple(e for e in supp if e))
        assert dominance_le(kappa, Partition((3, 1)))


def test_macdonald_weight_input():
    w = Weight((2, -1))
    got = macdonald_P(w, 2, Q, T)
    assert got == macdonald_P((3,), 2, Q, T).shift_all(-1)
    with pytest.raises(ValueError):
        macdonald_P(w, 3, Q, T)


def test_macdonald_inversion_symmetry():
    # P(1/x) = P indexed by the reversed negated weight, box (3,3,3)
    for lam in partitions_in_box(3, 3):
        w = Weight(tuple(-p for p in reversed(lam.parts + (0,) * (3 - lam.length))))
        direct = macdonald_P(w, 3, Q, T)
        inverted = {}
        P = macdonald_P(lam, 3, Q, T)
        for supp, c in P.expand_monomials().items():
            inverted[tuple(-e for e in supp)] = c
        assert SymPoly.from_monomial_dict(RING_QT, 3, inverted) == direct, lam


def test_macdonald_schur_degeneration():
    for lam in partitions_up_to_size(6):
        if lam.length <= 3:
            assert macdonald_P(lam, 3, Q, Q) == schur(lam, 3), lam


def test_cauchy_identity_two_by_two():
    ring = ring_of("q", "t", "x1", "x2", "y1", "y2")
    rf = lambda n: RatFun.from_mpoly(ring.var(n))
    q, t = rf("q"), rf("t")
    xs, ys = [rf("x1"), rf("x2")], [rf("y1"), rf("y2")]
    one = RatFun.from_int(ring, 1)
    lhs = RatFun.from_int(ring, 0)
    for lam in partitions_in_box(2, 2):
        lhs = lhs + macdonald_P(lam, 2, q, t).eval_point(xs) * macdonald_P(
            lam.conjugate(), 2, t, q
        ).eval_point(ys)
    rhs = one
    for x in xs:
        for y in ys:
            rhs = rhs * (one + x * y)
    assert lhs == rhs


# -- norms -----------------------------------------------------------------------

def test_qt_norm_examples():
    assert qt_norm((), 2, Q, T) == ONE
    val = qt_norm((1,), 2, Q, T)
    num = (ONE - Q) * (ONE - T ** 2)
    den = (ONE - T) * (ONE - Q * T)
    assert val == num / den
    assert str(val) == "(q*t^2 - q - t^2 + 1) / [(q*t^2 - q*t - t + 1)]"


def test_qt_norm_weight_invariance():
    # norms depend only on part differences
    a = qt_norm(Weight((2, 1)), 2, Q, T)
    b = qt_norm((1,), 2, Q, T)
    assert a == b


# -- omega twist ------------------------------------------------------------------

def test_omega_examples():
    pexp = to_power_sums(p_basis(1, 2))
    twisted = omega_qt(pexp, Q, T)
    [(rho, c)] = list(twisted.items())
    assert rho == Partition((1,))
    assert c == (ONE - Q) / (ONE - T)


def test_omega_qq_is_classical():
    # omega(h_r) = e_r through degree 4
    for r in (1, 2, 3, 4):
        pexp = to_power_sums(h_basis(r, 4))
        twisted = omega_qt(pexp, Q, Q)
        assert from_power_sums(twisted, 4, RING_QT) == e_basis(r, 4)


def test_omega_sends_P_to_conjugate_Q():
    pexp = to_power_sums(macdonald_P((2,), 2, Q, T))
    twisted = omega_qt(pexp, Q, T)
    got = from_power_sums(twisted, 2, RING_QT)
    assert got == macdonald_Q((1, 1), 2, T, Q)


def test_power_sum_degree_bound():
    f = m_basis((25,), 25)
    with pytest.raises(ValueError):
        to_power_sums(f)


# -- x+- specialization ------------------------------------------------------------

def test_plusminus_specialization():
    # e_1 on (x1, 1/x1, x2, 1/x2) = m(1) + m(-1) folded to 2 variables
    f = e_basis(1, 4)
    g = specialize_plusminus(f)
    assert g.n == 2
    assert g.terms == {(1, 0): ONE, (0, -1): ONE}


# -- torus constant-term spot checks ------------------------------------------------

def _density_series(qmax, zmax):
    """Laurent coefficients in z = x1/x2 of the n=2 weight function
    prod_{k>=0} (1-zq^k)(1-q^k/z)/((1-tzq^k)(1-tq^k/z)), truncated at q^qmax,
    coefficients exact in Q(t).  The k=0 geometric tails are summed in closed
    form; k>=1 factors are polynomial after truncation."""
    ring = ring_of("t")
    t = RatFun.from_mpoly(ring.var("t"))
    one = RatFun.from_int(ring, 1)
    inv = one / (one - t * t)
    series = {}
    for j in range(-zmax, zmax + 1):
        c = (
            t ** abs(j) * 2 - t ** abs(j - 1) - t ** abs(j + 1)
        ) * inv
        if not c.is_zero:
            series[(j, 0)] = c
    for k in range(1, qmax + 1):
        factor = {(0, 0): one}
        for sign in (1, -1):
            base = {(0, 0): one, (sign, k): -one}
            geom = {}
            m = 0
            while k * m <= qmax and m <= 2 * zmax:
                geom[(sign * m, k * m)] = t ** m
                m += 1
            part = _series_mul(base, geom, qmax, zmax)
            factor = _series_mul(factor, part, qmax, zmax)
        series = _series_mul(series, factor, qmax, zmax)
    return series


def _series_mul(a, b, qmax, zmax):
    out = {}
    for (za, qa), ca in a.items():
        for (zb, qb), cb in b.items():
            z, q = za + zb, qa + qb
            if q > qmax or abs(z) > zmax:
                continue
            key = (z, q)
            cur = out.get(key)
            v = ca * cb
            out[key] = v if cur is None else cur + v
    return {k: v for k, v in out.items() if not v.is_zero}


def _z_profile(f, g):
    """x1^a x2^b coefficients of f(x) g(1/x) collected by a (requires equal
    degrees so that a+b=0 on every term)."""
    prof = {}
    for sa, ca in f.expand_monomials().items():
        for sb, cb in g.expand_monomials().items():
            a = sa[0] - sb[0]
            b = sa[1] - sb[1]
            assert a + b == 0
            prof[a] = prof.get(a, RatFun.from_int(ca.ring, 0)) + ca * cb
    return prof


def _q_coeffs(poly, qmax, tring):
    t = RatFun.from_mpoly(tring.var("t"))
    out = [RatFun.from_int(tring, 0)] * (qmax + 1)
    for (qe, te), c in poly.terms.items():
        if qe <= qmax:
            out[qe] = out[qe] + t ** te * c
    return out


def _truncate_q(val, qmax, tring):
    """Coefficients of q^0..q^qmax of a RatFun in (q,t) as RatFuns in t.
    The denominator is inverted as a power series in q; its q-constant term
    must be nonzero, which holds for all Macdonald data used here."""
    zero = RatFun.from_int(tring, 0)
    num = _q_coeffs(val.num, qmax, tring)
    den = [zero] * (qmax + 1)
    den[0] = RatFun.from_int(tring, val.scalar)
    for f, k in val.den.items():
        fc = _q_coeffs(f, qmax, tring)
        for _ in range(k):
            nxt = [zero] * (qmax + 1)
            for i in range(qmax + 1):
                for j in range(qmax + 1 - i):
                    nxt[i + j] = nxt[i + j] + den[i] * fc[j]
            den = nxt
    assert not den[0].is_zero
    inv = [zero] * (qmax + 1)
    inv[0] = RatFun.from_int(tring, 1) / den[0]
    for i in range(1, qmax + 1):
        acc = zero
        for j in range(1, i + 1):
            acc = acc + den[j] * inv[i - j]
        inv[i] = -acc / den[0]
    out = [zero] * (qmax + 1)
    for i in range(qmax + 1):
        for j in range(qmax + 1 - i):
            out[i + j] = out[i + j] + num[i] * inv[j]
    return out


def test_torus_constant_term_orthogonality():
    qmax = 8
    tring = ring_of("t")
    pairs = [((2,), (1, 1)), ((3,), (2, 1))]
    for lam, mu in pairs:
        f = macdonald_P(lam, 2, Q, T)
        g = macdonald_P(mu, 2, Q, T)
        zmax = aspartition(lam).size + qmax + 2
        dens = _density_series(qmax, zmax)
        prof = _z_profile(f, g)
        total = [RatFun.from_int(tring, 0)] * (qmax + 1)
        for a, coeff in prof.items():
            cq = _truncate_q(coeff, qmax, tring)
            for (z, qp), dv in dens.items():
                if z == -a:
                    for i in range(qmax + 1 - qp):
                        total[i + qp] = total[i + qp] + cq[i] * dv
        assert all(v.is_zero for v in total), (lam, mu)


def test_torus_constant_term_norm_ratio():
    qmax = 6
    tring = ring_of("t")
    for lam in [(1,), (2,), (1, 1)]:
        f = macdonald_P(lam, 2, Q, T)
        zmax = aspartition(lam).size + qmax + 2
        dens = _density_series(qmax, zmax)
        prof = _z_profile(f, f)
        num_series = [RatFun.from_int(tring, 0)] * (qmax + 1)
        for a, coeff in prof.items():
            cq = _truncate_q(coeff, qmax, tring)
            for (z, qp), dv in dens.items():
                if z == -a:
                    for i in range(qmax + 1 - qp):
                        num_series[i + qp] = num_series[i + qp] + cq[i] * dv
        den_series = [RatFun.from_int(tring, 0)] * (qmax + 1)
        for (z, qp), dv in dens.items():
            if z == 0:
                den_series[qp] = den_series[qp] + dv
        norm = qt_norm(lam, 2, Q, T)
        target = _truncate_q(norm, qmax, tring)
        # compare num_series with target * den_series as truncated series
        for i in range(qmax + 1):
            conv = RatFun.from_int(tring, 0)
            for j in range(i + 1):
                conv = conv + target[j] * den_series[i - j]
            assert conv == num_series[i], (lam, i)


# -- serialization -----------------------------------------------------------------

def test_sympoly_json():
    data = macdonald_P((1, 1), 2, Q, T).to_json()
    assert data == [{"exponents": [1, 1], "coefficient": "1"}]
