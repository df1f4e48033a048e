"""Six-parameter hyperoctahedral orthogonal polynomials.

K_lam(x; q, t; t0, t1, t2, t3) is assembled from the binomial expansion over
interpolation polynomials.  The binomial coefficient enters at the shifted
parameter T with T^2 = t^{2n-2} t0 t1 t2 t3 / q and is a function of T^2
only, so the assembly runs in an extension ring carrying a formal square
root and eliminates it exactly before returning.  Named specializations of
the parameter quadruple produce the B/C-type Macdonald polynomial families
and, at t = q, the classical symplectic and orthogonal characters.
"""

import threading
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .interpolation import BCnPoly, SpectralVector, interp_poly
from .partitions import (
    Partition,
    PartitionLike,
    aspartition,
    complement,
    contains,
    n_conj_stat,
    n_stat,
    partitions_in_box,
)
from .qsymbols import c_symbol
from .ratfield import MPoly, RatFun, Ring, VarRegistry, ring_of
from .report import FAIL, PASS, VerificationReport

RING_K6 = ring_of("q", "t", "t0", "t1", "t2", "t3")


class KoornwinderParams:
    """Parameter pack (q, t; t0, t1, t2, t3), all in one coefficient ring."""

    __slots__ = ("q", "t", "t0", "t1", "t2", "t3")

    def __init__(self, q: RatFun, t: RatFun, t0: RatFun, t1: RatFun, t2: RatFun, t3: RatFun):
        ring = q.ring
        for v in (t, t0, t1, t2, t3):
            if v.ring != ring:
                raise ValueError("all parameters must share one ring")
        self.q, self.t = q, t
        self.t0, self.t1, self.t2, self.t3 = t0, t1, t2, t3

    @staticmethod
    def generic() -> "KoornwinderParams":
        gens = tuple(RatFun.from_mpoly(RING_K6.var(n)) for n in RING_K6.names)
        return KoornwinderParams(*gens)

    @property
    def ring(self) -> Ring:
        return self.q.ring

    @property
    def quad(self) -> Tuple[RatFun, RatFun, RatFun, RatFun]:
        return (self.t0, self.t1, self.t2, self.t3)

    def T2(self, n: int) -> RatFun:
        return self.t ** (2 * n - 2) * self.t0 * self.t1 * self.t2 * self.t3 / self.q

    def with_quad(self, quad: Sequence[RatFun]) -> "KoornwinderParams":
        return KoornwinderParams(self.q, self.t, *quad)

    def swapped_qt(self) -> "KoornwinderParams":
        return KoornwinderParams(self.t, self.q, *self.quad)

    def inverted(self) -> "KoornwinderParams":
        one = RatFun.from_int(self.ring, 1)
        return KoornwinderParams(*(one / v for v in (self.q, self.t) + self.quad))

    def negated_quad(self) -> "KoornwinderParams":
        return KoornwinderParams(self.q, self.t, *(-v for v in self.quad))

    def fingerprint(self) -> Tuple:
        return (self.ring.names, str(self.q), str(self.t)) + tuple(str(v) for v in self.quad)


def _fresh_name(names: Sequence[str], base: str = "Tk") -> str:
    if base not in names:
        return base
    i = 2
    while "%s%d" % (base, i) in names:
        i += 1
    return "%s%d" % (base, i)


def _monomial_data(val: RatFun) -> Tuple[int, Tuple[int, ...]]:
    """(sign, exponents) of a signed monomial RatFun; raises otherwise."""
    if val.den or val.scalar != 1 or not val.num.is_monomial:
        raise ArithmeticError("shifted parameter square is not a signed monomial")
    (exps, c) = next(iter(val.num.terms.items()))
    if c not in (1, -1):
        raise ArithmeticError("shifted parameter square is not a signed monomial")
    return c, exps


def _tb_even_poly(p: MPoly, idx: int) -> bool:
    return all(e[idx] % 2 == 0 for e in p.terms)


def _tb_mirror(p: MPoly, idx: int, ext: Ring) -> MPoly:
    return MPoly(ext, {e: (-v if e[idx] % 2 else v) for e, v in p.terms.items()})


def _tb_surgery(p: MPoly, idx: int, t2_sign: int, t2_exps: Tuple[int, ...], target: Ring) -> MPoly:
    out: Dict[Tuple[int, ...], int] = {}
    for e, v in p.terms.items():
        k = e[idx] // 2
        base = e[:idx] + e[idx + 1 :]
        ne = tuple(b + k * g for b, g in zip(base, t2_exps))
        if t2_sign < 0 and k % 2:
            v = -v
        out[ne] = out.get(ne, 0) + v
    return MPoly(target, out)


def _tb_even_value(val: RatFun, ext: Ring, target: Ring, t2: RatFun) -> RatFun:
    """Eliminate the formal square root (last ext generator) from a value
    that is even in it, sending its square to t2 (a signed monomial in the
    target ring)."""
    idx = ext.nvars - 1
    sign, exps = _monomial_data(t2)
    num = val.num
    dens: List[Tuple[MPoly, int]] = []
    for f, k in val.den.items():
        if _tb_even_poly(f, idx):
            dens.append((_tb_surgery(f, idx, sign, exps, target), k))
        else:
            m = _tb_mirror(f, idx, ext)
            g = f * m
            if not _tb_even_poly(g, idx):
                raise ArithmeticError("denominator not even in the formal square root")
            for _ in range(k):
                num = num * m
            dens.append((_tb_surgery(g, idx, sign, exps, target), k))
    if not _tb_even_poly(num, idx):
        raise ArithmeticError("value is not a function of the squared parameter")
    out = RatFun.from_mpoly(_tb_surgery(num, idx, sign, exps, target))
    out = out / RatFun.from_int(target, val.scalar)
    for f, k in dens:
        out = out / RatFun.from_mpoly(f) ** k
    return out


def _cplus_guard(lam: Partition, T2: RatFun, q: RatFun, t: RatFun) -> None:
    conj = lam.conjugate()
    one = RatFun.from_int(q.ring, 1)
    for (i, j) in lam.cells():
        f = one - T2 * q ** (lam.part(i) + j - 1) * t ** (2 - conj.part(j) - i)
        if f.is_zero:
            raise ArithmeticError(
                "parameter collision: co-hook factor at cell (%d, %d) of %s vanishes "
                "(argument %s)" % (i, j, lam.parts, T2)
            )


_k_lock = threading.RLock()
_k_cache: Dict[Tuple, BCnPoly] = {}


def koornwinder_K(lam: PartitionLike, n: int, params: KoornwinderParams) -> BCnPoly:
    """Koornwinder polynomial K_lam(x_1..x_n; q, t; t0..t3) via the binomial
    expansion over interpolation polynomials."""
    lam = aspartition(lam)
    if lam.length > n:
        raise ValueError("partition longer than the variable count")
    key = (lam.parts, n, params.fingerprint())
    with _k_lock:
        got = _k_cache.get(key)
    if got is not None:
        return got
    ring = params.ring
    T2 = params.T2(n)
    _cplus_guard(lam, T2, params.q, params.t)

    ext = ring_of(*(ring.names + (_fresh_name(ring.names),)))
    lift = lambda v: v.specialize({}, ext)
    q, t, t0 = lift(params.q), lift(params.t), lift(params.t0)
    Tb = RatFun.from_mpoly(ext.var(ext.names[-1]))
    sp = Tb * t ** (1 - n)
    a_args = (
        t ** n,
        t ** (n - 1) * t0 * lift(params.t1),
        t ** (n - 1) * t0 * lift(params.t2),
        t ** (n - 1) * t0 * lift(params.t3),
    )
    point = SpectralVector(lam, n, q, t).scaled(sp)
    out = BCnPoly(ring, n, {})
    for mu in partitions_in_box(lam.part(1), n, lambda m: contains(m, lam)):
        pvalue = interp_poly(mu, n, q, t, sp).eval_point(point)
        if pvalue.is_zero:
            continue
        skew = lam.size - mu.size
        pref = (t0 * t ** (n - 1)) ** (-skew)
        pref = pref * t ** (n_stat(lam) - 2 * n_stat(mu)) * q ** (2 * n_conj_stat(mu))
        pref = pref * (Tb * q) ** mu.size
        coeff = pref * c_symbol("-", mu, t, q, t) * pvalue
        for (i, j) in lam.cells():
            if j > mu.part(i):
                for a in a_args:
                    coeff = coeff * (1 - a * q ** (j - 1) * t ** (1 - i))
        for f in _cminus_cells(mu, q, q, t):
            coeff = coeff / f
        coeff_t = _tb_even_value(coeff, ext, ring, T2)
        out = out + interp_poly(mu, n, params.q, params.t, params.t0).scale(coeff_t)
    conj = lam.conjugate()
    qb, tb = params.q, params.t
    for f in _cminus_cells(lam, tb, qb, tb):
        out = out.scale(RatFun.from_int(ring, 1) / f)
    for (i, j) in lam.cells():
        f = 1 - T2 * qb ** (lam.part(i) + j - 1) * tb ** (2 - conj.part(j) - i)
        out = out.scale(RatFun.from_int(ring, 1) / f)
    assert not out.is_rational
    with _k_lock:
        _k_cache[key] = out
    return out


def _cminus_cells(lam: Partition, z: RatFun, q: RatFun, t: RatFun) -> List[RatFun]:
    """The individual cell factors 1 - z q^arm t^leg of the lower hook symbol."""
    conj = lam.conjugate()
    out = []
    for (i, j) in lam.cells():
        out.append(1 - z * q ** (lam.part(i) - j) * t ** (conj.part(j) - i))
    return out


# -- named Macdonald specializations ---------------------------------------------

_REG_HALF = VarRegistry(half=("q", "s"), full=("t",))


def _macdonald_via_registry(
    lam: PartitionLike,
    n: int,
    q: RatFun,
    t: RatFun,
    s: RatFun,
    quad_of: str,
    q_half: Optional[RatFun] = None,
    s_half: Optional[RatFun] = None,
) -> BCnPoly:
    lam = aspartition(lam)
    reg = _REG_HALF
    qr = reg.power("q", 1)
    tr = reg.var("t")
    sr = reg.power("s", 1)
    qh = reg.power("q", Fraction(1, 2))
    sh = reg.power("s", Fraction(1, 2))
    if quad_of == "CB":
        quad = (sh, -sh, qh, -qh)
    elif quad_of == "CC":
        quad = (sh, -sh, qh * sh, -(qh * sh))
    elif quad_of == "BC":
        one = reg.const(1)
        quad = (-one, -qh, sr, sr * qh)
    else:
        raise ValueError("unknown specialization %r" % (quad_of,))
    K = koornwinder_K(lam, n, KoornwinderParams(qr, tr, *quad))
    ring = q.ring
    images = {"Q": (q, q_half), "S": (s, s_half), "t": (t, None)}
    terms: Dict[Tuple[int, ...], RatFun] = {}
    for key, c in K.terms.items():
        img = _half_down(c, reg.ring, images, ring)
        if not img.is_zero:
            terms[key] = img
    return BCnPoly(ring, n, terms)


def _half_down(
    val: RatFun,
    src: Ring,
    images: Dict[str, Tuple[RatFun, Optional[RatFun]]],
    target: Ring,
    halves: Optional[Sequence[str]] = None,
) -> RatFun:
    """Map a value over a half-power registry ring to the parameter ring.

    Each generator name maps to (full_image, half_image); a half generator
    raised to exponent 2k contributes full_image^k, and an odd exponent
    needs half_image (the caller-supplied square root) or raises.  halves
    names the square-root generators and defaults to {"Q", "S"}.
    """
    halves = {"Q", "S"} if halves is None else set(halves)

    def poly_down(p: MPoly) -> RatFun:
        out = RatFun.from_int(target, 0)
        for e, c in p.terms.items():
            term = RatFun.from_int(target, c)
            for name, expo in zip(src.names, e):
                if not expo:
                    continue
                full, half = images[name]
                if name in halves:
                    if expo % 2:
                        if half is None:
                            raise ArithmeticError(
                                "odd power of the half generator %s; pass its square root"
                                % (name,)
                            )
                        term = term * half ** expo
                    else:
                        term = term * full ** (expo // 2)
                else:
                    term = term * full ** expo
            out = out + term
        return out

    out = poly_down(val.num) / RatFun.from_int(target, val.scalar)
    for f, k in val.den.items():
        img = poly_down(f)
        if img.is_zero:
            raise ZeroDivisionError("denominator vanishes under the requested parameters")
        out = out / img ** k
    return out


def macdonald_CB(lam: PartitionLike, n: int, q: RatFun, t: RatFun, s: RatFun) -> BCnPoly:
    """C-type family with one parameter, quadruple (s^(1/2), -s^(1/2), q^(1/2), -q^(1/2))."""
    return _macdonald_via_registry(lam, n, q, t, s, "CB")


def macdonald_CC(lam: PartitionLike, n: int, q: RatFun, t: RatFun, s: RatFun) -> BCnPoly:
    """C-type family with quadruple (s^(1/2), -s^(1/2), (qs)^(1/2), -(qs)^(1/2))."""
    return _macdonald_via_registry(lam, n, q, t, s, "CC")


def macdonald_BC(
    lam: PartitionLike,
    n: int,
    q: RatFun,
    t: RatFun,
    s: RatFun,
    q_half: Optional[RatFun] = None,
) -> BCnPoly:
    """B-type family with quadruple (-1, -q^(1/2), s, s q^(1/2)); partitions only.

    Coefficients genuinely involve q^(1/2); pass q_half with q_half^2 = q
    whenever odd powers survive (they do already at lam=(1), n=1).
    """
    return _macdonald_via_registry(lam, n, q, t, s, "BC", q_half=q_half)


_REG_QHALF = VarRegistry(half=("q",), full=("t",))

_CLASSICAL_QUADS = {
    "sp": ((Fraction(1, 2), 1), (Fraction(1, 2), -1), (1, 1), (1, -1)),
    "o": ((0, 1), (0, -1), (Fraction(1, 2), 1), (Fraction(1, 2), -1)),
    "so": ((0, -1), (Fraction(1, 2), -1), (Fraction(1, 2), 1), (1, 1)),
}


def koornwinder_classical(family: str, lam: PartitionLike, n: int, q: RatFun) -> BCnPoly:
    """K at the t=q parameter quadruple of a classical character family.

    family: 'sp' (symplectic, rank 2n), 'o' (even orthogonal, rank 2n),
    'so' (odd orthogonal, rank 2n+1).  The three quadruples are
    (q^(1/2), -q^(1/2), q, -q), (1, -1, q^(1/2), -q^(1/2)) and
    (-1, -q^(1/2), q^(1/2), q); t is kept free during assembly and only
    the final coefficients are specialized to t = q.
    """
    if family not in _CLASSICAL_QUADS:
        raise ValueError("unknown family %r" % (family,))
    reg = _REG_QHALF
    quad = tuple(reg.mono(sgn, q=e) for (e, sgn) in _CLASSICAL_QUADS[family])
    K = koornwinder_K(lam, n, KoornwinderParams(reg.power("q", 1), reg.var("t"), *quad))
    ring = q.ring
    images = {"Q": (q, None), "t": (q, None)}
    terms: Dict[Tuple[int, ...], RatFun] = {}
    for key, c in K.terms.items():
        img = _half_down(c, reg.ring, images, ring)
        if not img.is_zero:
            terms[key] = img
    return BCnPoly(ring, n, terms)


# -- Cauchy-type check -------------------------------------------------------------


def mimachi_check(m: int, n: int, params: Optional[KoornwinderParams] = None) -> VerificationReport:
    """Exact two-family Cauchy identity over the (m^n) box.

    The alternating sum of K_{(m^n)-lam}(x; q, t) K_{lam'}(y; t, q) over
    lam in the box must equal prod_{i,j} (x_i + 1/x_i - y_j - 1/y_j).
    """
    t_start = time.perf_counter()
    if params is None:
        params = KoornwinderParams.generic()
    ring = params.ring
    swapped = params.swapped_qt()
    lhs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], RatFun] = {}
    for lam in partitions_in_box(m, n):
        co = complement(lam, m, n)
        Kx = koornwinder_K(co, n, params)
        Ky = koornwinder_K(lam.conjugate(), m, swapped)
        sign = -1 if lam.size % 2 else 1
        for xv, cx in Kx.expand_monomials().items():
            for yv, cy in Ky.expand_monomials().items():
                c = cx * cy
                if sign < 0:
                    c = -c
                key = (xv, yv)
                cur = lhs.get(key)
                s2 = c if cur is None else cur + c
                if s2.is_zero:
                    lhs.pop(key, None)
                else:
                    lhs[key] = s2
    one = RatFun.from_int(ring, 1)
    rhs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], RatFun] = {((0,) * n, (0,) * m): one}
    for i in range(n):
        for j in range(m):
            nxt: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], RatFun] = {}

            def bump(xv, yv, c):
                key = (xv, yv)
                cur = nxt.get(key)
                s2 = c if cur is None else cur + c
                if s2.is_zero:
                    nxt.pop(key, None)
                else:
                    nxt[key] = s2

            for (xv, yv), c in rhs.items():
                for (de, which, sgn) in ((1, "x", 1), (-1, "x", 1), (1, "y", -1), (-1, "y", -1)):
                    if which == "x":
                        nx = xv[:i] + (xv[i] + de,) + xv[i + 1 :]
                        bump(nx, yv, c if sgn > 0 else -c)
                    else:
                        ny = yv[:j] + (yv[j] + de,) + yv[j + 1 :]
                        bump(xv, ny, c if sgn > 0 else -c)
            rhs = nxt
    elapsed = (time.perf_counter() - t_start) * 1000.0
    record = {"m": m, "n": n}
    keys = set(lhs) | set(rhs)
    zero = RatFun.from_int(ring, 0)
    for key in sorted(keys):
        a = lhs.get(key, zero)
        b = rhs.get(key, zero)
        if a != b:
            witness = {
                "x_exponents": list(key[0]),
                "y_exponents": list(key[1]),
                "lhs": str(a),
                "rhs": str(b),
            }
            return VerificationReport("mimachi", record, FAIL, witness, elapsed)
    return VerificationReport("mimachi", record, PASS, None, elapsed)
