"""q-shifted factorials and the hook-product symbol calculus.

Three families of partition-indexed products generalise the q-shifted
factorial (z;q)_N:

    C0[lam](z)  = prod over cells (i,j) of (1 - z q^(j-1) t^(1-i))
    C-[lam](z)  = prod over cells of (1 - z q^(arm) t^(leg))
    C+[lam](z)  = prod over cells of (1 - z q^(lam_i+j-1) t^(2-lam'_j-i))

together with their even/odd refinements — the sub-products over cells of
fixed parity (i+j for C0, arm+leg for C-/C+) — and several rational
coefficient families (c, d, e, f, kappa and their hatted companions)
assembled from them.  Everything here is exact RatFun arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .partitions import (
    Partition,
    Weight,
    aspartition,
    stats,
    two_core_empty,
)
from .ratfield import PoleError, RatFun, Ring

Shape = Union[Partition, Weight, Sequence[int]]

_KINDS = ("0", "-", "+", "0e", "0o", "-e", "-o", "+e", "+o")


def _as_ratfun(x, ring: Ring) -> RatFun:
    if isinstance(x, RatFun):
        return x
    return RatFun.from_frac(ring, Fraction(x))


def q_poch(z: RatFun, q: RatFun, n: int) -> RatFun:
    """q-shifted factorial (z;q)_n for arbitrary integer n.

    For n >= 0 the product (1-z)(1-zq)...(1-zq^(n-1)); for n < 0 the
    reciprocal 1/prod_{k=1}^{-n}(1 - z q^(n+k-1)), which is a pole when
    one of those factors vanishes.
    """
    ring = q.ring
    z = _as_ratfun(z, ring)
    one = RatFun.from_int(ring, 1)
    if n >= 0:
        out = one
        for k in range(n):
            out = out * (one - z * q ** k)
        return out
    out = one
    for k in range(1, -n + 1):
        factor = one - z * q ** (n + k - 1)
        if factor.is_zero:
            raise PoleError(factor, {"z": str(z), "q": str(q), "n": n})
        out = out * factor
    return out.reciprocal()


def _cells_with_parity(lam: Partition, kind: str) -> List[Tuple[int, int, int]]:
    """Cells (i, j) of lam with the parity marker relevant to kind.

    C0-type symbols split by the parity of i+j, the hook-indexed symbols
    by the parity of arm+leg.
    """
    conj = lam.conjugate()
    out = []
    for (i, j) in lam.cells():
        if kind[0] == "0":
            par = (i + j) % 2
        else:
            par = (lam.part(i) - j + conj.part(j) - i) % 2
        out.append((i, j, par))
    return out


def _c_symbol_partition(kind: str, lam: Partition, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    conj = lam.conjugate()
    one = RatFun.from_int(q.ring, 1)
    out = one
    want = {"e": 0, "o": 1}.get(kind[1:], None)
    for (i, j, par) in _cells_with_parity(lam, kind):
        if want is not None and par != want:
            continue
        if kind[0] == "0":
            a, b = j - 1, 1 - i
        elif kind[0] == "-":
            a, b = lam.part(i) - j, conj.part(j) - i
        else:
            a, b = lam.part(i) + j - 1, 2 - conj.part(j) - i
        out = out * (one - z * q ** a * t ** b)
    return out


def _c_symbol_weight(kind: str, w: Weight, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    """Extension to weakly decreasing integer vectors.

    Strip the rectangle (w_n^n) off the weight; the remainder mu is a
    partition, and the rectangle re-enters through shifted-factorial
    prefactors (one per row) plus an argument shift in the symbol.
    """
    n = w.n
    wn = w.entry(n)
    mu = Partition(tuple(w.entry(i) - wn for i in range(1, n + 1)))
    one = RatFun.from_int(q.ring, 1)
    if kind == "0":
        out = _c_symbol_partition("0", mu, z * q ** wn, q, t)
        for i in range(1, n + 1):
            out = out * q_poch(z * t ** (1 - i), q, wn)
        return out
    if kind == "-":
        out = _c_symbol_partition("-", mu, z, q, t)
        out = out * _c_symbol_partition("0", mu, z * q ** wn * t ** (n - 1), q, t)
        out = out / _c_symbol_partition("0", mu, z * t ** (n - 1), q, t)
        for i in range(1, n + 1):
            out = out * q_poch(z * t ** (n - i), q, wn)
        return out
    if kind == "+":
        out = _c_symbol_partition("+", mu, z * q ** (2 * wn), q, t)
        out = out * _c_symbol_partition("0", mu, z * q ** (2 * wn) * t ** (1 - n), q, t)
        out = out / _c_symbol_partition("0", mu, z * q ** wn * t ** (1 - n), q, t)
        for i in range(1, n + 1):
            out = out * q_poch(z * q ** wn * t ** (2 - n - i), q, wn)
        return out
    raise ValueError("parity-refined symbols are only defined for partitions")


def c_symbol(kind: str, lam: Shape, z, q: RatFun, t: RatFun) -> RatFun:
    """Hook-product symbol of the given kind evaluated at z.

    kind is one of '0', '-', '+' optionally suffixed by 'e' or 'o' for
    the even/odd sub-product.  lam may be a partition or a weakly
    decreasing integer weight (plain kinds only).  z may be a single
    value or a sequence, the latter meaning the product over all
    arguments.
    """
    if kind not in _KINDS:
        raise ValueError("unknown symbol kind %r" % (kind,))
    ring = q.ring
    if isinstance(z, (list, tuple)):
        out = RatFun.from_int(ring, 1)
        for zz in z:
            out = out * c_symbol(kind, lam, zz, q, t)
        return out
    z = _as_ratfun(z, ring)
    if isinstance(lam, Partition):
        return _c_symbol_partition(kind, lam, z, q, t)
    w = lam if isinstance(lam, Weight) else Weight(tuple(int(x) for x in lam))
    if w.is_partition:
        return _c_symbol_partition(kind, w.to_partition(), z, q, t)
    return _c_symbol_weight(kind, w, z, q, t)


def delta0(a: RatFun, bs: Iterable, lam: Shape, q: RatFun, t: RatFun) -> RatFun:
    """Well-poised ratio prod_r C0[lam](b_r) / C0[lam](aq/b_r)."""
    out = RatFun.from_int(q.ring, 1)
    for b in bs:
        b = _as_ratfun(b, q.ring)
        out = out * c_symbol("0", lam, b, q, t)
        out = out / c_symbol("0", lam, a * q / b, q, t)
    return out


def delta(a: RatFun, bs: Iterable, lam: Shape, q: RatFun, t: RatFun) -> RatFun:
    """delta0 dressed with the symbol quotient
    C0[2 lam^2](aq) / (C-[lam](q, t) C+[lam](a, aq/t))."""
    lam = aspartition(lam)
    lam2 = Partition(tuple(2 * p for p in _square(lam).parts))
    out = c_symbol("0", lam2, a * q, q, t)
    out = out / c_symbol("-", lam, (q, t), q, t)
    out = out / c_symbol("+", lam, (a, a * q / t), q, t)
    return out * delta0(a, bs, lam, q, t)


def _square(lam: Partition) -> Partition:
    return Partition(tuple(p for p in lam.parts for _ in range(2)))


def _halve_columns(lam: Partition) -> Optional[Partition]:
    """mu with mu^2 = lam (parts repeated), or None when lam is not of
    that shape (equivalently the conjugate of lam is not even)."""
    parts = lam.parts
    if len(parts) % 2:
        return None
    half = []
    for k in range(0, len(parts), 2):
        if parts[k] != parts[k + 1]:
            return None
        half.append(parts[k])
    return Partition(tuple(half))


def _halve_rows(lam: Partition) -> Optional[Partition]:
    """mu with 2 mu = lam (parts doubled), or None when a part is odd."""
    if any(p % 2 for p in lam.parts):
        return None
    return Partition(tuple(p // 2 for p in lam.parts))


def coeff_c(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun, route: str = "symbols") -> RatFun:
    """Branching coefficient supported on shapes with even conjugate.

    route='symbols' assembles the value from hook-product symbols,
    route='squares' from the per-cell factorised product; the two must
    agree and are kept separate so tests can compare them.
    """
    lam = aspartition(lam)
    mu = _halve_columns(lam)
    zero = RatFun.from_int(q.ring, 0)
    if mu is None:
        return zero
    if route == "symbols":
        out = (q / t) ** mu.size
        out = out * c_symbol("0", lam, w, q, t) / c_symbol("0", lam, q * w / t, q, t)
        t2 = t * t
        out = out * c_symbol("-", mu, t, q, t2) / c_symbol("-", mu, q, q, t2)
        wz2 = w * w * z * z
        out = out * c_symbol("+", mu, q * wz2 / t ** 4, q, t2)
        out = out / c_symbol("+", mu, wz2 / t ** 3, q, t2)
        return out
    if route != "squares":
        raise ValueError("route must be 'symbols' or 'squares'")
    one = RatFun.from_int(q.ring, 1)
    out = one
    conj = mu.conjugate()
    wz2 = w * w * z * z
    for (i, j) in mu.cells():
        ap, lp = j - 1, i - 1
        a, l = mu.part(i) - j, conj.part(j) - i
        ah, lh = mu.part(i) + j - 1, conj.part(j) + i - 1
        num = (one - w * q ** ap * t ** (-2 * lp)) * (one - w * q ** ap * t ** (-2 * lp - 1))
        den = (one - w * q ** (ap + 1) * t ** (-2 * lp - 1)) * (one - w * q ** (ap + 1) * t ** (-2 * lp - 2))
        num = num * (one - q ** a * t ** (2 * l + 1)) * (one - wz2 * q ** (ah + 1) * t ** (-2 * lh - 2))
        den = den * (one - q ** (a + 1) * t ** (2 * l)) * (one - wz2 * q ** ah * t ** (-2 * lh - 1))
        out = out * (q / t) * num / den
    return out


def coeff_d(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun, route: str = "symbols") -> RatFun:
    """Branching coefficient supported on even shapes."""
    lam = aspartition(lam)
    mu = _halve_rows(lam)
    zero = RatFun.from_int(q.ring, 0)
    if mu is None:
        return zero
    if route == "symbols":
        out = (q / t) ** mu.size
        out = out * c_symbol("0", lam, w, q, t) / c_symbol("0", lam, q * w / t, q, t)
        q2 = q * q
        out = out * c_symbol("-", mu, q * t, q2, t) / c_symbol("-", mu, q2, q2, t)
        wz2 = w * w * z * z
        out = out * c_symbol("+", mu, q2 * wz2 / t ** 2, q2, t)
        out = out / c_symbol("+", mu, q * wz2 / t, q2, t)
        return out
    if route != "squares":
        raise ValueError("route must be 'symbols' or 'squares'")
    one = RatFun.from_int(q.ring, 1)
    out = one
    conj = mu.conjugate()
    wz2 = w * w * z * z
    for (i, j) in mu.cells():
        ap, lp = j - 1, i - 1
        a, l = mu.part(i) - j, conj.part(j) - i
        ah, lh = mu.part(i) + j - 1, conj.part(j) + i - 1
        num = (one - w * q ** (2 * ap) * t ** (-lp)) * (one - w * q ** (2 * ap + 1) * t ** (-lp))
        den = (one - w * q ** (2 * ap + 1) * t ** (-lp - 1)) * (one - w * q ** (2 * ap + 2) * t ** (-lp - 1))
        num = num * (one - q ** (2 * a + 1) * t ** (l + 1)) * (one - wz2 * q ** (2 * ah + 2) * t ** (-lh - 1))
        den = den * (one - q ** (2 * a + 2) * t ** l) * (one - wz2 * q ** (2 * ah + 1) * t ** (-lh))
        out = out * (q / t) * num / den
    return out


def coeff_e(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun, route: str = "symbols") -> RatFun:
    """Branching coefficient defined for every shape."""
    lam = aspartition(lam)
    if route == "symbols":
        q2, t2 = q * q, t * t
        out = (q / t) ** lam.size
        out = out * c_symbol("0", lam, w * w, q2, t2) / c_symbol("0", lam, q2 * w * w / t2, q2, t2)
        out = out * c_symbol("-", lam, -t, q, t) / c_symbol("-", lam, q, q, t)
        wz2 = w * w * z * z
        out = out * c_symbol("+", lam, q * wz2 / t2, q, t) / c_symbol("+", lam, -wz2 / t, q, t)
        return out
    if route != "squares":
        raise ValueError("route must be 'symbols' or 'squares'")
    one = RatFun.from_int(q.ring, 1)
    out = one
    conj = lam.conjugate()
    wz2 = w * w * z * z
    for (i, j) in lam.cells():
        ap, lp = j - 1, i - 1
        a, l = lam.part(i) - j, conj.part(j) - i
        ah, lh = lam.part(i) + j - 1, conj.part(j) + i - 1
        num = (one - w * w * q ** (2 * ap) * t ** (-2 * lp)) * (one + q ** a * t ** (l + 1))
        num = num * (one - wz2 * q ** (ah + 1) * t ** (-lh - 1))
        den = (one - w * w * q ** (2 * ap + 2) * t ** (-2 * lp - 2)) * (one - q ** (a + 1) * t ** l)
        den = den * (one + wz2 * q ** ah * t ** (-lh))
        out = out * (q / t) * num / den
    return out


def coeff_f(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    """Branching coefficient supported on shapes that tile by dominoes."""
    lam = aspartition(lam)
    zero = RatFun.from_int(q.ring, 0)
    if not two_core_empty(lam):
        return zero
    st = stats(lam)
    stc = stats(lam.conjugate())
    qexp = _as_int(2 * stc.nhat_odd - 2 * stc.nhat_even)
    texp = st.n_even - st.n_odd
    out = (q / t) ** (lam.size // 2) * q ** qexp * t ** texp
    out = out * c_symbol("0", lam, w, q, t) / c_symbol("0", lam, q * w / t, q, t)
    out = out * c_symbol("-e", lam, t, q, t) / c_symbol("-o", lam, q, q, t)
    wz2 = w * w * z * z
    out = out * c_symbol("+e", lam, q * wz2 / t ** 2, q, t)
    out = out / c_symbol("+o", lam, wz2 / t, q, t)
    return out


def coeff_c_hat(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    """Companion to coeff_c with the roles of the two arguments inverted;
    supported on even shapes, and equal to
    coeff_c(conj(lam/2)^2, 1/z, 1/w; t, q)."""
    lam = aspartition(lam)
    mu = _halve_rows(lam)
    if mu is None:
        return RatFun.from_int(q.ring, 0)
    q2 = q * q
    out = c_symbol("0", lam, z, q, t) / c_symbol("0", lam, q * z / t, q, t)
    out = out * c_symbol("-", mu, q, q2, t) / c_symbol("-", mu, t, q2, t)
    wz2 = w * w * z * z
    out = out * c_symbol("+", mu, q2 * wz2 / t ** 2, q2, t)
    out = out / c_symbol("+", mu, q * wz2 / t, q2, t)
    return out


def coeff_d_hat(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    """Companion to coeff_d; supported on shapes with even conjugate."""
    lam = aspartition(lam)
    mu = _halve_columns(lam)
    if mu is None:
        return RatFun.from_int(q.ring, 0)
    t2 = t * t
    out = c_symbol("0", lam, z, q, t) / c_symbol("0", lam, q * z / t, q, t)
    out = out * c_symbol("-", mu, q * t, q, t2) / c_symbol("-", mu, t2, q, t2)
    wz2 = w * w * z * z
    out = out * c_symbol("+", mu, q * wz2 / t ** 4, q, t2)
    out = out / c_symbol("+", mu, wz2 / t ** 3, q, t2)
    return out


def coeff_e_hat(lam: Shape, w: RatFun, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    """Companion to coeff_e; defined for every shape."""
    lam = aspartition(lam)
    q2, t2 = q * q, t * t
    out = c_symbol("0", lam, z * z, q2, t2) / c_symbol("0", lam, q2 * z * z / t2, q2, t2)
    out = out * c_symbol("-", lam, -q, q, t) / c_symbol("-", lam, t, q, t)
    wz2 = w * w * z * z
    out = out * c_symbol("+", lam, q * wz2 / t2, q, t) / c_symbol("+", lam, -wz2 / t, q, t)
    return out


def _as_int(fr: Fraction) -> int:
    if fr.denominator != 1:
        raise ValueError("expected an integer, got %s" % (fr,))
    return fr.numerator


def _kappa_core(lam: Partition, z: RatFun, q: RatFun, t: RatFun) -> RatFun:
    out = (q / t) ** (lam.size // 2)
    out = out * c_symbol("0e", lam, z * z, q, t) / c_symbol("0o", lam, z * z * q / t, q, t)
    out = out * c_symbol("-e", lam, t, q, t) / c_symbol("-o", lam, q, q, t)
    return out


def kappa1(lam: Shape, z, q: RatFun, t: RatFun) -> RatFun:
    """First Littlewood weight; z=None gives the large-z limit form.

    Vanishes unless lam tiles by dominoes.
    """
    lam = aspartition(lam)
    if not two_core_empty(lam):
        return RatFun.from_int(q.ring, 0)
    st = stats(lam)
    stc = stats(lam.conjugate())
    if z is None:
        qexp = _as_int(2 * stc.nhat_odd - 2 * stc.nhat_even)
        texp = st.n_even - st.n_odd
        out = q ** qexp * t ** texp
        return out * c_symbol("-e", lam, t, q, t) / c_symbol("-o", lam, q, q, t)
    z = _as_ratfun(z, q.ring)
    qexp = stc.n_even - stc.n_odd
    texp = _as_int(2 * st.nhat_odd - 2 * st.nhat_even)
    return q ** qexp * t ** texp * _kappa_core(lam, z, q, t)


def kappa2(lam: Shape, z, q: RatFun, t: RatFun) -> RatFun:
    """Second Littlewood weight; z=None gives the large-z limit form.

    Vanishes unless lam tiles by dominoes.
    """
    lam = aspartition(lam)
    if not two_core_empty(lam):
        return RatFun.from_int(q.ring, 0)
    st = stats(lam)
    stc = stats(lam.conjugate())
    if z is None:
        qexp = stc.n_even - stc.n_odd
        texp = _as_int(2 * st.nhat_odd - 2 * st.nhat_even)
        out = q ** qexp * t ** texp
        return out * c_symbol("-e", lam, t, q, t) / c_symbol("-o", lam, q, q, t)
    z = _as_ratfun(z, q.ring)
    one = RatFun.from_int(q.ring, 1)
    qa = _as_int(2 * stc.nhat_odd - 2 * stc.nhat_even)
    ta = st.n_even - st.n_odd
    qb = _as_int(4 * stc.nhat_even) - 4 * stc.n_odd
    # 3nhat_o - 5nhat_e is an integer: it equals 3n(lam) - 8nhat_e and
    # 2nhat_e is already integral
    tb = 2 * st.n_odd + _as_int(3 * st.nhat_odd - 5 * st.nhat_even)
    num = q ** qa * t ** ta + z * q ** qb * t ** tb
    return num / (one + z) * _kappa_core(lam, z, q, t)


def kappa1_quotient_form(lam: Shape, q: RatFun, t: RatFun) -> RatFun:
    """Large-z limit of kappa1 written as a quotient of difference
    products over even and odd cells; an independent route used to
    cross-check kappa1(lam, None, q, t)."""
    lam = aspartition(lam)
    if not two_core_empty(lam):
        return RatFun.from_int(q.ring, 0)
    conj = lam.conjugate()
    num = RatFun.from_int(q.ring, 1)
    den = RatFun.from_int(q.ring, 1)
    for (i, j) in lam.cells():
        par = (lam.part(i) - j + conj.part(j) - i) % 2
        if par == 0:
            num = num * (q ** (1 - lam.part(i)) * t ** (i - 1) - q ** (1 - j) * t ** conj.part(j))
        else:
            den = den * (q ** (1 - lam.part(i)) * t ** (i - 1) - q ** (2 - j) * t ** (conj.part(j) - 1))
    return num / den
