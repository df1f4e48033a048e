"""Inhomogeneous interpolation polynomials with hyperoctahedral symmetry.

The central object is the family P*_mu(x; q, t, s) of Laurent polynomials in
x_1..x_n, invariant under permuting and inverting the variables, normalized
to be monic on the dominant orbit sum of x^mu and characterized by vanishing
at the geometric points s * (q^{lam_1} t^{n-1}, ..., q^{lam_n}) for all
partitions lam not containing mu.  Ratios of their evaluations define the
generalized binomial coefficients used throughout the rest of the library.
"""

import threading
from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .partitions import (
    Partition,
    PartitionLike,
    Weight,
    aspartition,
    contains,
    dominance_le,
    n_conj_stat,
    n_conj_weight,
    n_stat,
    n_weight,
    partitions_up_to_size,
)
from .qsymbols import c_symbol, q_poch
from .ratfield import RatFun, Ring, ring_of

RING_QTS = ring_of("q", "t", "s")


def qts_generators(ring: Ring = RING_QTS) -> Tuple[RatFun, ...]:
    return tuple(RatFun.from_mpoly(ring.var(n)) for n in ("q", "t", "s"))


def _pad(parts: Sequence[int], n: int) -> Tuple[int, ...]:
    return tuple(parts) + (0,) * (n - len(parts))


class SpectralVector:
    """The point (q^{w_1} t^{n-1}, q^{w_2} t^{n-2}, ..., q^{w_n}) of a weight."""

    __slots__ = ("entries",)

    def __init__(self, lam: Union[PartitionLike, Weight], n: int, q: RatFun, t: RatFun):
        if isinstance(lam, Weight):
            if lam.n > n:
                raise ValueError("weight longer than the variable count")
            w = _pad(lam.entries, n)
        else:
            lam = aspartition(lam)
            if lam.length > n:
                raise ValueError("partition longer than the variable count")
            w = _pad(lam.parts, n)
        self.entries = tuple(q ** w[i] * t ** (n - 1 - i) for i in range(n))

    @property
    def n(self) -> int:
        return len(self.entries)

    def scaled(self, c: RatFun) -> Tuple[RatFun, ...]:
        return tuple(c * e for e in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> RatFun:
        return self.entries[i]

    def __repr__(self) -> str:
        return "SpectralVector(%s)" % (", ".join(str(e) for e in self.entries),)


def _signed_orbit(vec: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Distinct images of vec under permutations and coordinate sign flips."""
    out = set()
    for p in set(permutations(vec)):
        stack = [p]
        seen = {p}
        while stack:
            v = stack.pop()
            out.add(v)
            for i, e in enumerate(v):
                if e:
                    w = v[:i] + (-e,) + v[i + 1 :]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
    return sorted(out)


class BCnPoly:
    """Laurent polynomial invariant under permuting and inverting variables.

    terms maps dominant exponent vectors (weakly decreasing, non-negative,
    padded to length n) to coefficients; the expansion puts that coefficient
    on every vector of the signed permutation orbit.  A nonzero den_order
    marks the rational extension used for non-dominant weights: the stored
    polynomial is divided by prod_i (den_base x_i; q)_k (den_base / x_i; q)_k
    with k = den_order, which is only ever evaluated, never expanded.
    """

    __slots__ = ("ring", "n", "terms", "den_base", "den_order", "den_q")

    def __init__(
        self,
        ring: Ring,
        n: int,
        terms: Dict[Tuple[int, ...], RatFun],
        den_base: Optional[RatFun] = None,
        den_order: int = 0,
        den_q: Optional[RatFun] = None,
    ):
        self.ring = ring
        self.n = n
        self.terms = {k: v for k, v in terms.items() if not v.is_zero}
        self.den_base = den_base
        self.den_order = den_order
        self.den_q = den_q

    @staticmethod
    def one(ring: Ring, n: int) -> "BCnPoly":
        return BCnPoly(ring, n, {(0,) * n: RatFun.from_int(ring, 1)})

    @staticmethod
    def from_monomial_dict(ring: Ring, n: int, full: Dict[Tuple[int, ...], RatFun]) -> "BCnPoly":
        """Collect a raw exponent-to-coefficient map into orbit form.

        Every member of each signed permutation orbit must be present with
        the same coefficient; uneven input raises ValueError.
        """
        terms: Dict[Tuple[int, ...], RatFun] = {}
        seen = set()
        for vec, c in full.items():
            if vec in seen or c.is_zero:
                continue
            rep = tuple(sorted((abs(e) for e in vec), reverse=True))
            for w in _signed_orbit(rep):
                seen.add(w)
                got = full.get(w)
                if got is None or got != c:
                    raise ValueError("expansion is not invariant under the signed symmetric group")
            terms[rep] = c
        return BCnPoly(ring, n, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms and not self.den_order

    @property
    def is_rational(self) -> bool:
        return self.den_order > 0

    def coefficient(self, lam: Sequence[int]) -> RatFun:
        key = _pad(tuple(lam), self.n)
        got = self.terms.get(key)
        return got if got is not None else RatFun.from_int(self.ring, 0)

    def expand_monomials(self) -> Dict[Tuple[int, ...], RatFun]:
        if self.den_order:
            raise ValueError("rational interpolation data only supports evaluation")
        out: Dict[Tuple[int, ...], RatFun] = {}
        for rep, c in self.terms.items():
            for vec in _signed_orbit(rep):
                out[vec] = c
        return out

    def eval_point(self, values: Sequence[RatFun]) -> RatFun:
        if len(values) != self.n:
            raise ValueError("point length does not match the variable count")
        total = RatFun.from_int(self.ring, 0)
        for rep, c in self.terms.items():
            acc = RatFun.from_int(self.ring, 0)
            for vec in _signed_orbit(rep):
                term = c
                for v, e in zip(values, vec):
                    if e:
                        term = term * v ** e
                acc = acc + term
            total = total + acc
        if self.den_order:
            one = RatFun.from_int(self.ring, 1)
            den = one
            for v in values:
                den = den * q_poch(self.den_base * v, self.den_q, self.den_order)
                den = den * q_poch(self.den_base / v, self.den_q, self.den_order)
            total = total / den
        return total

    def scale(self, c: RatFun) -> "BCnPoly":
        return BCnPoly(
            self.ring,
            self.n,
            {k: v * c for k, v in self.terms.items()},
            self.den_base,
            self.den_order,
            self.den_q,
        )

    def __add__(self, other: "BCnPoly") -> "BCnPoly":
        if self.n != other.n or self.den_order or other.den_order:
            raise ValueError("incompatible summands")
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            s = v if cur is None else cur + v
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
        return BCnPoly(self.ring, self.n, out)

    def __sub__(self, other: "BCnPoly") -> "BCnPoly":
        return self + other.scale(RatFun.from_int(other.ring, -1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BCnPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.terms == other.terms
            and self.den_order == other.den_order
            and (not self.den_order or (self.den_base == other.den_base and self.den_q == other.den_q))
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items()), self.den_order))

    def __repr__(self) -> str:
        if not self.terms:
            return "BCnPoly(0)"
        bits = ["%s * mW%s" % (c, list(k)) for k, c in sorted(self.terms.items(), reverse=True)]
        body = " + ".join(bits)
        if self.den_order:
            body += " / [poch(%s, %d)]" % (self.den_base, self.den_order)
        return "BCnPoly(%s)" % body


def _mw_eval(rep: Tuple[int, ...], point: Sequence[RatFun], ring: Ring) -> RatFun:
    total = RatFun.from_int(ring, 0)
    for vec in _signed_orbit(rep):
        term = RatFun.from_int(ring, 1)
        for v, e in zip(point, vec):
            if e:
                term = term * v ** e
        total = total + term
    return total


_interp_lock = threading.RLock()
_interp_cache: Dict[Tuple[Tuple[int, ...], int], Dict[Tuple[int, ...], RatFun]] = {}


def _interp_generic(mu: Partition, n: int) -> Dict[Tuple[int, ...], RatFun]:
    """Solve the vanishing system for dominant mu with formal q, t, s."""
    key = (mu.parts, n)
    with _interp_lock:
        got = _interp_cache.get(key)
    if got is not None:
        return got
    qg, tg, sg = qts_generators()
    ring = RING_QTS
    lams = [
        lam
        for lam in partitions_up_to_size(mu.size, max_length=n)
        if lam != mu and dominance_le(lam, mu)
    ]
    idx = [_pad(lam.parts, n) for lam in lams]
    k = len(idx)
    mu_pad = _pad(mu.parts, n)
    rows: List[List[RatFun]] = []
    rhs: List[RatFun] = []
    for lam in lams:
        point = SpectralVector(lam, n, qg, tg).scaled(sg)
        rows.append([_mw_eval(col, point, ring) for col in idx])
        rhs.append(-_mw_eval(mu_pad, point, ring))
    sol = _solve_linear(rows, rhs, ring)
    out = {mu_pad: RatFun.from_int(ring, 1)}
    for key_col, val in zip(idx, sol):
        if not val.is_zero:
            out[key_col] = val
    with _interp_lock:
        _interp_cache[(mu.parts, n)] = out
    return out


def _solve_linear(rows: List[List[RatFun]], rhs: List[RatFun], ring: Ring) -> List[RatFun]:
    k = len(rows)
    if k == 0:
        return []
    m = [row[:] + [r] for row, r in zip(rows, rhs)]
    order = list(range(k))
    for col in range(k):
        piv = None
        for r in range(col, k):
            if not m[r][col].is_zero:
                piv = r
                break
        if piv is None:
            raise ArithmeticError("singular interpolation system")
        m[col], m[piv] = m[piv], m[col]
        inv = RatFun.from_int(ring, 1) / m[col][col]
        m[col] = [e * inv for e in m[col]]
        for r in range(k):
            if r != col and not m[r][col].is_zero:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][k] for i in range(k)]


def _specialize_terms(
    generic: Dict[Tuple[int, ...], RatFun], q: RatFun, t: RatFun, s: RatFun
) -> Dict[Tuple[int, ...], RatFun]:
    images = {"q": q, "t": t, "s": s}
    ring = q.ring
    out = {}
    for key, val in generic.items():
        img = val.specialize(images, ring)
        if not img.is_zero:
            out[key] = img
    return out


def _mul_poch_factor(
    poly: BCnPoly, base: RatFun, q: RatFun, order: int
) -> BCnPoly:
    """Multiply by prod_i (base x_i; q)_order (base / x_i; q)_order, order >= 0."""
    full = poly.expand_monomials()
    ring = poly.ring
    one = RatFun.from_int(ring, 1)
    for i in range(poly.n):
        for j in range(order):
            a = base * q ** j
            for sign in (1, -1):
                nxt: Dict[Tuple[int, ...], RatFun] = {}
                for vec, c in full.items():
                    cur = nxt.get(vec)
                    nxt[vec] = c if cur is None else cur + c
                    shifted = vec[:i] + (vec[i] + sign,) + vec[i + 1 :]
                    add = -a * c
                    cur = nxt.get(shifted)
                    s2 = add if cur is None else cur + add
                    if s2.is_zero:
                        nxt.pop(shifted, None)
                    else:
                        nxt[shifted] = s2
                full = {k: v for k, v in nxt.items() if not v.is_zero}
    return BCnPoly.from_monomial_dict(ring, poly.n, full)


def interp_poly(
    mu: Union[PartitionLike, Weight],
    n: int,
    q: Optional[RatFun] = None,
    t: Optional[RatFun] = None,
    s: Optional[RatFun] = None,
) -> BCnPoly:
    """Monic interpolation polynomial indexed by mu in n variables.

    Partitions give Laurent polynomials; weights with a negative last entry
    give rational data carrying an explicit denominator product, usable only
    through eval_point.
    """
    if q is None or t is None or s is None:
        qd, td, sd = qts_generators()
        q = q if q is not None else qd
        t = t if t is not None else td
        s = s if s is not None else sd
    ring = q.ring
    if isinstance(mu, Weight):
        if mu.n != n:
            raise ValueError("weight length does not match the variable count")
        shift = mu.entry(n)
        nu = Partition(tuple(mu.entry(i) - shift for i in range(1, n + 1)))
        base_terms = _specialize_terms(_interp_generic(nu, n), q, t, s * q ** shift)
        pre = (-s) ** (-n * shift) * q ** (-n * (shift * (shift - 1) // 2))
        poly = BCnPoly(ring, n, base_terms).scale(pre)
        if shift > 0:
            return _mul_poch_factor(poly, s, q, shift)
        if shift < 0:
            return BCnPoly(ring, n, poly.terms, den_base=s * q ** shift, den_order=-shift, den_q=q)
        return poly
    lam = aspartition(mu)
    if lam.length > n:
        raise ValueError("partition longer than the variable count")
    return BCnPoly(ring, n, _specialize_terms(_interp_generic(lam, n), q, t, s))


def interp_eval_diag(
    mu: PartitionLike, n: int, q: RatFun, t: RatFun, s: RatFun
) -> RatFun:
    """Closed-form value of the mu-th interpolation polynomial at s times its
    own spectral point."""
    lam = aspartition(mu)
    if lam.length > n:
        raise ValueError("partition longer than the variable count")
    val = (s * q * t ** (n - 1)) ** (-lam.size)
    val = val * q ** (-2 * n_conj_stat(lam)) * t ** n_stat(lam)
    val = val * c_symbol("-", lam, q, q, t)
    val = val * c_symbol("+", lam, s * s * t ** (2 * n - 2), q, t)
    return val


def principal_spec(
    mu: Union[PartitionLike, Weight], n: int, q: RatFun, t: RatFun, s: RatFun, z: RatFun
) -> RatFun:
    """Closed-form value at the geometric point z * (t^{n-1}, ..., t, 1)."""
    if isinstance(mu, Weight):
        if mu.n != n:
            raise ValueError("weight length does not match the variable count")
        size = sum(mu.entries)
        nm, ncj = n_weight(mu), n_conj_weight(mu)
        shape: Union[Partition, Weight] = mu
    else:
        lam = aspartition(mu)
        if lam.length > n:
            raise ValueError("partition longer than the variable count")
        size, nm, ncj = lam.size, n_stat(lam), n_conj_stat(lam)
        shape = lam
    val = (-(s * t ** (n - 1))) ** (-size) * q ** (-ncj) * t ** (2 * nm)
    val = val * c_symbol("0", shape, (t ** n, s / z, z * s * t ** (n - 1)), q, t)
    return val / c_symbol("-", shape, t, q, t)


def qbinom(
    lam: PartitionLike,
    mu: PartitionLike,
    q: RatFun,
    t: RatFun,
    s: RatFun,
    n: Optional[int] = None,
) -> RatFun:
    """Generalized binomial coefficient from interpolation evaluations.

    Zero unless mu is contained in lam; independent of the ambient variable
    count n, which defaults to the smallest admissible value; a function of
    s squared only.
    """
    lam = aspartition(lam)
    mu = aspartition(mu)
    ring = q.ring
    if not contains(mu, lam):
        return RatFun.from_int(ring, 0)
    if n is None:
        n = max(lam.length, mu.length, 1)
    elif n < lam.length or n < mu.length:
        raise ValueError("variable count too small for the given shapes")
    sp = s * t ** (1 - n)
    point = SpectralVector(lam, n, q, t).scaled(sp)
    num = interp_poly(mu, n, q, t, sp).eval_point(point)
    den = interp_eval_diag(mu, n, q, t, sp)
    return num / den


def _ratfun_det(rows: List[List[RatFun]], ring: Ring) -> RatFun:
    k = len(rows)
    if k == 0:
        return RatFun.from_int(ring, 1)
    total = RatFun.from_int(ring, 0)
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        for i in range(k):
            for j in range(i + 1, k):
                if seen[i] > seen[j]:
                    sign = -sign
        term = RatFun.from_int(ring, sign)
        for i in range(k):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def qbinom_det_tq(
    lam: PartitionLike,
    mu: PartitionLike,
    q: RatFun,
    s: RatFun,
    n: Optional[int] = None,
) -> RatFun:
    """Determinant form of the binomial coefficient in the t = q regime."""
    lam = aspartition(lam)
    mu = aspartition(mu)
    ring = q.ring
    if n is None:
        n = max(lam.length, mu.length, 1)
    elif n < lam.length or n < mu.length:
        raise ValueError("variable count too small for the given shapes")
    kap = [lam.part(i + 1) + n - 1 - i for i in range(n)]
    nu = [mu.part(i + 1) + n - 1 - i for i in range(n)]
    absnu = sum(nu)
    abskap = sum(kap)
    n_nu = sum(i * v for i, v in enumerate(nu))
    n_nuc = sum(v * (v - 1) // 2 for v in nu)
    n_kap = sum(i * v for i, v in enumerate(kap))
    one = RatFun.from_int(ring, 1)
    val = RatFun.from_int(ring, (-1) ** absnu)
    val = val * q ** (n_nuc + n_nu - n_kap - (n - 2) * absnu + (n - 1) * abskap)
    s2 = s * s
    a = s2 * q ** (2 - 2 * n)
    for v in nu:
        val = val * q_poch(a, q, v) / (q_poch(q, q, v) * q_poch(a, q, 2 * v))
    for i in range(n):
        for j in range(i + 1, n):
            val = val * (one - q ** (nu[i] - nu[j])) * (one - s2 * q ** (nu[i] + nu[j] - 2 * n + 2))
            val = val / ((one - q ** (kap[i] - kap[j])) * (one - s2 * q ** (kap[i] + kap[j] - 2 * n + 2)))
    rows = [
        [
            q_poch(s2 * q ** (kap[i] - 2 * n + 2), q, nu[j]) * q_poch(q ** (-kap[i]), q, nu[j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return val * _ratfun_det(rows, ring)
