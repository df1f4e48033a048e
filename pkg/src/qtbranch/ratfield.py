"""Exact sparse multivariate Laurent polynomials and rational functions.

Coefficients are Python integers; rational functions keep their
denominators as a product of canonical irreducible-by-construction
factors, which makes cancellation a matter of exact trial division and
lets pole diagnostics name the offending factor.  Square roots of
parameters are handled by VarRegistry, which maps a parameter needing
half-integral powers to the square of a generator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union


class PoleError(ZeroDivisionError):
    """A substitution sent a denominator factor to zero."""

    def __init__(self, factor, assignment=None):
        self.factor = factor
        self.assignment = assignment
        msg = "denominator factor %s vanishes" % (factor,)
        if assignment:
            msg += " under %s" % (assignment,)
        super().__init__(msg)


class NearPoleError(ArithmeticError):
    """A numeric evaluation came within eps of a denominator zero."""

    def __init__(self, factor, value, eps):
        self.factor = factor
        self.value = value
        self.eps = eps
        super().__init__("|%s| = %.3e < %.1e at evaluation point" % (factor, abs(value), eps))


_SCREEN_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59)


class Ring:
    """An ordered tuple of variable names; the coefficient ring is Z."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        for nm in names:
            if not nm or not isinstance(nm, str):
                raise ValueError("bad variable name: %r" % (nm,))
        self.names = names
        self.index = {nm: i for i, nm in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return "Ring%r" % (self.names,)

    def screen_point(self) -> Tuple[int, ...]:
        return _SCREEN_PRIMES[: len(self.names)]

    # constructors
    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {(0,) * self.nvars: 1})

    def const(self, c: int) -> "MPoly":
        c = int(c)
        return MPoly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str, power: int = 1) -> "MPoly":
        e = [0] * self.nvars
        e[self.index[name]] = power
        return MPoly(self, {tuple(e): 1})

    def monomial(self, coeff: int, exps: Sequence[int]) -> "MPoly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return MPoly(self, {exps: int(coeff)} if coeff else {})


class MPoly:
    """Sparse Laurent polynomial: dict of exponent tuple -> int coeff."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Dict[Tuple[int, ...], int]):
        self.ring = ring
        if any(not v for v in terms.values()):
            terms = {e: v for e, v in terms.items() if v}
        self.terms = terms
        self._hash = None

    # -- predicates ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_const(self) -> bool:
        if not self.terms:
            return True
        z = (0,) * self.ring.nvars
        return len(self.terms) == 1 and z in self.terms

    def const_value(self) -> int:
        if self.is_zero:
            return 0
        if not self.is_const:
            raise ValueError("not a constant: %s" % (self,))
        return next(iter(self.terms.values()))

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == (self.ring.const(other)).terms
        return isinstance(other, MPoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "MPoly") -> "MPoly":
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.ring, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: Union["MPoly", int]) -> "MPoly":
        if isinstance(other, int):
            if other == 0:
                return MPoly(self.ring, {})
            return MPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        out: Dict[Tuple[int, ...], int] = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial; use RatFun")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structure -----------------------------------------------------
    def min_exps(self) -> Tuple[int, ...]:
        it = iter(self.terms)
        first = next(it)
        lo = list(first)
        for e in it:
            for i, v in enumerate(e):
                if v < lo[i]:
                    lo[i] = v
        return tuple(lo)

    def max_exps(self) -> Tuple[int, ...]:
        it = iter(self.terms)
        first = next(it)
        hi = list(first)
        for e in it:
            for i, v in enumerate(e):
                if v > hi[i]:
                    hi[i] = v
        return tuple(hi)

    def shifted(self, delta: Sequence[int]) -> "MPoly":
        delta = tuple(delta)
        if not any(delta):
            return self
        return MPoly(self.ring, {tuple(x + d for x, d in zip(e, delta)): c for e, c in self.terms.items()})

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def leading(self) -> Tuple[Tuple[int, ...], int]:
        """Lexicographically largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def canonical(self) -> Tuple[int, Tuple[int, ...], "MPoly"]:
        """Write self = c * x^shift * F with F primitive, min exponents 0,
        and positive lexicographic leading coefficient."""
        if self.is_zero:
            return 0, (0,) * self.ring.nvars, self
        shift = self.min_exps()
        c = self.content()
        body = MPoly(self.ring, {tuple(x - s for x, s in zip(e, shift)): v // c for e, v in self.terms.items()})
        if body.leading()[1] < 0:
            c = -c
            body = -body
        return c, shift, body

    # -- evaluation and substitution ------------------------------------
    def eval_int(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k  # exponents nonnegative here by construction
            total += v
        return total

    def eval_complex(self, values: Mapping[str, complex]) -> complex:
        point = [complex(values[nm]) for nm in self.ring.names]
        total = 0j
        for e, c in self.terms.items():
            v = complex(c)
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def subst_monomial(self, mapping: Mapping[str, Tuple[int, Tuple[int, ...]]], target: Ring) -> "MPoly":
        """Substitute every variable by sign * monomial of the target ring.

        mapping values are (sign, exponent vector); sign must be +/-1.
        Variables absent from the mapping must exist in the target ring
        and map to themselves.
        """
        images = []
        for nm in self.ring.names:
            if nm in mapping:
                sgn, ex = mapping[nm]
                if sgn not in (1, -1):
                    raise ValueError("sign must be +/-1")
                images.append((sgn, tuple(ex)))
            else:
                e = [0] * target.nvars
                e[target.index[nm]] = 1
                images.append((1, tuple(e)))
        out: Dict[Tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            exps = [0] * target.nvars
            sign = 1
            for k, (sgn, img) in zip(e, images):
                if k:
                    if sgn < 0 and (k % 2):
                        sign = -sign
                    for i, v in enumerate(img):
                        if v:
                            exps[i] += v * k
            key = tuple(exps)
            s = out.get(key, 0) + sign * c
            if s:
                out[key] = s
            else:
                del out[key]
        return MPoly(target, out)

    def subst(self, images: Mapping[str, "RatFun"], target: Ring) -> "RatFun":
        """General substitution; every variable needs an image in the
        target ring (missing names map to the same-named variable)."""
        imgs = []
        for nm in self.ring.names:
            if nm in images:
                f = images[nm]
                if f.ring != target:
                    raise ValueError("image of %s lives in the wrong ring" % nm)
                imgs.append(f)
            else:
                imgs.append(RatFun.from_mpoly(target.var(nm)))
        total = RatFun.from_int(target, 0)
        cache: Dict[Tuple[int, int], RatFun] = {}

        def power(i: int, k: int) -> "RatFun":
            key = (i, k)
            got = cache.get(key)
            if got is None:
                got = imgs[i] ** k
                cache[key] = got
            return got

        for e, c in self.terms.items():
            term = RatFun.from_int(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        names = self.ring.names
        chunks = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            body = "*".join(
                (nm if k == 1 else "%s^%d" % (nm, k)) for nm, k in zip(names, e) if k
            )
            if body:
                if c == 1:
                    chunk = body
                elif c == -1:
                    chunk = "-" + body
                else:
                    chunk = "%d*%s" % (c, body)
            else:
                chunk = str(c)
            chunks.append(chunk)
        out = chunks[0]
        for ch in chunks[1:]:
            out += " - " + ch[1:] if ch.startswith("-") else " + " + ch
        return out

    __repr__ = __str__

    def exact_div(self, d: "MPoly") -> "MPoly":
        """Quotient self/d when d divides exactly; raises ValueError otherwise."""
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return self
        lo_s, lo_d = self.min_exps(), d.min_exps()
        net = tuple(a - b for a, b in zip(lo_s, lo_d))
        r = {tuple(x - s for x, s in zip(e, lo_s)): c for e, c in self.terms.items()}
        dt = {tuple(x - s for x, s in zip(e, lo_d)): c for e, c in d.terms.items()}
        lt_d = max(dt)
        c_d = dt[lt_d]
        q: Dict[Tuple[int, ...], int] = {}
        while r:
            lt_r = max(r)
            qe = tuple(a - b for a, b in zip(lt_r, lt_d))
            if any(v < 0 for v in qe):
                raise ValueError("not divisible")
            qc, rem = divmod(r[lt_r], c_d)
            if rem:
                raise ValueError("not divisible")
            q[qe] = qc
            for e, c in dt.items():
                key = tuple(a + b for a, b in zip(e, qe))
                s = r.get(key, 0) - qc * c
                if s:
                    r[key] = s
                else:
                    del r[key]
        return MPoly(self.ring, {tuple(a + b for a, b in zip(e, net)): c for e, c in q.items()})

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False


def _screen_divides(num: MPoly, f: MPoly, num_val: Optional[int] = None) -> bool:
    """Cheap necessary test for f | num: per-variable degree spans and an
    integer-point divisibility check.  Never returns False incorrectly."""
    lo_n, hi_n = num.min_exps(), num.max_exps()
    lo_f, hi_f = f.min_exps(), f.max_exps()
    for a, b, c, d in zip(lo_n, hi_n, lo_f, hi_f):
        if b - a < d - c:
            return False
    pt = num.ring.screen_point()
    fv = f.shifted(tuple(-x for x in lo_f)).eval_int(pt)
    if fv == 0:
        return True
    nv = num_val if num_val is not None else num.shifted(tuple(-x for x in lo_n)).eval_int(pt)
    return nv % fv == 0


Scalar = Union[int, Fraction]


class RatFun:
    """num / (scalar * prod of canonical factors), all exact.

    num is a Laurent MPoly, scalar a positive integer, and den a mapping
    from canonical non-constant MPoly factors to positive multiplicities.
    gcd(content(num), scalar) = 1.
    """

    __slots__ = ("ring", "num", "scalar", "den", "_denexp")

    def __init__(self, ring: Ring, num: MPoly, scalar: int, den: Dict[MPoly, int]):
        self.ring = ring
        self.num = num
        self.scalar = scalar
        self.den = den
        self._denexp = None

    # -- constructors ----------------------------------------------------
    @staticmethod
    def from_int(ring: Ring, c: int) -> "RatFun":
        return RatFun(ring, ring.const(c), 1, {})

    @staticmethod
    def from_frac(ring: Ring, c: Union[int, Fraction]) -> "RatFun":
        c = Fraction(c)
        return RatFun(ring, ring.const(c.numerator), c.denominator, {})

    @staticmethod
    def from_mpoly(p: MPoly) -> "RatFun":
        return RatFun(p.ring, p, 1, {})

    @staticmethod
    def _make(ring: Ring, num: MPoly, scalar: int, den: Dict[MPoly, int]) -> "RatFun":
        if num.is_zero:
            return RatFun(ring, num, 1, {})
        if den:
            pt = ring.screen_point()
            lo = num.min_exps()
            num_val = num.shifted(tuple(-x for x in lo)).eval_int(pt)
            out: Dict[MPoly, int] = {}
            for f, k in den.items():
                while k > 0 and _screen_divides(num, f, num_val):
                    try:
                        num = num.exact_div(f)
                    except ValueError:
                        break
                    k -= 1
                    lo = num.min_exps()
                    num_val = num.shifted(tuple(-x for x in lo)).eval_int(pt)
                if k:
                    out[f] = k
            den = out
        c = num.content()
        g = math.gcd(c, scalar)
        if g > 1:
            num = MPoly(ring, {e: v // g for e, v in num.terms.items()})
            scalar //= g
        return RatFun(ring, num, scalar, den)

    def den_expanded(self) -> MPoly:
        if self._denexp is None:
            d = self.ring.const(self.scalar)
            for f, k in self.den.items():
                for _ in range(k):
                    d = d * f
            self._denexp = d
        return self._denexp

    # -- predicates ------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return not self.den and self.scalar == 1 and self.num.is_const and self.num.const_value() == 1

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFun.from_frac(self.ring, other)
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.num.terms == other.num.terms and self.scalar == other.scalar and self.den == other.den:
            return True
        return (self - other).is_zero

    def __hash__(self):
        raise TypeError("RatFun is not hashable; compare with == or is_equal")

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MPoly):
            return RatFun.from_mpoly(other)
        if isinstance(other, (int, Fraction)):
            return RatFun.from_frac(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = math.gcd(self.scalar, other.scalar)
        sa = other.scalar // g
        sb = self.scalar // g
        num_a = self.num * sa
        num_b = other.num * sb
        den: Dict[MPoly, int] = dict(self.den)
        for f, k in other.den.items():
            den[f] = max(den.get(f, 0), k)
        for f, k in den.items():
            ka = k - self.den.get(f, 0)
            kb = k - other.den.get(f, 0)
            for _ in range(ka):
                num_a = num_a * f
            for _ in range(kb):
                num_b = num_b * f
        return RatFun._make(self.ring, num_a + num_b, self.scalar * sa, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(self.ring, -self.num, self.scalar, self.den)

    def __sub__(self, other) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFun.from_int(self.ring, 0)
        den = dict(self.den)
        for f, k in other.den.items():
            den[f] = den.get(f, 0) + k
        return RatFun._make(self.ring, self.num * other.num, self.scalar * other.scalar, den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFun":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        c, shift, body = self.num.canonical()
        num = self.ring.monomial(self.scalar if c > 0 else -self.scalar, tuple(-x for x in shift))
        for f, k in self.den.items():
            for _ in range(k):
                num = num * f
        den = {body: 1} if not body.is_const else {}
        return RatFun._make(self.ring, num, abs(c), den)

    def __truediv__(self, other) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> "RatFun":
        return self.reciprocal() * other

    def __pow__(self, k: int) -> "RatFun":
        if k < 0:
            return self.reciprocal() ** (-k)
        result = RatFun.from_int(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- queries -----------------------------------------------------------
    def is_equal(self, other) -> bool:
        return self == other

    def as_frac(self) -> Optional[Fraction]:
        """Value as a rational constant, or None when not constant."""
        if self.den or not self.num.is_const:
            return None
        return Fraction(self.num.const_value(), self.scalar)

    def numerator_denominator(self) -> Tuple[MPoly, MPoly]:
        return self.num, self.den_expanded()

    # -- substitution / evaluation -----------------------------------------
    def subst_monomial(self, mapping: Mapping[str, Tuple[int, Tuple[int, ...]]], target: Ring) -> "RatFun":
        """Variable -> signed monomial substitution.

        mapping values are (sign, exponent vector) pairs; an all-zero
        exponent vector means the variable is pinned to +/-1, so a
        denominator factor can collapse to zero and raises PoleError.
        """
        num = self.num.subst_monomial(mapping, target)
        den: Dict[MPoly, int] = {}
        scalar = self.scalar
        for f, k in self.den.items():
            img = f.subst_monomial(mapping, target)
            if img.is_zero:
                raise PoleError(f, {nm: (sgn, ex) for nm, (sgn, ex) in mapping.items()})
            c, shift, body = img.canonical()
            num = num * target.monomial(1 if c > 0 else -1, tuple(-x * k for x in shift))
            ac = abs(c)
            if ac != 1:
                scalar *= ac ** k
            if not body.is_const:
                den[body] = den.get(body, 0) + k
        return RatFun._make(target, num, scalar, den)

    def specialize(self, images: Mapping[str, "RatFun"], target: Ring) -> "RatFun":
        """General substitution; raises PoleError when a denominator
        factor maps to zero."""
        mono: Dict[str, Tuple[int, Tuple[int, ...]]] = {}
        simple = True
        for nm, f in images.items():
            if isinstance(f, RatFun) and not f.den and f.scalar == 1 and f.num.is_monomial:
                e, c = next(iter(f.num.terms.items())), None
                exps, coeff = e[0], e[1]
                if coeff in (1, -1):
                    mono[nm] = (coeff, exps)
                    continue
            simple = False
            break
        if simple:
            return self.subst_monomial(mono, target)
        ratimages = {nm: (f if isinstance(f, RatFun) else RatFun.from_frac(target, f)) for nm, f in images.items()}
        num = self.num.subst(ratimages, target)
        out = num / RatFun.from_int(target, self.scalar)
        for f, k in self.den.items():
            img = f.subst(ratimages, target)
            if img.is_zero:
                raise PoleError(f, {nm: str(v) for nm, v in images.items()})
            out = out / img ** k
        return out

    def eval_complex(self, values: Mapping[str, complex], eps: float = 1e-12) -> complex:
        total = complex(self.num.eval_complex(values)) / self.scalar
        for f, k in self.den.items():
            v = f.eval_complex(values)
            if abs(v) < eps:
                raise NearPoleError(f, v, eps)
            total /= v ** k
        return total

    def __str__(self) -> str:
        num = str(self.num)
        if not self.den and self.scalar == 1:
            return num
        parts = []
        if self.scalar != 1:
            parts.append(str(self.scalar))
        for f, k in sorted(self.den.items(), key=lambda fk: str(fk[0])):
            body = "(%s)" % (f,)
            parts.append(body if k == 1 else body + "^%d" % k)
        den = " * ".join(parts)
        if len(self.num.terms) > 1:
            num = "(%s)" % num
        return "%s / [%s]" % (num, den)

    __repr__ = __str__

    def to_json(self) -> dict:
        """{num, den} as sorted term lists; den is the expanded product."""
        den = self.ring.monomial(self.scalar, [0] * self.ring.nvars)
        for f, k in self.den.items():
            for _ in range(k):
                den = den * f
        def terms(p: MPoly):
            return [
                {"exponents": list(e), "coefficient": c}
                for e, c in sorted(p.terms.items(), reverse=True)
            ]
        return {"num": terms(self.num), "den": terms(den)}


def ring_of(*names: str) -> Ring:
    return Ring(names)


def bareiss_det(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    """Fraction-free determinant of a square MPoly matrix.

    One-step Bareiss elimination; every division is exact in the
    polynomial ring, so no rational functions appear.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    m = [[p for p in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = v.exact_div(prev)
            m[i][k] = ring.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


class VarRegistry:
    """Maps domain-level parameters to generators of a Ring.

    Parameters listed in `half` get a generator representing their
    square root (named by uppercasing, or suffixing "_h" when the name
    has no case), so half-integral powers of the parameter are honest
    integral powers of the generator.  Parameters in `full` map to a
    plain generator.
    """

    def __init__(self, half: Sequence[str] = (), full: Sequence[str] = ()):
        table: Dict[str, Tuple[str, int]] = {}
        gen_names = []
        for sym in half:
            g = sym.upper() if sym.upper() != sym else sym + "_h"
            gen_names.append(g)
            table[sym] = (g, 2)
        for sym in full:
            if sym in table:
                raise ValueError("parameter %r listed twice" % sym)
            gen_names.append(sym)
            table[sym] = (sym, 1)
        if len(set(gen_names)) != len(gen_names):
            raise ValueError("generator name clash in %r" % (gen_names,))
        self.ring = Ring(gen_names)
        self.table = table

    def symbols(self) -> Tuple[str, ...]:
        return tuple(self.table)

    def power(self, sym: str, expo: Union[int, Fraction]) -> RatFun:
        """The parameter raised to an integer or half-integer power."""
        g, mult = self.table[sym]
        e = Fraction(expo) * mult
        if e.denominator != 1:
            raise ValueError("%s**%s is not representable (need a half generator)" % (sym, expo))
        exps = [0] * self.ring.nvars
        exps[self.ring.index[g]] = int(e)
        return RatFun.from_mpoly(self.ring.monomial(1, exps))

    def var(self, sym: str) -> RatFun:
        return self.power(sym, 1)

    def mono(self, coeff: Union[int, Fraction] = 1, **powers: Union[int, Fraction]) -> RatFun:
        """coeff times a product of parameter powers (possibly half-integral)."""
        exps = [0] * self.ring.nvars
        for sym, expo in powers.items():
            g, mult = self.table[sym]
            e = Fraction(expo) * mult
            if e.denominator != 1:
                raise ValueError("%s**%s is not representable" % (sym, expo))
            exps[self.ring.index[g]] += int(e)
        c = Fraction(coeff)
        num = self.ring.monomial(c.numerator, exps)
        return RatFun._make(self.ring, num, c.denominator, {})

    def const(self, c: Union[int, Fraction]) -> RatFun:
        return RatFun.from_frac(self.ring, c)

    def generator_values(self, **symbol_values: complex) -> Dict[str, complex]:
        """Complex values for the generators given values for the
        parameters; half generators take the principal square root."""
        import cmath

        out: Dict[str, complex] = {}
        for sym, (g, mult) in self.table.items():
            if sym not in symbol_values:
                raise ValueError("missing value for %r" % sym)
            v = complex(symbol_values[sym])
            out[g] = cmath.sqrt(v) if mult == 2 else v
        return out
