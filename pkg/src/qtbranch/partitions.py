"""Integer partitions, their square statistics, and shape predicates.

Conventions: a partition is a weakly decreasing tuple of nonnegative
integers with trailing zeros stripped; squares are addressed 1-based as
(i, j) with i the row.  A weight is a weakly decreasing integer vector
of fixed length n whose entries may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple, Union


class Partition:
    """Immutable integer partition."""

    __slots__ = ("_parts", "_conj")

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %r" % (ps,))
        if ps and ps[-1] < 0:
            raise ValueError("parts must be nonnegative: %r" % (ps,))
        self._parts = ps
        self._conj = None

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def part(self, i: int) -> int:
        """Part lambda_i with 1-based i; zero beyond the last row."""
        return self._parts[i - 1] if 1 <= i <= len(self._parts) else 0

    @property
    def size(self) -> int:
        return sum(self._parts)

    @property
    def length(self) -> int:
        return len(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return "Partition%r" % (self._parts,)

    def conjugate(self) -> "Partition":
        if self._conj is None:
            ps = self._parts
            cols = []
            for j in range(1, ps[0] + 1 if ps else 1):
                cols.append(sum(1 for p in ps if p >= j))
            self._conj = Partition(cols)
        return self._conj

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, p in enumerate(self._parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains_cell(self, i: int, j: int) -> bool:
        return 1 <= i and 1 <= j <= self.part(i)

    # square statistics; (i, j) must lie inside the diagram
    def arm(self, i: int, j: int) -> int:
        return self.part(i) - j

    def coarm(self, i: int, j: int) -> int:
        return j - 1

    def leg(self, i: int, j: int) -> int:
        return self.conjugate().part(j) - i

    def coleg(self, i: int, j: int) -> int:
        return i - 1

    def arm_hat(self, i: int, j: int) -> int:
        return self.part(i) + j - 1

    def leg_hat(self, i: int, j: int) -> int:
        return self.conjugate().part(j) + i - 1

    def multiplicity(self, r: int) -> int:
        return sum(1 for p in self._parts if p == r)

    def to_weight(self, n: int) -> "Weight":
        if len(self._parts) > n:
            raise ValueError("partition has more than %d parts" % n)
        return Weight(self._parts + (0,) * (n - len(self._parts)))


PartitionLike = Union[Partition, Sequence[int]]


def aspartition(x: PartitionLike) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


class Weight:
    """Weakly decreasing integer vector of fixed length."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        es = tuple(int(e) for e in entries)
        for a, b in zip(es, es[1:]):
            if a < b:
                raise ValueError("entries must be weakly decreasing: %r" % (es,))
        self._entries = es

    @property
    def entries(self) -> Tuple[int, ...]:
        return self._entries

    @property
    def n(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __getitem__(self, i: int) -> int:
        return self._entries[i]

    def entry(self, i: int) -> int:
        """Entry with 1-based index, no padding."""
        return self._entries[i - 1]

    @property
    def size(self) -> int:
        return sum(self._entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(("Weight", self._entries))

    def __repr__(self) -> str:
        return "Weight%r" % (self._entries,)

    @property
    def is_partition(self) -> bool:
        return not self._entries or self._entries[-1] >= 0

    def to_partition(self) -> Partition:
        if not self.is_partition:
            raise ValueError("negative entries: %r" % (self._entries,))
        return Partition(self._entries)

    def shift(self, c: int) -> "Weight":
        return Weight(tuple(e + c for e in self._entries))

    def reverse_negate(self) -> "Weight":
        """(w_1,...,w_n) -> (-w_n,...,-w_1)."""
        return Weight(tuple(-e for e in reversed(self._entries)))


WeightLike = Union[Weight, Sequence[int]]


def asweight(x: WeightLike, n: Optional[int] = None) -> Weight:
    if isinstance(x, Partition):
        if n is None:
            raise ValueError("length n required to view a partition as a weight")
        return x.to_weight(n)
    w = x if isinstance(x, Weight) else Weight(x)
    if n is not None and w.n != n:
        raise ValueError("expected length %d, got %d" % (n, w.n))
    return w


@dataclass(frozen=True)
class SquareStats:
    """Additive square statistics of a partition.

    nhat_even and nhat_odd are Fractions: each square contributes half of
    (column height - 1), which need not be an even total on either parity
    class separately.
    """

    size: int
    n: int
    n_conj: int
    n_even: int
    n_odd: int
    nhat_even: Fraction
    nhat_odd: Fraction
    nbar_even: int
    nbar_odd: int
    cells_even: int
    cells_odd: int
    hooks_even: int
    hooks_odd: int


def stats(lam: PartitionLike) -> SquareStats:
    """All square statistics in one pass over the diagram.

    Parity classes: the "bar" and "cells" statistics split squares by
    i + j mod 2; the plain and "hat" statistics split by a(s) + l(s)
    mod 2 where a and l are arm- and leg-length.
    """
    lam = aspartition(lam)
    conj = lam.conjugate()
    n_e = n_o = 0
    nhat_e = Fraction(0)
    nhat_o = Fraction(0)
    nbar_e = nbar_o = 0
    cells_e = cells_o = 0
    hooks_e = hooks_o = 0
    n_total = 0
    for i, p in enumerate(lam.parts, start=1):
        n_total += (i - 1) * p
        for j in range(1, p + 1):
            colh = conj.part(j)
            al = (p - j) + (colh - i)
            half = Fraction(colh - 1, 2)
            if al % 2 == 0:
                n_e += i - 1
                nhat_e += half
                hooks_e += 1
            else:
                n_o += i - 1
                nhat_o += half
                hooks_o += 1
            if (i + j) % 2 == 0:
                nbar_e += i - 1
                cells_e += 1
            else:
                nbar_o += i - 1
                cells_o += 1
    n_conj = sum(p * (p - 1) // 2 for p in lam.parts)
    return SquareStats(
        size=lam.size,
        n=n_total,
        n_conj=n_conj,
        n_even=n_e,
        n_odd=n_o,
        nhat_even=nhat_e,
        nhat_odd=nhat_o,
        nbar_even=nbar_e,
        nbar_odd=nbar_o,
        cells_even=cells_e,
        cells_odd=cells_o,
        hooks_even=hooks_e,
        hooks_odd=hooks_o,
    )


def n_stat(lam: PartitionLike) -> int:
    """n(lambda) = sum over rows of (i - 1) * lambda_i."""
    lam = aspartition(lam)
    return sum((i - 1) * p for i, p in enumerate(lam.parts, start=1))


def n_conj_stat(lam: PartitionLike) -> int:
    """n of the conjugate, computed as sum of C(lambda_i, 2)."""
    lam = aspartition(lam)
    return sum(p * (p - 1) // 2 for p in lam.parts)


def n_weight(w: WeightLike) -> int:
    """Weight extension of n: sum of (i - 1) * w_i."""
    w = asweight(w)
    return sum((i - 1) * e for i, e in enumerate(w.entries, start=1))


def n_conj_weight(w: WeightLike) -> int:
    """Weight extension of n of the conjugate: sum of w_i (w_i - 1) / 2."""
    w = asweight(w)
    return sum(e * (e - 1) // 2 for e in w.entries)


def l_odd(lam: PartitionLike) -> int:
    """Number of odd parts."""
    return sum(1 for p in aspartition(lam).parts if p % 2 == 1)


def is_even_partition(lam: PartitionLike) -> bool:
    """All parts even (all row lengths even)."""
    return all(p % 2 == 0 for p in aspartition(lam).parts)


def has_even_conjugate(lam: PartitionLike) -> bool:
    """All column heights even."""
    return is_even_partition(aspartition(lam).conjugate())


def beta_numbers(lam: PartitionLike, m: int) -> Tuple[int, ...]:
    """First-column hook complements lambda_i + m - i for i = 1..m.

    Requires m >= length; rows beyond the last contribute m - i.
    """
    lam = aspartition(lam)
    if m < lam.length:
        raise ValueError("need m >= number of parts")
    return tuple(lam.part(i) + m - i for i in range(1, m + 1))


def two_core_empty(lam: PartitionLike, method: str = "beta") -> bool:
    """Whether the 2-core is empty.

    method="beta" counts parities in a beta-number set of even size m
    (the split must be m/2 and m/2); method="domino" strips dominoes.
    The two routes are independent and are cross-checked in the tests.
    """
    lam = aspartition(lam)
    if method == "domino":
        return two_core(lam).size == 0
    if method != "beta":
        raise ValueError("unknown method %r" % (method,))
    ell = lam.length
    m = ell + (ell % 2)
    if m == 0:
        return True
    betas = beta_numbers(lam, m)
    evens = sum(1 for b in betas if b % 2 == 0)
    return 2 * evens == m


def two_core(lam: PartitionLike) -> Partition:
    """2-core obtained by repeatedly stripping border dominoes.

    At each step remove a horizontal domino from the end of a row when
    the result is still a partition, else a vertical domino from a pair
    of equal adjacent rows.  The end shape is independent of the order
    of removals.
    """
    parts = list(aspartition(lam).parts)
    while True:
        removed = False
        for i in range(len(parts)):
            nxt = parts[i + 1] if i + 1 < len(parts) else 0
            if parts[i] >= 2 and parts[i] - 2 >= nxt:
                parts[i] -= 2
                removed = True
                break
        if not removed:
            for i in range(len(parts) - 1):
                below = parts[i + 2] if i + 2 < len(parts) else 0
                if parts[i] == parts[i + 1] >= 1 and parts[i + 1] - 1 >= below:
                    parts[i] -= 1
                    parts[i + 1] -= 1
                    removed = True
                    break
        while parts and parts[-1] == 0:
            parts.pop()
        if not removed:
            return Partition(parts)


def dominance_le(a: Union[PartitionLike, WeightLike], b: Union[PartitionLike, WeightLike]) -> bool:
    """Dominance a <= b by partial sums, sizes allowed to differ.

    Every partial sum of a must be at most the corresponding partial sum
    of b, including the full sums.  Shorter vectors are padded with
    zeros, so for equal-size partitions this is the usual dominance
    order.
    """
    pa = tuple(a.parts if isinstance(a, Partition) else a.entries if isinstance(a, Weight) else a)
    pb = tuple(b.parts if isinstance(b, Partition) else b.entries if isinstance(b, Weight) else b)
    k = max(len(pa), len(pb))
    sa = sb = 0
    for i in range(k):
        sa += pa[i] if i < len(pa) else 0
        sb += pb[i] if i < len(pb) else 0
        if sa > sb:
            return False
    return True


def contains(inner: PartitionLike, outer: PartitionLike) -> bool:
    """Containment of diagrams: inner_i <= outer_i for all i."""
    inner = aspartition(inner)
    outer = aspartition(outer)
    if inner.length > outer.length:
        return False
    return all(inner.parts[i] <= outer.parts[i] for i in range(inner.length))


def interlaces(mu: PartitionLike, lam: PartitionLike) -> bool:
    """Whether lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...

    Equivalently mu is contained in lambda and the skew shape is a
    horizontal strip.
    """
    mu = aspartition(mu)
    lam = aspartition(lam)
    k = max(mu.length, lam.length)
    for i in range(1, k + 1):
        if not (lam.part(i) >= mu.part(i) >= lam.part(i + 1)):
            return False
    return True


def complement(lam: PartitionLike, m: int, n: int) -> Partition:
    """Complement (m - lambda_n, ..., m - lambda_1) inside the m x n box."""
    lam = aspartition(lam)
    if lam.length > n or (lam.parts and lam.parts[0] > m):
        raise ValueError("%r does not fit in a %d x %d box" % (lam.parts, m, n))
    return Partition(tuple(m - lam.part(i) for i in range(n, 0, -1)))


def double_row(lam: PartitionLike) -> Partition:
    """2 lambda: every part doubled."""
    return Partition(tuple(2 * p for p in aspartition(lam).parts))


def double_col(lam: PartitionLike) -> Partition:
    """lambda squared: every part repeated twice."""
    out = []
    for p in aspartition(lam).parts:
        out.append(p)
        out.append(p)
    return Partition(out)


def add_rect(lam: PartitionLike, N: int, n: int) -> Partition:
    """lambda + (N^n) for a partition with at most n parts, N >= 0."""
    lam = aspartition(lam)
    if N < 0:
        raise ValueError("N must be nonnegative; use Weight.shift for general N")
    if lam.length > n:
        raise ValueError("partition has more than %d parts" % n)
    return Partition(tuple(lam.part(i) + N for i in range(1, n + 1)))


def skew_size(lam: PartitionLike, mu: PartitionLike) -> int:
    lam = aspartition(lam)
    mu = aspartition(mu)
    if not contains(mu, lam):
        raise ValueError("shapes are not nested")
    return lam.size - mu.size


def partitions_in_box(m: int, n: int, predicate: Optional[Callable[[Partition], bool]] = None) -> Iterator[Partition]:
    """All partitions with first part <= m and at most n parts, in
    ascending lexicographic order of the part tuples."""
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be nonnegative")

    def gen(maxpart: int, rows: int) -> Iterator[Tuple[int, ...]]:
        yield ()
        if rows == 0:
            return
        for first in range(1, maxpart + 1):
            for rest in gen(first, rows - 1):
                yield (first,) + rest

    for tup in gen(m, n):
        lam = Partition(tup)
        if predicate is None or predicate(lam):
            yield lam


def partitions_of_size(
    k: int,
    max_part: Optional[int] = None,
    max_length: Optional[int] = None,
    predicate: Optional[Callable[[Partition], bool]] = None,
) -> Iterator[Partition]:
    """All partitions of k, in ascending lexicographic order."""
    if k < 0:
        raise ValueError("size must be nonnegative")
    cap = k if max_part is None else min(max_part, k)
    rows = k if max_length is None else max_length

    def gen(rem: int, maxpart: int, rows_left: int) -> Iterator[Tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        if rows_left == 0 or maxpart == 0:
            return
        lo = -(-rem // rows_left)  # smallest feasible first part
        for first in range(max(1, lo), min(maxpart, rem) + 1):
            for rest in gen(rem - first, first, rows_left - 1):
                yield (first,) + rest

    for tup in sorted(gen(k, cap, rows)):
        lam = Partition(tup)
        if predicate is None or predicate(lam):
            yield lam


def partitions_up_to_size(
    k: int,
    max_part: Optional[int] = None,
    max_length: Optional[int] = None,
) -> Iterator[Partition]:
    """All partitions of size 0..k, ordered by size then lexicographically."""
    for s in range(k + 1):
        yield from partitions_of_size(s, max_part=max_part, max_length=max_length)
