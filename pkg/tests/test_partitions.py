"""Partition combinatorics: conjugation, square statistics, 2-cores, orders."""

from fractions import Fraction

import pytest

from qtbranch.partitions import (
    Partition,
    Weight,
    aspartition,
    beta_numbers,
    complement,
    contains,
    dominance_le,
    double_col,
    double_row,
    interlaces,
    partitions_in_box,
    partitions_of_size,
    partitions_up_to_size,
    stats,
    two_core,
    two_core_empty,
)

try:
    from hypothesis import given, strategies as st

    HAVE_HYPOTHESIS = True
except ImportError:
    HAVE_HYPOTHESIS = False


def parts_list(max_size=12):
    return st.lists(st.integers(min_value=1, max_value=8), max_size=6).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )


@pytest.mark.parametrize(
    "lam,expected",
    [
        ((3, 1), (2, 1, 1)),
        ((), ()),
        ((5, 4, 4, 1), (4, 3, 3, 3, 1)),
    ],
)
def test_conjugate_examples(lam, expected):
    assert aspartition(lam).conjugate().parts == expected


if HAVE_HYPOTHESIS:

    @given(parts_list())
    def test_conjugate_involution(lam):
        assert lam.conjugate().conjugate() == lam

    @given(parts_list(), parts_list())
    def test_dominance_reverses_under_conjugation(lam, mu):
        if lam.size == mu.size and dominance_le(lam, mu):
            assert dominance_le(mu.conjugate(), lam.conjugate())


def test_stats_empty():
    s = stats(Partition(()))
    assert s.n == s.n_conj == 0
    assert s.n_even == s.n_odd == 0
    assert s.nhat_even == s.nhat_odd == 0
    assert s.nbar_even == s.nbar_odd == 0
    assert s.cells_even == s.cells_odd == 0
    assert s.hooks_even == s.hooks_odd == 0


def test_stats_single_row():
    # both squares of (2) sit in row 1, so every n-type statistic vanishes
    s = stats(Partition((2,)))
    assert s.n == 0
    assert s.n_even == 0 and s.n_odd == 0


def test_stats_two_by_two():
    # direct enumeration: squares (1,1),(2,2) have a+l even, (1,2),(2,1) odd
    s = stats(Partition((2, 2)))
    assert s.n == 2
    assert (s.n_even, s.n_odd) == (1, 1)
    assert (s.nhat_even, s.nhat_odd) == (Fraction(1), Fraction(1))
    assert (s.nbar_even, s.nbar_odd) == (1, 1)
    assert (s.cells_even, s.cells_odd) == (2, 2)
    assert (s.hooks_even, s.hooks_odd) == (2, 2)


def test_stats_split_totals():
    for lam in partitions_up_to_size(9):
        s = stats(lam)
        assert s.n_even + s.n_odd == s.n
        assert s.nhat_even + s.nhat_odd == s.n
        assert s.nbar_even + s.nbar_odd == s.n
        assert s.cells_even + s.cells_odd == lam.size
        assert s.hooks_even + s.hooks_odd == lam.size


@pytest.mark.parametrize(
    "lam,expected",
    [
        ((5, 4, 4, 1), True),
        ((2, 1), False),
        ((1,), False),
    ],
)
def test_two_core_empty_examples(lam, expected):
    assert two_core_empty(aspartition(lam)) is expected


def test_two_core_methods_agree():
    for lam in partitions_up_to_size(14):
        assert two_core_empty(lam, method="beta") == two_core_empty(lam, method="domino")


def test_two_core_shape():
    # 2-cores are staircases; (2,1) is its own core
    assert two_core(Partition((2, 1))).parts == (2, 1)
    assert two_core(Partition((5, 4, 4, 1))).parts == ()


def test_half_statistics_on_empty_core():
    for lam in partitions_up_to_size(12):
        if not two_core_empty(lam):
            continue
        s = stats(lam)
        half = lam.size // 2
        assert s.cells_even == s.cells_odd == half
        assert s.hooks_even == s.hooks_odd == half
        # two bar/hat/plain splits tie together on empty 2-core
        assert s.nbar_even == 2 * s.nhat_odd - s.n_even
        assert s.nbar_odd == 2 * s.nhat_even - s.n_odd


def test_beta_number_balance():
    # empty 2-core iff the first-column hook lengths split evenly by parity
    for lam in partitions_up_to_size(12):
        betas = beta_numbers(lam, max(2, 2 * ((lam.length + 1) // 2)))
        even = sum(1 for b in betas if b % 2 == 0)
        assert (even * 2 == len(betas)) == two_core_empty(lam)


def test_order_examples():
    assert complement(Partition((2, 1)), 3, 2).parts == (2, 1)
    assert interlaces(Partition((1,)), Partition((2, 1)))
    assert dominance_le(Partition((1, 1, 1)), Partition((3,)))


def test_complement_involution_and_rejection():
    for lam in partitions_in_box(3, 2):
        assert complement(complement(lam, 3, 2), 3, 2) == lam
    with pytest.raises(ValueError):
        complement(Partition((4,)), 3, 2)


def test_interlacing_implies_containment():
    for lam in partitions_up_to_size(6):
        for mu in partitions_up_to_size(6):
            if interlaces(mu, lam):
                assert contains(mu, lam)


def test_doubling():
    lam = Partition((3, 1))
    assert double_row(lam).parts == (6, 2)
    assert double_col(lam).parts == (3, 3, 1, 1)
    assert double_col(lam) == double_row(lam.conjugate()).conjugate()


def test_enumeration():
    assert sorted(p.parts for p in partitions_in_box(1, 1)) == [(), (1,)]
    assert len(list(partitions_in_box(2, 2))) == 6
    core_free = {p.parts for p in partitions_of_size(4, predicate=two_core_empty)}
    assert core_free == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_enumeration_sorted_no_dupes():
    seen = [p.parts for p in partitions_of_size(7)]
    assert len(seen) == len(set(seen)) == 15
    assert seen == sorted(seen)


def test_weight_basics():
    w = Weight((3, 1, -2))
    assert w.n == 3 and w.size == 2
    assert not w.is_partition
    with pytest.raises(ValueError):
        Weight((1, 2))
    with pytest.raises(ValueError):
        w.to_partition()
    assert Weight((2, 1)).to_partition().parts == (2, 1)


def test_partition_json_round_trip():
    import json

    lam = Partition((5, 4, 4, 1))
    assert json.loads(json.dumps(list(lam.parts))) == [5, 4, 4, 1]
