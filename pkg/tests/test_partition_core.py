import pytest
from hypothesis import given, strategies as st
from math import factorial

from cherpoi.partition_core import (
    Tableau,
    cell_data,
    cells,
    check_partition,
    dominance_leq,
    enumerate_partitions,
    enumerate_syt,
    hook_product,
    hooks,
    nstat,
    num_syt,
    size,
    transpose,
)


def partitions(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.sampled_from(enumerate_partitions(n))
    )


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition(())
    with pytest.raises(ValueError):
        check_partition((3, 0))
    with pytest.raises(ValueError):
        check_partition((1, 2))
    assert check_partition([2, 1]) == (2, 1)


def test_enumerate_partitions_revlex():
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(enumerate_partitions(6)) == 11
    assert len(enumerate_partitions(8)) == 22


def test_transpose_examples():
    assert transpose((4, 2, 1)) == (3, 2, 1, 1)
    assert transpose((3,)) == (1, 1, 1)
    assert transpose((2, 2)) == (2, 2)


@given(partitions())
def test_transpose_involution(mu):
    assert transpose(transpose(mu)) == mu
    assert size(transpose(mu)) == size(mu)


def test_cell_data_example():
    c = cell_data((4, 2, 1), 0, 0)
    assert (c.arm, c.leg, c.hook) == (3, 2, 6)
    with pytest.raises(IndexError):
        cell_data((4, 2, 1), 1, 3)


def test_hooks_and_syt_count():
    assert sorted(hooks((2, 2))) == [1, 2, 2, 3]
    assert num_syt((2, 2)) == 2
    assert num_syt((3, 2)) == 5


@given(partitions(7))
def test_hook_length_formula_consistency(mu):
    n = size(mu)
    assert num_syt(mu) * hook_product(mu) == factorial(n)
    assert len(enumerate_syt(mu)) == num_syt(mu)


@given(partitions())
def test_nstat_via_cells(mu):
    # n(mu) counts 0-based row indices over cells, and equals the leg sum
    rows = sum(i for i, _ in cells(mu))
    legs = sum(cell_data(mu, i, j).leg for i, j in cells(mu))
    assert nstat(mu) == rows == legs
    # hook sum decomposes into size plus both statistics
    assert sum(hooks(mu)) == size(mu) + nstat(mu) + nstat(transpose(mu))


def test_nstat_examples():
    assert nstat((3,)) == 0
    assert nstat((1, 1, 1)) == 3
    assert nstat((2, 1)) == 1


def test_dominance_chain():
    chain = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    for a, b in zip(chain, chain[1:]):
        assert dominance_leq(a, b)
        assert not dominance_leq(b, a)
    with pytest.raises(ValueError):
        dominance_leq((2, 1), (2, 2))


def test_dominance_first_incomparable_pair():
    assert not dominance_leq((3, 1, 1, 1), (2, 2, 2))
    assert not dominance_leq((2, 2, 2), (3, 1, 1, 1))


@given(st.integers(1, 7))
def test_dominance_extremes_and_revlex_refinement(n):
    parts = enumerate_partitions(n)
    top, bottom = (n,), (1,) * n
    for mu in parts:
        assert dominance_leq(mu, top)
        assert dominance_leq(bottom, mu)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            if lam != mu and dominance_leq(lam, mu):
                assert i > j


@given(partitions(6))
def test_dominance_reverses_under_transpose(lam):
    n = size(lam)
    for mu in enumerate_partitions(n):
        if dominance_leq(lam, mu):
            assert dominance_leq(transpose(mu), transpose(lam))


def test_maj_extremes():
    row = enumerate_syt((4,))
    assert len(row) == 1 and row[0].maj == 0
    col = enumerate_syt((1, 1, 1, 1))
    assert len(col) == 1 and col[0].maj == 6


def test_syt_are_standard():
    for t in enumerate_syt((3, 2)):
        assert isinstance(t, Tableau)
        flat = sorted(x for row in t.rows for x in row)
        assert flat == [1, 2, 3, 4, 5]
        for row in t.rows:
            assert list(row) == sorted(row)
