"""Brute-force oracle checks: small frozen tables plus structural laws."""

import itertools
from math import comb, factorial

import pytest

from cherpoi.commutative_oracle import (
    BigradedDims,
    alternants_dims,
    class_representative,
    coinvariant_multiplicities,
    ideal_power_dims,
    jbar_dims,
    parity_check,
    perm_sign,
    reflection_action,
)
from cherpoi.errors import ResourceError
from cherpoi.exact_poly import expand_window, q_factorial
from cherpoi.hilbert_series import jbar_closed
from cherpoi.partition_core import enumerate_partitions
from cherpoi.sn_rep import dim_irr, fake_degree


def _matmul(a, b):
    m = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m))
        for i in range(m)
    )


def _identity(m):
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def _det(a):
    m = len(a)
    if m == 1:
        return a[0][0]
    total = 0
    for j in range(m):
        minor = tuple(row[:j] + row[j + 1 :] for row in a[1:])
        total += (-1) ** j * a[0][j] * _det(minor)
    return total


def test_reflection_generators_frozen_n3():
    ra = reflection_action(3)
    assert ra.generators == (((-1, 1), (0, 1)), ((1, 0), (1, -1)))
    assert ra.dual_generators == (((-1, 0), (1, 1)), ((1, 1), (0, -1)))


def test_reflection_generators_are_involutions_with_det_minus_one():
    for n in range(2, 5):
        ra = reflection_action(n)
        eye = _identity(n - 1)
        for g in ra.generators + ra.dual_generators:
            assert _matmul(g, g) == eye
            assert _det(g) == -1


def test_coxeter_braid_and_commutation():
    ra = reflection_action(4)
    s = ra.generators
    eye = _identity(3)
    for i in range(2):
        prod = _matmul(s[i], s[i + 1])
        assert _matmul(prod, _matmul(prod, prod)) == eye
    far = _matmul(s[0], s[2])
    assert _matmul(far, far) == eye


def test_action_is_a_homomorphism_and_det_is_the_sign():
    ra = reflection_action(4)
    for sigma in itertools.permutations(range(4)):
        assert _det(ra.matrix(sigma)) == perm_sign(sigma)
        for tau in [(1, 0, 2, 3), (0, 2, 3, 1)]:
            comp = tuple(sigma[tau[i]] for i in range(4))
            assert ra.matrix(comp) == _matmul(ra.matrix(sigma), ra.matrix(tau))


def test_dual_action_preserves_the_pairing():
    ra = reflection_action(4)
    eye = _identity(3)
    for sigma in itertools.permutations(range(4)):
        dual_t = tuple(zip(*ra.dual_matrix(sigma)))
        assert _matmul(dual_t, ra.matrix(sigma)) == eye


def test_class_representatives():
    for n in range(2, 6):
        for rho in enumerate_partitions(n):
            rep = class_representative(rho, n)
            assert sorted(rep) == list(range(n))
            assert perm_sign(rep) == (-1) ** (n - len(rho))


def test_alternants_corner_dims():
    cases = [(2, (4, 4), None), (3, (4, 4), None), (4, (6, 6), 8)]
    for n, window, total in cases:
        dims = alternants_dims(n, window, total)
        big_n = n * (n - 1) // 2
        assert dims.dim(0, 0) == 0
        assert dims.dim(big_n, 0) == 1
        assert dims.dim(0, big_n) == 1
        for a in range(big_n):
            assert dims.dim(a, 0) == 0


def test_ideal_power_zero_is_the_full_ring():
    for n in (2, 3):
        m = n - 1
        dims = ideal_power_dims(n, 0, (4, 4))
        for (a, b), value in dims.table.items():
            assert value == comb(a + m - 1, m - 1) * comb(b + m - 1, m - 1)


def test_ideal_powers_frozen_n2():
    j1 = ideal_power_dims(2, 1, (3, 3))
    for (a, b), value in j1.table.items():
        assert value == (0 if a + b == 0 else 1)
    j2 = ideal_power_dims(2, 2, (3, 3))
    for (a, b), value in j2.table.items():
        assert value == (0 if a + b < 2 else 1)


def test_ideal_power_chain_is_decreasing_and_contains_delta_powers():
    for n in (2, 3):
        big_n = n * (n - 1) // 2
        tables = [ideal_power_dims(n, d, (4, 4)).table for d in range(4)]
        for prev, nxt in zip(tables, tables[1:]):
            for cell, value in prev.items():
                assert nxt[cell] <= value
        for d in range(4):
            col = ideal_power_dims(n, d, (d * big_n, 0))
            assert col.dim(d * big_n, 0) >= 1
    assert ideal_power_dims(4, 1, (6, 0), total=6).dim(6, 0) == 1


def test_alternants_sit_inside_the_first_ideal_power():
    for n in (2, 3):
        alts = alternants_dims(n, (4, 4))
        j1 = ideal_power_dims(n, 1, (4, 4))
        for cell, value in alts.table.items():
            assert value <= j1.table[cell]


def test_parity_check_small_grid():
    for n in (2, 3):
        for d in range(4):
            assert parity_check(n, d, (4, 4)) is True
    for d in (0, 1):
        assert parity_check(4, d, (4, 4), total=8) is True


def test_jbar_dims_frozen_n2_d0():
    result = jbar_dims(2, 0, (6, 6))
    for (a, b), value in result.quotient.table.items():
        assert value == (1 if a <= 1 else 0)
    assert result.sums[1] == 1
    assert all(result.sums[g] == 0 for g in range(2, 7))
    assert all(result.sums[g] == 2 for g in range(-5, 1))
    assert result.saturated[-6] is False
    assert result.sums[-6] == 1
    sat = result.saturated_sums()
    assert -6 not in sat
    assert sat[0] == 2 and sat[-5] == 2 and sat[1] == 1


def test_jbar_saturated_diagonals_match_the_closed_form():
    for d in range(3):
        result = jbar_dims(2, d, (6, 6))
        sat = result.saturated_sums()
        assert sat, "no certified diagonals"
        lo, hi = min(sat), max(sat)
        series = expand_window(jbar_closed(2, d), "descending", (lo, hi))
        for g, total in sat.items():
            assert series.coefficient((g,)) == total


def test_coinvariant_multiplicities_frozen():
    assert coinvariant_multiplicities(2) == {0: {(2,): 1}, 1: {(1, 1): 1}}
    assert coinvariant_multiplicities(3) == {
        0: {(3,): 1},
        1: {(2, 1): 1},
        2: {(2, 1): 1},
        3: {(1, 1, 1): 1},
    }


def test_coinvariant_multiplicities_match_fake_degrees():
    for n in range(2, 6):
        mults = coinvariant_multiplicities(n)
        for mu in enumerate_partitions(n):
            f = fake_degree(mu)
            for deg in range(n * (n - 1) // 2 + 1):
                expected = f.coefficient((deg,))
                assert mults.get(deg, {}).get(mu, 0) == expected


def test_coinvariant_degree_totals_match_the_q_factorial():
    for n in range(2, 6):
        mults = coinvariant_multiplicities(n)
        qfac = q_factorial(n).as_poly()
        for deg, row in mults.items():
            total = sum(dim_irr(mu) * mult for mu, mult in row.items())
            assert total == qfac.coefficient((deg,))
        assert sum(
            dim_irr(mu) * m for row in mults.values() for mu, m in row.items()
        ) == factorial(n)


def test_bigraded_dims_validation_and_helpers():
    dims = BigradedDims(2, 2, None, {(0, 0): 1, (1, 0): 2, (0, 2): 1})
    assert dims.dim(1, 0) == 2
    assert dims.dim(5, 5) == 0
    assert dims.diagonal_sums() == {0: 1, 1: 2, -2: 1}
    with pytest.raises(ValueError):
        BigradedDims(1, 1, None, {(1, 0): -1})
    with pytest.raises(ValueError):
        BigradedDims(1, 1, None, {(0, 0): 2})


def test_argument_validation():
    with pytest.raises(ValueError):
        ideal_power_dims(1, 0, (2, 2))
    with pytest.raises(ValueError):
        ideal_power_dims(2, -1, (2, 2))
    with pytest.raises(ValueError):
        ideal_power_dims(2, 0, (-1, 2))
    with pytest.raises(ValueError):
        ideal_power_dims(2, 0, (2, 2), total=-1)
    with pytest.raises(ValueError):
        reflection_action(1)


def test_budget_limits():
    with pytest.raises(ResourceError):
        ideal_power_dims(5, 0, (2, 2))
    with pytest.raises(ResourceError):
        ideal_power_dims(2, 4, (2, 2))
    with pytest.raises(ResourceError):
        ideal_power_dims(4, 1, (2, 2))  # no total cap
    with pytest.raises(ResourceError):
        ideal_power_dims(4, 1, (2, 2), total=9)
    with pytest.raises(ResourceError):
        ideal_power_dims(4, 2, (2, 2), total=8)
    with pytest.raises(ResourceError):
        ideal_power_dims(2, 0, (25, 0))
    with pytest.raises(ResourceError, match="n <= 3"):
        jbar_dims(4, 0, (2, 2), total=8)
    with pytest.raises(ResourceError):
        coinvariant_multiplicities(6)
    with pytest.raises(ResourceError):
        reflection_action(6)
