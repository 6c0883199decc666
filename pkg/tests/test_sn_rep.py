from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cherpoi.exact_poly import LaurentPoly, q_factorial_poly
from cherpoi.partition_core import enumerate_partitions, nstat, size, transpose
from cherpoi.errors import ResourceError
from cherpoi.sn_rep import (
    centralizer_order,
    character_table,
    character_value,
    class_sign,
    dim_irr,
    fake_degree,
    fake_degree_maj,
    kronecker,
    tensor_decompose,
)

V = ("v",)


def test_character_table_s3():
    table = character_table(3)
    values = {
        ((3,), (1, 1, 1)): 1,
        ((2, 1), (1, 1, 1)): 2,
        ((1, 1, 1), (1, 1, 1)): 1,
        ((2, 1), (2, 1)): 0,
        ((2, 1), (3,)): -1,
        ((1, 1, 1), (2, 1)): -1,
    }
    for (mu, rho), want in values.items():
        assert table.chi(mu, rho) == want


def test_character_value_murnaghan_nakayama():
    assert character_value((4, 1), (5,)) == -1
    assert character_value((3, 2), (1, 1, 1, 1, 1)) == 5
    assert character_value((2, 2), (2, 2)) == 2


def test_centralizers_and_signs():
    assert centralizer_order((1, 1, 1)) == 6
    assert centralizer_order((3,)) == 3
    assert centralizer_order((2, 1)) == 2
    assert class_sign((2, 1)) == -1
    assert class_sign((3,)) == 1


@given(st.integers(1, 7))
def test_class_equation(n):
    assert sum(factorial(n) // centralizer_order(r) for r in enumerate_partitions(n)) == factorial(n)


@given(st.integers(1, 6))
def test_character_orthogonality(n):
    table = character_table(n)
    parts = table.partitions
    for lam in parts:
        for mu in parts:
            inner = sum(
                Fraction(table.chi(lam, rho) * table.chi(mu, rho), table.centralizers[rho])
                for rho in parts
            )
            assert inner == (1 if lam == mu else 0)


def test_dim_irr_matches_identity_column():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert dim_irr(mu) == character_value(mu, (1,) * n)


def test_kronecker_and_tensor():
    # sign (x) sign = triv for S_3
    assert kronecker((1, 1, 1), (1, 1, 1), (3,)) == 1
    assert kronecker((1, 1, 1), (1, 1, 1), (2, 1)) == 0
    decomp = tensor_decompose((2, 1), (2, 1))
    assert decomp == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}


def test_sign_appears_only_in_transpose_tensor():
    for n in range(2, 6):
        sign = (1,) * n
        for mu in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                mult = kronecker(mu, nu, sign)
                assert mult == (1 if nu == transpose(mu) else 0)


def test_fake_degree_examples():
    assert fake_degree((3,)) == LaurentPoly.one(V)
    assert fake_degree((1, 1, 1)) == LaurentPoly.var_power(V, "v", 3)
    f21 = fake_degree((2, 1))
    assert f21 == LaurentPoly.var_power(V, "v", 1) + LaurentPoly.var_power(V, "v", 2)


@given(st.integers(1, 7))
def test_fake_degree_properties(n):
    total = LaurentPoly.zero(V)
    for mu in enumerate_partitions(n):
        f = fake_degree(mu)
        # hook route equals the maj route
        assert f == fake_degree_maj(mu)
        # lowest exponent is n(mu), total evaluation counts tableaux
        assert f.exponent_range("v")[0] == nstat(mu)
        assert f.evaluate({"v": Fraction(1)}) == dim_irr(mu)
        total = total + f * LaurentPoly.const(V, dim_irr(mu))
    # graded dimension of the coinvariant algebra
    assert total == q_factorial_poly(n)


@given(st.integers(1, 7))
def test_fake_degree_transpose_inversion(n):
    big_n = n * (n - 1) // 2
    shift = LaurentPoly.var_power(V, "v", big_n)
    for mu in enumerate_partitions(n):
        assert fake_degree(mu) == shift * fake_degree(transpose(mu)).invert_variables()


def test_character_table_csv():
    text = character_table(2).to_csv()
    assert "irr\\class" in text.splitlines()[0]
    assert len(text.splitlines()) == 3


def test_character_table_bounds():
    with pytest.raises(ValueError):
        character_table(0)
    with pytest.raises(ResourceError):
        character_table(13)
