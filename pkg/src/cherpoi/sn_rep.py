"""Symmetric group character theory: exact character tables, Kronecker
coefficients, and fake degrees by two independent routes.

Irreducibles and conjugacy classes are both labelled by partitions of n;
(n) labels the trivial character and (1^n) the sign character.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .errors import ResourceError
from .exact_poly import LaurentPoly, divexact
from .partition_core import (
    Partition,
    check_partition,
    enumerate_partitions,
    enumerate_syt,
    hook_product,
    hooks,
    nstat,
)

MAX_TABLE_N = 12  # p(12) = 77 classes; far beyond anything the suites need

_V = ("v",)


def _beta_set(lam: Partition, length: int) -> list[int]:
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[j] + (length - 1 - j) for j in range(length)]


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    parts = tuple(b - (ell - 1 - j) for j, b in enumerate(beta))
    return tuple(p for p in parts if p > 0)


@cache
def character_value(lam: Partition, rho: Partition) -> int:
    """chi_lam(rho) by the Murnaghan-Nakayama rule on beta-numbers."""
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    ell = max(len(lam), 1)
    beta = _beta_set(lam, ell)
    present = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in present:
            height = sum(1 for x in beta if b - r < x < b)
            new_beta = [x for x in beta if x != b] + [b - r]
            sub = character_value(_partition_from_beta(new_beta), rest)
            total += (-1) ** height * sub
    return total


def centralizer_order(rho) -> int:
    rho = check_partition(rho)
    z = 1
    for r in set(rho):
        m = rho.count(r)
        z *= r**m * factorial(m)
    return z


def class_sign(rho) -> int:
    rho = check_partition(rho)
    return (-1) ** (sum(rho) - len(rho))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: dict[tuple[Partition, Partition], int]
    centralizers: dict[Partition, int]

    def chi(self, mu, rho) -> int:
        return self.values[(check_partition(mu), check_partition(rho))]

    def to_csv(self) -> str:
        def label(p):
            return "[" + " ".join(map(str, p)) + "]"

        lines = ["irr\\class," + ",".join(label(r) for r in self.partitions)]
        for mu in self.partitions:
            lines.append(label(mu) + "," + ",".join(str(self.values[(mu, r)]) for r in self.partitions))
        return "\n".join(lines) + "\n"


@cache
def character_table(n: int) -> CharacterTable:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_TABLE_N:
        raise ResourceError(f"character table bound is n <= {MAX_TABLE_N}, got {n}")
    parts = enumerate_partitions(n)
    values = {(mu, rho): character_value(mu, rho) for mu in parts for rho in parts}
    zs = {rho: centralizer_order(rho) for rho in parts}
    return CharacterTable(n, parts, values, zs)


def dim_irr(mu) -> int:
    """dim of the irreducible labelled mu, by the hook-length formula."""
    mu = check_partition(mu)
    d = Fraction(factorial(sum(mu)), hook_product(mu))
    if d.denominator != 1:
        raise ArithmeticError(f"hook formula non-integer for {mu}")
    return int(d)


def kronecker(lam, mu, nu) -> int:
    """Multiplicity of chi_nu in chi_lam * chi_mu."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if not (sum(lam) == sum(mu) == sum(nu)):
        raise ValueError(f"size mismatch: {lam}, {mu}, {nu}")
    table = character_table(sum(lam))
    total = Fraction(0)
    for rho in table.partitions:
        total += Fraction(
            table.values[(lam, rho)] * table.values[(mu, rho)] * table.values[(nu, rho)],
            table.centralizers[rho],
        )
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"kronecker inner product not a nonnegative integer: {total}")
    return int(total)


def tensor_decompose(lam, mu) -> dict[Partition, int]:
    """Decomposition of chi_lam * chi_mu as {nu: multiplicity}."""
    lam, mu = check_partition(lam), check_partition(mu)
    n = sum(lam)
    return {nu: k for nu in enumerate_partitions(n) if (k := kronecker(lam, mu, nu))}


def fake_degree(mu) -> LaurentPoly:
    """f_mu(v) = v^n(mu) prod_{i<=n}(1 - v^i) / prod_{cells}(1 - v^h), expanded.

    Always a polynomial with nonnegative integer coefficients; f_mu(1) = dim mu.
    """
    mu = check_partition(mu)
    n = sum(mu)
    one = LaurentPoly.one(_V)
    num = LaurentPoly.monomial(_V, (nstat(mu),))
    for i in range(1, n + 1):
        num = num * (one - LaurentPoly.var_power(_V, "v", i))
    den = one
    for h in hooks(mu):
        den = den * (one - LaurentPoly.var_power(_V, "v", h))
    return divexact(num, den)


def fake_degree_maj(mu) -> LaurentPoly:
    """Independent route: sum of v^maj over standard Young tableaux of shape mu."""
    mu = check_partition(mu)
    terms: dict[tuple[int, ...], Fraction] = {}
    for tab in enumerate_syt(mu):
        e = (tab.maj,)
        terms[e] = terms.get(e, Fraction(0)) + 1
    return LaurentPoly(_V, terms)
