"""Integer partitions, cell geometry, dominance, and standard Young tableaux.

Conventions. A partition is a tuple of weakly decreasing positive integers.
Diagrams are French: d(mu) = {(i, j) : 0 <= i, 0 <= j < mu_{i+1}}, with row 0
at the bottom, so "above" means a larger row index. Cell coordinates are
0-based; the statistic n(mu) = sum_i mu_i (i-1) uses 1-based row indices.
The empty partition is rejected everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

Partition = tuple[int, ...]


@dataclass(frozen=True)
class Cell:
    row: int
    col: int
    arm: int
    leg: int

    @property
    def hook(self) -> int:
        return 1 + self.arm + self.leg


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau, stored as a tuple of row tuples (bottom row first)."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def maj(self) -> int:
        """Sum of descents: i counts when i+1 sits in a strictly higher row."""
        row_of = {}
        for i, row in enumerate(self.rows):
            for entry in row:
                row_of[entry] = i
        n = sum(self.shape)
        return sum(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def check_partition(mu) -> Partition:
    """Validate and canonicalize a partition given as any iterable of ints."""
    parts = tuple(int(p) for p in mu)
    if not parts:
        raise ValueError("empty partition is not allowed (need n >= 1)")
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    return parts


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, largest first.

    Reverse-lex refines dominance: lam > mu in dominance implies lam
    appears first.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")

    def gen(remaining: int, maxpart: int, prefix: Partition):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(remaining, maxpart), 0, -1):
            gen(remaining - p, p, prefix + (p,))

    out: list[Partition] = []
    gen(n, n, ())
    return tuple(out)


def size(mu) -> int:
    return sum(check_partition(mu))


def transpose(mu) -> Partition:
    mu = check_partition(mu)
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def cells(mu) -> list[tuple[int, int]]:
    mu = check_partition(mu)
    return [(i, j) for i, p in enumerate(mu) for j in range(p)]


def cell_data(mu, row: int, col: int) -> Cell:
    """Arm, leg, hook of a diagram cell; raises IndexError outside d(mu)."""
    mu = check_partition(mu)
    if not (0 <= row < len(mu) and 0 <= col < mu[row]):
        raise IndexError(f"cell ({row},{col}) outside diagram of {mu}")
    arm = mu[row] - col - 1
    leg = sum(1 for i in range(row + 1, len(mu)) if mu[i] > col)
    return Cell(row, col, arm, leg)


def hooks(mu) -> list[int]:
    """Hook lengths over all cells, row by row."""
    return [cell_data(mu, i, j).hook for i, j in cells(mu)]


def hook_product(mu) -> int:
    prod = 1
    for h in hooks(mu):
        prod *= h
    return prod


def dominance_leq(lam, mu) -> bool:
    """Prefix-sum dominance test; partitions must have equal size."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: {lam} vs {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def nstat(mu) -> int:
    """n(mu) = sum_i mu_i (i-1) with rows indexed from 1."""
    mu = check_partition(mu)
    return sum(i * p for i, p in enumerate(mu))


def num_syt(mu) -> int:
    """Number of standard Young tableaux of shape mu, by the hook-length formula."""
    mu = check_partition(mu)
    count = Fraction(factorial(sum(mu)), hook_product(mu))
    if count.denominator != 1:
        raise ArithmeticError(f"hook-length formula gave a non-integer for {mu}")
    return int(count)


def enumerate_syt(mu) -> list[Tableau]:
    """All standard Young tableaux of shape mu."""
    mu = check_partition(mu)
    n = sum(mu)
    out: list[Tableau] = []

    def grow(k: int, rows: tuple[tuple[int, ...], ...]):
        if k > n:
            out.append(Tableau(mu, rows))
            return
        for i in range(len(mu)):
            if len(rows[i]) < mu[i] and (i == 0 or len(rows[i]) < len(rows[i - 1])):
                grow(k + 1, rows[:i] + (rows[i] + (k,),) + rows[i + 1 :])

    grow(1, ((),) * len(mu))
    return out
