"""Brute-force linear algebra over C[h + h*] for the diagonal S_n action.

Everything here is computed from first principles: monomials, permutation
substitutions, and exact row reduction. No closed formula from the series
modules is consulted, so these tables can sit on the other side of an
acceptance check.

Conventions. h is the (n-1)-dimensional reflection representation realized
inside C^n as the span of u_i = x_i - x_{i+1}; the dual copy h* carries the
dual basis w_1..w_{n-1}. C[h + h*] is the polynomial ring in u_1..u_{n-1},
w_1..w_{n-1} with deg u_i = (1,0) and deg w_i = (0,1). A permutation acts by
sigma(u_j) = x_{sigma(j)} - x_{sigma(j+1)} rewritten in the u's, and on the
w's by the inverse-transpose matrices. Edeg of the cell (a,b) is a - b.

A^1 is the space of alternating polynomials, A^0 the invariants, and
A^d = (A^1)^d for d >= 2; J^d = C[h + h*] A^d. jbar refers to the quotient
J^d / C[h]^W_+ J^d, whose diagonal sums are certified by the saturation
protocol: a diagonal is trusted only when two successive window enlargements
(+2 on every bound) leave its sum unchanged.

Resource budget. reflection_action and coinvariant_multiplicities run for
2 <= n <= 5. The bigraded operations run for 2 <= n <= 4 with d <= 3 when
n <= 3, and n = 4 only for d <= 1 under a mandatory total-degree cap of 8.
jbar_dims is restricted to n <= 3 because its certification enlarges the
window past the n = 4 budget by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import gcd

from ._linalg import EchelonSpan
from .errors import ResourceError
from .partition_core import Partition, check_partition, enumerate_partitions
from .sn_rep import character_table

MAX_ACTION_N = 5  # reflection_action, coinvariant_multiplicities
MAX_BIGRADED_N = 4
MAX_D = 3
N4_TOTAL_CAP = 8
MAX_WINDOW_BOUND = 24
_ENTRY_CAP = 4_000_000  # stored basis entries before the engine gives up

Matrix = tuple[tuple[int, ...], ...]


def _check_linear_range(n: int):
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > MAX_ACTION_N:
        raise ResourceError(f"oracle bound is n <= {MAX_ACTION_N}, got {n}")


def _check_bigraded_budget(n: int, d: int, window, total):
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    if n > MAX_BIGRADED_N:
        raise ResourceError(f"bigraded oracle bound is n <= {MAX_BIGRADED_N}, got {n}")
    if d > MAX_D:
        raise ResourceError(f"bigraded oracle bound is d <= {MAX_D}, got {d}")
    if n == MAX_BIGRADED_N:
        if d > 1:
            raise ResourceError(f"n = {n} runs are budgeted for d <= 1, got {d}")
        if total is None or total > N4_TOTAL_CAP:
            raise ResourceError(
                f"n = {n} runs need an explicit total-degree cap <= {N4_TOTAL_CAP}"
            )
    amax, bmax = window
    if amax < 0 or bmax < 0:
        raise ValueError(f"window bounds must be nonnegative: {window}")
    if amax > MAX_WINDOW_BOUND or bmax > MAX_WINDOW_BOUND:
        raise ResourceError(f"window bound cap is {MAX_WINDOW_BOUND}, got {window}")
    if total is not None and total < 0:
        raise ValueError(f"total-degree cap must be nonnegative, got {total}")


# ---------------------------------------------------------------------------
# permutations and their matrices on h and h*


def perm_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _perm_inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def class_representative(rho, n: int) -> tuple[int, ...]:
    """A permutation of cycle type rho, cycles laid out consecutively."""
    rho = check_partition(rho)
    if sum(rho) != n:
        raise ValueError(f"cycle type {rho} does not have size {n}")
    perm = list(range(n))
    start = 0
    for r in rho:
        for k in range(r):
            perm[start + k] = start + (k + 1) % r
        start += r
    return tuple(perm)


def _difference_in_u(a: int, b: int, m: int) -> dict[int, int]:
    """x_a - x_b (1-based) as {u-index (0-based): coefficient}."""
    if a == b:
        return {}
    if a < b:
        return {j: 1 for j in range(a - 1, b - 1)}
    return {j: -1 for j in range(b - 1, a - 1)}


def _matrix_on_h(perm: tuple[int, ...], n: int) -> Matrix:
    """Column j holds the u-coordinates of sigma(u_{j+1})."""
    m = n - 1
    cols = []
    for j in range(m):
        col = [0] * m
        for i, c in _difference_in_u(perm[j] + 1, perm[j + 1] + 1, m).items():
            col[i] = c
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))


def _matrix_on_h_dual(perm: tuple[int, ...], n: int) -> Matrix:
    """Inverse-transpose of the h-matrix, i.e. M(sigma^{-1}) transposed."""
    minv = _matrix_on_h(_perm_inverse(perm), n)
    m = n - 1
    return tuple(tuple(minv[j][i] for j in range(m)) for i in range(m))


@dataclass(frozen=True)
class ReflectionAction:
    """Integer matrices of the adjacent transpositions on h and on h*."""

    n: int
    generators: tuple[Matrix, ...]
    dual_generators: tuple[Matrix, ...]

    def matrix(self, perm) -> Matrix:
        return _matrix_on_h(tuple(perm), self.n)

    def dual_matrix(self, perm) -> Matrix:
        return _matrix_on_h_dual(tuple(perm), self.n)


def reflection_action(n: int) -> ReflectionAction:
    _check_linear_range(n)
    gens = []
    duals = []
    for k in range(n - 1):
        perm = list(range(n))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        gens.append(_matrix_on_h(tuple(perm), n))
        duals.append(_matrix_on_h_dual(tuple(perm), n))
    return ReflectionAction(n, tuple(gens), tuple(duals))


# ---------------------------------------------------------------------------
# dict-based polynomials: exponent tuple of length 2(n-1) -> coefficient

Poly = dict


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def _padd_into(acc: Poly, p: Poly, scale=1):
    for e, c in p.items():
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        elif e in acc:
            del acc[e]


@cache
def _compositions(total: int, k: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),) if total == 0 else ()
    if k == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, k - 1):
            out.append((first,) + rest)
    return tuple(out)


@cache
def _x_in_u(i: int, n: int) -> Poly:
    """x_i restricted to the sum-zero hyperplane, as a linear form in the u's."""
    m = n - 1
    out: Poly = {}
    for j in range(m):
        c = Fraction(1 if j + 1 >= i else 0) - Fraction(j + 1, n)
        if c:
            e = tuple(1 if r == j else 0 for r in range(2 * m))
            out[e] = c
    return out


@cache
def _power_sum_poly(n: int, k: int) -> Poly:
    """n^k * sum_i x_i^k in u-coordinates; integer coefficients, bidegree (k,0)."""
    m = n - 1
    acc: Poly = {}
    for i in range(1, n + 1):
        term = {(0,) * (2 * m): Fraction(1)}
        for _ in range(k):
            term = _pmul(term, _x_in_u(i, n))
        _padd_into(acc, term)
    out: Poly = {}
    for e, c in acc.items():
        v = c * n**k
        if v.denominator != 1:
            raise ArithmeticError("power sum failed to clear denominators")
        if v:
            out[e] = int(v)
    return out


class _Engine:
    """Caches the group action and the A^d / J^d cell bases for one n."""

    def __init__(self, n: int):
        self.n = n
        self.m = n - 1
        self.width = 2 * self.m
        self._side: dict = {}  # (perm, side, exps) -> side-local Poly
        self._linear: dict = {}  # (perm, side) -> list of linear Polys
        self._cells: dict = {}
        self._abasis: dict = {}  # (d, a, b) -> list[Poly]
        self._jbasis: dict = {}
        self._entries = 0

    @property
    def group(self) -> list[tuple[tuple[int, ...], int]]:
        if not hasattr(self, "_group"):
            self._group = [
                (p, perm_sign(p)) for p in itertools.permutations(range(self.n))
            ]
        return self._group

    def _linear_images(self, perm, side: int) -> list[Poly]:
        key = (perm, side)
        if key not in self._linear:
            images = []
            if side == 0:
                for j in range(self.m):
                    img: Poly = {}
                    diff = _difference_in_u(perm[j] + 1, perm[j + 1] + 1, self.m)
                    for i, c in diff.items():
                        img[tuple(1 if r == i else 0 for r in range(self.width))] = c
                    images.append(img)
            else:
                dual = _matrix_on_h_dual(perm, self.n)
                for j in range(self.m):
                    img = {}
                    for i in range(self.m):
                        if dual[i][j]:
                            e = tuple(
                                1 if r == self.m + i else 0 for r in range(self.width)
                            )
                            img[e] = dual[i][j]
                    images.append(img)
            self._linear[key] = images
        return self._linear[key]

    def _side_image(self, perm, side: int, exps: tuple[int, ...]) -> Poly:
        """Image of the side-local monomial u^exps (or w^exps) under perm."""
        key = (perm, side, exps)
        if key in self._side:
            return self._side[key]
        j = next((i for i, e in enumerate(exps) if e), None)
        if j is None:
            out = {(0,) * self.width: 1}
        else:
            smaller = tuple(e - 1 if i == j else e for i, e in enumerate(exps))
            out = _pmul(self._side_image(perm, side, smaller), self._linear_images(perm, side)[j])
        self._side[key] = out
        return out

    def apply(self, perm, poly: Poly) -> Poly:
        out: Poly = {}
        for e, c in poly.items():
            xpart = self._side_image(perm, 0, e[: self.m])
            ypart = self._side_image(perm, 1, e[self.m :])
            for ex, cx in xpart.items():
                for ey, cy in ypart.items():
                    key = tuple(p + q for p, q in zip(ex, ey))
                    v = out.get(key, 0) + c * cx * cy
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return out

    def symmetrized(self, poly: Poly, sign: int) -> Poly:
        """Unnormalized projector: sum over sigma of sigma(poly), signed when sign=-1."""
        acc: Poly = {}
        for perm, eps in self.group:
            _padd_into(acc, self.apply(perm, poly), eps if sign < 0 else 1)
        return acc

    def cell(self, a: int, b: int) -> tuple[tuple[tuple[int, ...], ...], dict]:
        key = (a, b)
        if key not in self._cells:
            monos = tuple(
                eu + ew
                for eu in _compositions(a, self.m)
                for ew in _compositions(b, self.m)
            )
            self._cells[key] = (monos, {e: i for i, e in enumerate(monos)})
        return self._cells[key]

    def to_vec(self, poly: Poly, a: int, b: int) -> list[Fraction]:
        monos, index = self.cell(a, b)
        vec = [Fraction(0)] * len(monos)
        for e, c in poly.items():
            vec[index[e]] = Fraction(c)
        return vec

    def _store(self, bucket: dict, key, basis: list[Poly]):
        self._entries += sum(len(p) for p in basis)
        if self._entries > _ENTRY_CAP:
            raise ResourceError(
                f"oracle basis store exceeded {_ENTRY_CAP} entries at cell {key}"
            )
        bucket[key] = basis

    def a_basis(self, d: int, a: int, b: int) -> list[Poly]:
        if a < 0 or b < 0:
            return []
        key = (d, a, b)
        if key in self._abasis:
            return self._abasis[key]
        monos, _ = self.cell(a, b)
        span = EchelonSpan(len(monos))
        basis: list[Poly] = []
        if d <= 1:
            sign = -1 if d == 1 else 1
            for e in monos:
                img = self.symmetrized({e: 1}, sign)
                if img and span.add(self.to_vec(img, a, b)):
                    basis.append(img)
        else:
            for ap in range(a + 1):
                for bp in range(b + 1):
                    lower = self.a_basis(d - 1, ap, bp)
                    ones = self.a_basis(1, a - ap, b - bp)
                    for f in lower:
                        for g in ones:
                            h = _pmul(f, g)
                            if h and span.add(self.to_vec(h, a, b)):
                                basis.append(h)
        self._store(self._abasis, key, basis)
        return basis

    def j_basis(self, d: int, a: int, b: int) -> list[Poly]:
        if a < 0 or b < 0:
            return []
        key = (d, a, b)
        if key in self._jbasis:
            return self._jbasis[key]
        monos, _ = self.cell(a, b)
        span = EchelonSpan(len(monos))
        basis: list[Poly] = []

        def push(p: Poly):
            if p and span.add(self.to_vec(p, a, b)):
                basis.append(p)

        for j in range(self.m):
            for f in self.j_basis(d, a - 1, b):
                push({tuple(e + (1 if r == j else 0) for r, e in enumerate(key_e)): c
                      for key_e, c in f.items()})
        for j in range(self.m):
            for f in self.j_basis(d, a, b - 1):
                push({tuple(e + (1 if r == self.m + j else 0) for r, e in enumerate(key_e)): c
                      for key_e, c in f.items()})
        for f in self.a_basis(d, a, b):
            push(f)
        self._store(self._jbasis, key, basis)
        return basis


@cache
def _engine(n: int) -> _Engine:
    return _Engine(n)


# ---------------------------------------------------------------------------
# bigraded dimension tables


@dataclass(frozen=True)
class BigradedDims:
    """Per-bidegree dimensions over a window, optionally total-degree capped.

    `saturated` is populated only by operations that certify diagonal sums;
    plain dimension tables leave it empty.
    """

    amax: int
    bmax: int
    total: int | None
    table: dict[tuple[int, int], int]
    saturated: dict[int, bool] = field(default_factory=dict)

    def __post_init__(self):
        for cell, value in self.table.items():
            if value < 0:
                raise ValueError(f"negative dimension {value} at {cell}")
        origin = self.table.get((0, 0))
        if origin is not None and origin not in (0, 1):
            raise ValueError(f"dimension at (0,0) must be 0 or 1, got {origin}")

    def dim(self, a: int, b: int) -> int:
        return self.table.get((a, b), 0)

    def diagonal_sums(self) -> dict[int, int]:
        sums: dict[int, int] = {}
        for (a, b), value in self.table.items():
            sums[a - b] = sums.get(a - b, 0) + value
        return sums


def _window_cells(amax: int, bmax: int, total) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in range(amax + 1)
        for b in range(bmax + 1)
        if total is None or a + b <= total
    ]


def alternants_dims(n: int, window, total=None) -> BigradedDims:
    """Per-bidegree dimensions of A^1, the alternating polynomials."""
    _check_bigraded_budget(n, 1, window, total)
    eng = _engine(n)
    table = {(a, b): len(eng.a_basis(1, a, b)) for a, b in _window_cells(*window, total)}
    return BigradedDims(window[0], window[1], total, table)


def ideal_power_dims(n: int, d: int, window, total=None) -> BigradedDims:
    """Per-bidegree dimensions of J^d, computed by degreewise ideal closure.

    On a mid-run budget trip the raised ResourceError carries the cells
    finished so far in its `partial` attribute.
    """
    _check_bigraded_budget(n, d, window, total)
    eng = _engine(n)
    table: dict[tuple[int, int], int] = {}
    cells = sorted(_window_cells(*window, total), key=lambda c: (c[0] + c[1], c[0]))
    for a, b in cells:
        try:
            table[(a, b)] = len(eng.j_basis(d, a, b))
        except ResourceError as exc:
            raise ResourceError(str(exc), partial=dict(table)) from None
    return BigradedDims(window[0], window[1], total, table)


def parity_check(n: int, d: int, window, total=None) -> bool:
    """Does the correct-parity part of J^d equal A^d on every window cell?

    Correct parity means the image of the antisymmetrizer for odd d and of
    the symmetrizer for even d.
    """
    _check_bigraded_budget(n, d, window, total)
    eng = _engine(n)
    sign = -1 if d % 2 else 1
    for a, b in _window_cells(*window, total):
        target = len(eng.a_basis(d, a, b))
        monos, _ = eng.cell(a, b)
        span = EchelonSpan(len(monos))
        for f in eng.j_basis(d, a, b):
            img = eng.symmetrized(f, sign)
            if img:
                span.add(eng.to_vec(img, a, b))
        if span.rank != target:
            return False
    return True


@dataclass(frozen=True)
class JbarResult:
    """Diagonal sums of J^d / C[h]^W_+ J^d with saturation certificates."""

    n: int
    d: int
    quotient: BigradedDims
    sums: dict[int, int]
    saturated: dict[int, bool]

    def saturated_sums(self) -> dict[int, int]:
        return {g: s for g, s in self.sums.items() if self.saturated.get(g)}


def jbar_dims(n: int, d: int, window, total=None) -> JbarResult:
    """Edeg-diagonal dimensions of the quotient of J^d by the invariant ideal.

    Quotient dimensions are intrinsic per cell; the window only selects which
    cells enter each diagonal sum. Certification recomputes the sums over two
    enlarged windows, so the function works on the +4 enlargement throughout.
    Unsaturated diagonals stay in `sums` but are excluded by saturated_sums().
    """
    _check_bigraded_budget(n, d, window, total)
    if n > 3:
        raise ResourceError(
            "jbar certification enlarges the window past the n = 4 budget; "
            "bound is n <= 3"
        )
    eng = _engine(n)
    amax, bmax = window
    big_total = None if total is None else total + 4
    qdim: dict[tuple[int, int], int] = {}
    for a, b in _window_cells(amax + 4, bmax + 4, big_total):
        jdim = len(eng.j_basis(d, a, b))
        if jdim == 0:
            qdim[(a, b)] = 0
            continue
        monos, _ = eng.cell(a, b)
        span = EchelonSpan(len(monos))
        for k in range(2, n + 1):
            pk = _power_sum_poly(n, k)
            for f in eng.j_basis(d, a - k, b):
                span.add(eng.to_vec(_pmul(pk, f), a, b))
        qdim[(a, b)] = jdim - span.rank

    def window_sums(extra: int) -> dict[int, int]:
        t = None if total is None else total + extra
        sums: dict[int, int] = {}
        for a, b in _window_cells(amax + extra, bmax + extra, t):
            sums[a - b] = sums.get(a - b, 0) + qdim[(a, b)]
        return sums

    base, plus2, plus4 = window_sums(0), window_sums(2), window_sums(4)
    diagonals = sorted(base, reverse=True)
    sums = {g: base[g] for g in diagonals}
    saturated = {g: base[g] == plus2.get(g, 0) == plus4.get(g, 0) for g in diagonals}
    table = {c: qdim[c] for c in _window_cells(amax, bmax, total)}
    quotient = BigradedDims(amax, bmax, total, table, dict(saturated))
    return JbarResult(n, d, quotient, sums, saturated)


# ---------------------------------------------------------------------------
# single-graded coinvariant algebra on the h side


class _IntEchelon:
    """Fraction-free row echelon over the integers, rows keyed by pivot."""

    def __init__(self, length: int):
        self.length = length
        self.rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: list[int]) -> tuple[list[int], int]:
        """Eliminate all pivot columns; returns (scale * vec mod rows, scale)."""
        v = list(vec)
        scale = 1
        for piv in sorted(self.rows):
            if v[piv]:
                row = self.rows[piv]
                g = gcd(v[piv], row[piv])
                a, b = row[piv] // g, v[piv] // g
                v = [a * x - b * y for x, y in zip(v, row)]
                scale *= a
        return v, scale

    def add(self, vec: list[int]) -> bool:
        v, _ = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        g = 0
        for x in v:
            g = gcd(g, x)
        if v[piv] < 0:
            g = -g
        self.rows[piv] = [x // g for x in v]
        return True


def coinvariant_multiplicities(n: int) -> dict[int, dict[Partition, int]]:
    """Graded multiplicities of the irreducibles in C[h]/(p_2,...,p_n).

    Computed from per-degree traces of conjugacy-class representatives on the
    quotient, paired against the character table. Degrees 0..n(n-1)/2; zero
    multiplicities are omitted.
    """
    _check_linear_range(n)
    eng = _engine(n)
    m = n - 1
    top = n * (n - 1) // 2
    table = character_table(n)
    reps = {rho: class_representative(rho, n) for rho in table.partitions}
    out: dict[int, dict[Partition, int]] = {}
    for degree in range(top + 1):
        monos, index = eng.cell(degree, 0)
        echelon = _IntEchelon(len(monos))
        for k in range(2, n + 1):
            pk = _power_sum_poly(n, k)
            for e in eng.cell(degree - k, 0)[0] if degree >= k else ():
                prod = _pmul(pk, {e: 1})
                vec = [0] * len(monos)
                for mono, c in prod.items():
                    vec[index[mono]] = c
                echelon.add(vec)
        standard = [i for i in range(len(monos)) if i not in echelon.rows]
        traces: dict[Partition, Fraction] = {}
        for rho, perm in reps.items():
            tr = Fraction(0)
            for i in standard:
                img = eng._side_image(perm, 0, monos[i][:m])
                vec = [0] * len(monos)
                for mono, c in img.items():
                    vec[index[mono]] = c
                reduced, scale = echelon.reduce(vec)
                tr += Fraction(reduced[i], scale)
            traces[rho] = tr
        row: dict[Partition, int] = {}
        for mu in enumerate_partitions(n):
            total = Fraction(0)
            for rho in table.partitions:
                total += Fraction(table.chi(mu, rho) * traces[rho], table.centralizers[rho])
            if total.denominator != 1 or total < 0:
                raise ArithmeticError(
                    f"multiplicity of {mu} in degree {degree} is not integral: {total}"
                )
            if total:
                row[mu] = int(total)
        out[degree] = row
    return out
