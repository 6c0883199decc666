"""Exact Laurent polynomials and rational functions with factored denominators.

Coefficients are fractions.Fraction throughout; there is no floating point and
no gcd anywhere. Rational functions keep their denominator as a list of
unexpanded factors, so equality is decided by cross-multiplication and series
expansion can orient each factor separately.

Window expansion semantics: a direction choice (ascending or descending per
variable) selects signs for the exponents; after flipping, f is expanded in
the lexicographic Laurent field determined by the variable order (first
variable outermost, so for vars (s, t) this is Q((t))((s)) in the flipped
exponents). Each denominator factor must have lowest term with coefficient
+1 or -1 in that order, which is the usual geometric-series condition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

MAX_EXPONENT = 2**63  # exponents are conceptually signed 64-bit; beyond is a hard error


class ExpansionDirectionError(ValueError):
    """A denominator factor cannot be series-expanded in the chosen direction."""


class ExactDivisionError(ArithmeticError):
    """Polynomial division that was expected to be exact failed."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class LaurentPoly:
    """A Laurent polynomial: map from integer exponent vectors to Fraction."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[tuple[int, ...], Fraction]):
        self.vars = tuple(variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        k = len(self.vars)
        for exps, coeff in terms.items():
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != k:
                raise ValueError(f"exponent vector {exps} does not match vars {self.vars}")
            if any(abs(e) >= MAX_EXPONENT for e in exps):
                raise OverflowError(f"exponent out of 64-bit range: {exps}")
            clean[exps] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "LaurentPoly":
        return cls(tuple(variables), {})

    @classmethod
    def const(cls, variables, c) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): _as_fraction(c)})

    @classmethod
    def one(cls, variables) -> "LaurentPoly":
        return cls.const(variables, 1)

    @classmethod
    def monomial(cls, variables, exps, coeff=1) -> "LaurentPoly":
        return cls(tuple(variables), {tuple(exps): _as_fraction(coeff)})

    @classmethod
    def var_power(cls, variables, name: str, power: int, coeff=1) -> "LaurentPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls.monomial(variables, exps, coeff)

    # -- basic structure -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check_same_vars(self, other: "LaurentPoly"):
        if self.vars != other.vars:
            raise ValueError(f"mixed variable sets: {self.vars} vs {other.vars}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            s = c if acc is None else acc + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return LaurentPoly.zero(self.vars)
            return LaurentPoly(self.vars, {e: cc * c for e, cc in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_vars(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.vars)
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        k = len(self.vars)
        if len(small) <= 4:
            out_t: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in small.items():
                for e2, c2 in big.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    acc = out_t.get(e)
                    s = c1 * c2 if acc is None else acc + c1 * c2
                    if s == 0:
                        out_t.pop(e, None)
                    else:
                        out_t[e] = s
            return LaurentPoly(self.vars, out_t)
        if k == 1:
            out1: dict[int, Fraction] = {}
            for (e1,), c1 in small.items():
                for (e2,), c2 in big.items():
                    e = e1 + e2
                    acc = out1.get(e)
                    s = c1 * c2 if acc is None else acc + c1 * c2
                    if s == 0:
                        out1.pop(e, None)
                    else:
                        out1[e] = s
            return LaurentPoly(self.vars, {(e,): c for e, c in out1.items()})
        # pack exponent vectors into single ints so the inner loop adds ints,
        # not tuples; strides sized so distinct products cannot collide
        spans = []
        for i in range(k):
            xs = [e[i] for e in small]
            ys = [e[i] for e in big]
            spans.append((min(xs) + min(ys), max(xs) + max(ys)))
        strides = [1] * k
        for i in range(k - 2, -1, -1):
            lo, hi = spans[i + 1]
            strides[i] = strides[i + 1] * (hi - lo + 1)
        base = sum(spans[i][0] * strides[i] for i in range(k))

        def pack(e):
            return sum(e[i] * strides[i] for i in range(k))

        small_p = [(pack(e), c) for e, c in small.items()]
        big_p = [(pack(e), c) for e, c in big.items()]
        out: dict[int, Fraction] = {}
        for p1, c1 in small_p:
            for p2, c2 in big_p:
                key = p1 + p2
                acc = out.get(key)
                s = c1 * c2 if acc is None else acc + c1 * c2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        result: dict[tuple[int, ...], Fraction] = {}
        for key, c in out.items():
            rem = key - base
            e = [0] * k
            for i in range(k - 1):
                q, rem = divmod(rem, strides[i])
                e[i] = q + spans[i][0]
            e[k - 1] = rem + spans[k - 1][0]
            result[tuple(e)] = c
        return LaurentPoly(self.vars, result)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, exps: tuple[int, ...]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        exps = tuple(exps)
        return LaurentPoly(self.vars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    # -- substitution and evaluation ------------------------------------

    def substitute_monomials(self, new_vars, mapping: Mapping[str, tuple[int, ...]], signs: Mapping[str, int] | None = None) -> "LaurentPoly":
        """Map each variable to a monomial (exponent vector over new_vars, optional sign)."""
        new_vars = tuple(new_vars)
        images = []
        sgn = []
        for name in self.vars:
            if name not in mapping:
                raise ValueError(f"no image for variable {name}")
            images.append(tuple(mapping[name]))
            sgn.append((signs or {}).get(name, 1))
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            new_e = [0] * len(new_vars)
            coeff = c
            for power, image, s in zip(e, images, sgn):
                for i, ei in enumerate(image):
                    new_e[i] += power * ei
                if s == -1 and power % 2:
                    coeff = -coeff
            key = tuple(new_e)
            acc = out.get(key)
            tot = coeff if acc is None else acc + coeff
            if tot == 0:
                out.pop(key, None)
            else:
                out[key] = tot
        return LaurentPoly(new_vars, out)

    def invert_variables(self) -> "LaurentPoly":
        """Substitute every variable x by x^(-1)."""
        return LaurentPoly(self.vars, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Full evaluation at exact rational points (nonzero where exponents are negative)."""
        vals = [_as_fraction(values[name]) for name in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, power in zip(vals, e):
                if power:
                    if x == 0 and power < 0:
                        raise ZeroDivisionError("negative exponent at zero")
                    term *= x**power
            total += term
        return total

    # -- term access ------------------------------------------------------

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def exponent_range(self, var: int | str) -> tuple[int, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        idx = self.vars.index(var) if isinstance(var, str) else var
        es = [e[idx] for e in self.terms]
        return min(es), max(es)

    def lowest_term_lex(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no lowest term")
        e = min(self.terms)
        return e, self.terms[e]

    def leading_term_lex(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items())

    # -- rendering ---------------------------------------------------------

    def _render(self, mul: str, pow_open: str, pow_close: str) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = []
            for name, power in zip(self.vars, e):
                if power == 0:
                    continue
                if power == 1:
                    mono.append(name)
                else:
                    mono.append(f"{name}^{pow_open}{power}{pow_close}")
            ms = mul.join(mono)
            if not ms:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = ms
            else:
                piece = f"{abs(c)}{mul}{ms}" if mul else f"{abs(c)}{ms}"
            bits.append(("- " if c < 0 else "+ ") + piece)
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self) -> str:
        return self._render("*", "", "")

    def latex(self) -> str:
        return self._render("", "{", "}")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.vars}, {self})"


def divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division a/b of Laurent polynomials, peeling lex-leading terms.

    Raises ExactDivisionError when the division cannot complete. Intended for
    divisions that are exact by construction (fraction-free elimination).
    """
    a._check_same_vars(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.vars)
    lead_b, cb = b.leading_term_lex()
    low_a, _ = a.lowest_term_lex()
    low_b, _ = b.lowest_term_lex()
    # lex support bound for a true quotient: lowest term of a product is the
    # product of lowest terms, so the quotient's lex-lowest is low_a - low_b
    qlow = tuple(x - y for x, y in zip(low_a, low_b))
    quotient: dict[tuple[int, ...], Fraction] = {}
    rem = dict(a.terms)
    budget = 4 * (len(a.terms) + len(b.terms)) + 10_000_000 // max(1, len(b.terms))
    while rem:
        er = max(rem)
        eq = tuple(x - y for x, y in zip(er, lead_b))
        if eq < qlow:
            raise ExactDivisionError("not exactly divisible")
        cq = rem[er] / cb
        quotient[eq] = cq
        for eb, cbb in b.terms.items():
            e = tuple(x + y for x, y in zip(eq, eb))
            s = rem.get(e, Fraction(0)) - cq * cbb
            if s == 0:
                rem.pop(e, None)
            else:
                rem[e] = s
        budget -= 1
        if budget < 0:
            raise ExactDivisionError("division budget exceeded; input likely not divisible")
    return LaurentPoly(a.vars, quotient)


@dataclass(frozen=True)
class CExponent:
    """A formal exponent const + c_coeff*c used as a global degree prefix."""

    const: Fraction
    c_coeff: int

    def __add__(self, other: "CExponent") -> "CExponent":
        return CExponent(self.const + other.const, self.c_coeff + other.c_coeff)

    def specialize(self, c_value) -> Fraction:
        return self.const + _as_fraction(c_value) * self.c_coeff

    def __str__(self) -> str:
        if self.c_coeff == 0:
            return str(self.const)
        cpart = "c" if self.c_coeff == 1 else ("-c" if self.c_coeff == -1 else f"{self.c_coeff}*c")
        if self.const == 0:
            return cpart
        sign = "+" if self.c_coeff > 0 else "-"
        mag = abs(self.c_coeff)
        return f"{self.const} {sign} {'' if mag == 1 else str(mag) + '*'}c"


def _factor_key(p: LaurentPoly):
    return tuple(sorted(p.terms.items()))


class ExactRationalFunction:
    """numerator / product of denominator factors, all exact, never reduced."""

    __slots__ = ("vars", "num", "den")

    def __init__(self, num: LaurentPoly, den: Iterable[LaurentPoly] = ()):
        self.num = num
        self.den = tuple(den)
        self.vars = num.vars
        for f in self.den:
            if f.vars != self.vars:
                raise ValueError(f"mixed variable sets: {f.vars} vs {self.vars}")
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")

    @classmethod
    def from_const(cls, variables, c) -> "ExactRationalFunction":
        return cls(LaurentPoly.const(variables, c))

    def den_product(self) -> LaurentPoly:
        prod = LaurentPoly.one(self.vars)
        for f in self.den:
            prod = prod * f
        return prod

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other) -> "ExactRationalFunction":
        if isinstance(other, ExactRationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return ExactRationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return ExactRationalFunction.from_const(self.vars, other)
        raise TypeError(f"cannot combine with {other!r}")

    def __add__(self, other):
        other = self._coerce(other)
        if self.vars != other.vars:
            raise ValueError(f"mixed variable sets: {self.vars} vs {other.vars}")
        common, mine, theirs = _split_common_factors(self.den, other.den)
        num = self.num * _product(self.vars, theirs) + other.num * _product(self.vars, mine)
        return ExactRationalFunction(num, common + mine + theirs)

    __radd__ = __add__

    def __neg__(self):
        return ExactRationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, ExactRationalFunction):
            return NotImplemented
        return ExactRationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        num = self.num * other.den_product()
        return ExactRationalFunction(num, self.den + (other.num,))

    def reciprocal(self) -> "ExactRationalFunction":
        return ExactRationalFunction.from_const(self.vars, 1) / self

    def substitute_monomials(self, new_vars, mapping) -> "ExactRationalFunction":
        return ExactRationalFunction(
            self.num.substitute_monomials(new_vars, mapping),
            [f.substitute_monomials(new_vars, mapping) for f in self.den],
        )

    def as_poly(self) -> LaurentPoly:
        """Clear the denominator by exact division; error if not a polynomial."""
        return divexact(self.num, self.den_product())

    def __str__(self) -> str:
        num = str(self.num)
        if not self.den:
            return num
        dens = ")(".join(str(f) for f in self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/(({dens}))" if len(self.den) > 1 else f"{num}/({dens})"

    def latex(self) -> str:
        num = self.num.latex()
        if not self.den:
            return num
        dens = "".join(f"({f.latex()})" for f in self.den)
        return rf"\frac{{{num}}}{{{dens}}}"

    def __repr__(self) -> str:
        return f"ExactRationalFunction({self})"


def _product(variables, factors) -> LaurentPoly:
    prod = LaurentPoly.one(variables)
    for f in factors:
        prod = prod * f
    return prod


def _split_common_factors(a: tuple[LaurentPoly, ...], b: tuple[LaurentPoly, ...]):
    """Multiset intersection of factor lists by structural equality (not gcd)."""
    ca = Counter(_factor_key(f) for f in a)
    cb = Counter(_factor_key(f) for f in b)
    common_keys = ca & cb
    lookup = {_factor_key(f): f for f in a}
    common = []
    for key, mult in common_keys.items():
        common.extend([lookup[key]] * mult)
    rest_a, taken = [], Counter(common_keys)
    for f in a:
        k = _factor_key(f)
        if taken[k] > 0:
            taken[k] -= 1
        else:
            rest_a.append(f)
    rest_b, taken = [], Counter(common_keys)
    for f in b:
        k = _factor_key(f)
        if taken[k] > 0:
            taken[k] -= 1
        else:
            rest_b.append(f)
    return tuple(common), tuple(rest_a), tuple(rest_b)


def rf_equal(f: ExactRationalFunction, g: ExactRationalFunction) -> bool:
    """Equality by cross-multiplication after cancelling structurally equal factors."""
    if isinstance(f, LaurentPoly):
        f = ExactRationalFunction(f)
    if isinstance(g, LaurentPoly):
        g = ExactRationalFunction(g)
    if f.vars != g.vars:
        raise ValueError(f"mixed variable sets: {f.vars} vs {g.vars}")
    _, mine, theirs = _split_common_factors(f.den, g.den)
    lhs = f.num * _product(f.vars, theirs)
    rhs = g.num * _product(g.vars, mine)
    return (lhs - rhs).is_zero()


def q_factorial(n: int) -> ExactRationalFunction:
    """[n]_v! as prod_{i=1..n}(1 - v^i) over (1 - v)^n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    v = ("v",)
    one = LaurentPoly.one(v)
    num = LaurentPoly.one(v)
    for i in range(1, n + 1):
        num = num * (one - LaurentPoly.var_power(v, "v", i))
    den = [one - LaurentPoly.var_power(v, "v", 1)] * n
    return ExactRationalFunction(num, den)


def q_factorial_poly(n: int) -> LaurentPoly:
    """[n]_v! in expanded polynomial form."""
    return q_factorial(n).as_poly()


# ---------------------------------------------------------------------------
# Windowed expansion
# ---------------------------------------------------------------------------


def _normalize_direction(variables: tuple[str, ...], direction) -> tuple[int, ...]:
    if isinstance(direction, str):
        direction = {name: direction for name in variables}
    signs = []
    for name in variables:
        d = direction[name]
        if d not in ("ascending", "descending"):
            raise ValueError(f"direction must be ascending or descending, got {d!r}")
        signs.append(1 if d == "ascending" else -1)
    return tuple(signs)


def _normalize_window(variables: tuple[str, ...], window) -> list[tuple[int, int]]:
    if isinstance(window, Mapping):
        boxes = [window[name] for name in variables]
    elif len(variables) == 1 and len(window) == 2 and all(isinstance(x, int) for x in window):
        boxes = [window]
    else:
        boxes = list(window)
    if len(boxes) != len(variables):
        raise ValueError("window does not match variable count")
    out = []
    for lo, hi in boxes:
        if lo > hi:
            raise ValueError(f"empty window [{lo}..{hi}]")
        out.append((int(lo), int(hi)))
    return out


def _flip(poly: LaurentPoly, signs: tuple[int, ...]) -> LaurentPoly:
    return LaurentPoly(poly.vars, {tuple(s * x for s, x in zip(signs, e)): c for e, c in poly.terms.items()})


def expand_window(f, direction, window) -> LaurentPoly:
    """Exact coefficients of f inside an exponent box, per-variable directions.

    After flipping descending variables, expansion happens in the lex Laurent
    field with the first variable outermost. Every denominator factor must
    have a lex-lowest term with coefficient +-1.
    """
    if isinstance(f, LaurentPoly):
        f = ExactRationalFunction(f)
    variables = f.vars
    if len(variables) not in (1, 2):
        raise ValueError("window expansion supports one or two variables")
    signs = _normalize_direction(variables, direction)
    boxes = _normalize_window(variables, window)
    fboxes = []
    for (lo, hi), s in zip(boxes, signs):
        fboxes.append((lo, hi) if s == 1 else (-hi, -lo))

    num = _flip(f.num, signs)
    if num.is_zero():
        return LaurentPoly.zero(variables)

    # peel each factor into sign, monomial shift, and tail g with lex(g) > 0
    shift = [0] * len(variables)
    sign_flip = 1
    tails: list[LaurentPoly] = []
    for factor in f.den:
        fac = _flip(factor, signs)
        low_e, low_c = fac.lowest_term_lex()
        if low_c not in (1, -1):
            raise ExpansionDirectionError(
                f"factor {factor} has lowest-term coefficient {low_c}, not +-1, in the chosen direction"
            )
        if low_c == -1:
            sign_flip = -sign_flip
        for i, e in enumerate(low_e):
            shift[i] -= e
        # g = 1 - fac/(low_c * mono): strictly lex-positive support
        g_terms = {}
        for e, c in fac.terms.items():
            if e == low_e:
                continue
            g_terms[tuple(x - y for x, y in zip(e, low_e))] = -c / low_c
        tails.append(LaurentPoly(variables, g_terms))

    base = num.shift(tuple(shift))
    if sign_flip == -1:
        base = -base

    p_cap = fboxes[0][1]
    two = len(variables) == 2

    if two:
        # largest possible future drop of the second coordinate per unit of the first
        rho = Fraction(0)
        for g in tails:
            for (p, q) in g.terms:
                if p > 0 and q < 0:
                    rho = max(rho, Fraction(-q, p))
        s_hi = fboxes[1][1]

        def keep(e) -> bool:
            p, q = e
            if p > p_cap:
                return False
            return q <= s_hi + rho * (p_cap - p)

    else:

        def keep(e) -> bool:
            return e[0] <= p_cap

    def prune(poly: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(variables, {e: c for e, c in poly.terms.items() if keep(e)})

    result = prune(base)
    if result.is_zero():
        return LaurentPoly.zero(variables)

    for g in tails:
        if g.is_zero():
            continue
        # result *= sum_k g^k, with hereditary pruning; terms once pruned can
        # never re-enter the window because tails are lex-nonnegative in the
        # first coordinate and second-coordinate drops consume first-coordinate
        # budget at rate at most rho
        acc = result
        layer = result
        while True:
            layer = prune(layer * g)
            if layer.is_zero():
                break
            acc = acc + layer
        result = acc

    final = {}
    for e, c in result.terms.items():
        if all(lo <= x <= hi for x, (lo, hi) in zip(e, fboxes)):
            final[tuple(s * x for s, x in zip(signs, e))] = c
    return LaurentPoly(variables, final)


# ---------------------------------------------------------------------------
# JSON serialization (schema "cherpoi-rf-1")
# ---------------------------------------------------------------------------


def poly_terms_to_json(poly: LaurentPoly) -> list:
    return [[str(c), list(e)] for e, c in poly.sorted_terms()]


def poly_terms_from_json(variables, data) -> LaurentPoly:
    terms = {}
    for coeff_str, exps in data:
        e = tuple(int(x) for x in exps)
        terms[e] = terms.get(e, Fraction(0)) + Fraction(coeff_str)
    return LaurentPoly(tuple(variables), terms)


def rf_to_json(f: ExactRationalFunction) -> dict:
    return {
        "schema": "cherpoi-rf-1",
        "vars": list(f.vars),
        "num": poly_terms_to_json(f.num),
        "den": [poly_terms_to_json(fac) for fac in f.den],
    }


def rf_from_json(data: Mapping) -> ExactRationalFunction:
    variables = tuple(data["vars"])
    num = poly_terms_from_json(variables, data["num"])
    den = [poly_terms_from_json(variables, fac) for fac in data.get("den", [])]
    return ExactRationalFunction(num, den)
