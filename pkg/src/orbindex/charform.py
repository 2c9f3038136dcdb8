"""Truncated graded algebra of characteristic forms on fixed strata.

A stratum of real dimension 2r carries degree-2 generators x_1..x_s; a
:class:`GradedClass` is a polynomial in them truncated above total
degree r, with cyclotomic coefficients.  Chern roots are linear forms in
the generators.  Characteristic classes enter through one-variable
power series applied to roots.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Sequence

from sympy import bernoulli

from .cyclotomic import Cyclotomic, as_cyclotomic
from .errors import SingularSeries, UnsupportedOperator, UnsupportedTwist

SERIES_DEGREE = 6
OPERATORS = ("deRham", "dolbeault", "spin")

Monomial = tuple[int, ...]
Root = tuple[Fraction, ...]

_ZERO = Cyclotomic.rational(0)
_ONE = Cyclotomic.rational(1)


def monomials(nsym: int, degree: int) -> list[Monomial]:
    """All exponent vectors with total degree <= ``degree``, graded order."""
    out = [m for m in product(range(degree + 1), repeat=nsym) if sum(m) <= degree]
    return sorted(out, key=lambda m: (sum(m), tuple(-e for e in m)))


class GradedClass:
    __slots__ = ("symbols", "degree", "coeffs")

    def __init__(self, symbols: Sequence[str], degree: int, coeffs: dict[Monomial, object] | None = None):
        self.symbols = tuple(symbols)
        self.degree = degree
        clean = {}
        for m, c in (coeffs or {}).items():
            if sum(m) > degree:
                continue
            c = as_cyclotomic(c)
            if c:
                clean[tuple(m)] = c
        self.coeffs: dict[Monomial, Cyclotomic] = clean

    @classmethod
    def constant(cls, symbols, degree, c=1) -> GradedClass:
        return cls(symbols, degree, {(0,) * len(symbols): c})

    @classmethod
    def linear(cls, symbols, degree, root: Iterable) -> GradedClass:
        coeffs = {}
        for i, c in enumerate(root):
            m = [0] * len(symbols)
            m[i] = 1
            coeffs[tuple(m)] = Fraction(c)
        return cls(symbols, degree, coeffs)

    def _same_space(self, other: GradedClass) -> None:
        if other.symbols != self.symbols or other.degree != self.degree:
            raise ValueError("graded classes live on different strata")

    def _lift(self, other) -> GradedClass:
        if isinstance(other, GradedClass):
            self._same_space(other)
            return other
        return GradedClass.constant(self.symbols, self.degree, other)

    def __add__(self, other) -> GradedClass:
        other = self._lift(other)
        coeffs = dict(self.coeffs)
        for m, c in other.coeffs.items():
            coeffs[m] = coeffs.get(m, _ZERO) + c
        return GradedClass(self.symbols, self.degree, coeffs)

    __radd__ = __add__

    def __neg__(self) -> GradedClass:
        return GradedClass(self.symbols, self.degree, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other) -> GradedClass:
        return self + (-self._lift(other))

    def __mul__(self, other) -> GradedClass:
        if not isinstance(other, GradedClass):
            c = as_cyclotomic(other)
            return GradedClass(self.symbols, self.degree, {m: v * c for m, v in self.coeffs.items()})
        self._same_space(other)
        coeffs: dict[Monomial, Cyclotomic] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if sum(m) <= self.degree:
                    coeffs[m] = coeffs.get(m, _ZERO) + c1 * c2
        return GradedClass(self.symbols, self.degree, coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedClass):
            other = self._lift(other)
        if other.symbols != self.symbols or other.degree != self.degree:
            return False
        return not (self - other).coeffs

    def __hash__(self):
        return hash((self.symbols, self.degree))

    def constant_term(self) -> Cyclotomic:
        return self.coeffs.get((0,) * len(self.symbols), _ZERO)

    def coefficient(self, m: Monomial) -> Cyclotomic:
        return self.coeffs.get(tuple(m), _ZERO)

    def truncate(self, degree: int) -> GradedClass:
        return GradedClass(self.symbols, degree, self.coeffs)

    def apply_series(self, coeffs: Sequence) -> GradedClass:
        """sum_j coeffs[j] * self^j; self must have zero constant term."""
        if self.constant_term():
            raise ValueError("series argument must be nilpotent")
        result = GradedClass.constant(self.symbols, self.degree, coeffs[0] if coeffs else 0)
        power = GradedClass.constant(self.symbols, self.degree, 1)
        for j in range(1, min(len(coeffs), self.degree + 1)):
            power = power * self
            if not power.coeffs:
                break
            result = result + power * coeffs[j]
        return result

    def exp(self) -> GradedClass:
        return self.apply_series([Fraction(1, factorial(j)) for j in range(self.degree + 1)])

    def dump(self) -> str:
        lines = []
        for m in monomials(len(self.symbols), self.degree):
            c = self.coeffs.get(m)
            if c is None:
                continue
            sym = " ".join(
                (s if e == 1 else f"{s}^{e}") for s, e in zip(self.symbols, m) if e
            ) or "1"
            lines.append(f"{c} · {sym}")
        return "\n".join(lines) or "0"

    def __repr__(self) -> str:
        return f"GradedClass({self.symbols}, deg={self.degree}, {self.dump()!r})"


# ---------------------------------------------------------------------------
# one-variable series
# ---------------------------------------------------------------------------


def _reciprocal(series: Sequence, degree: int) -> list[Cyclotomic]:
    a = [as_cyclotomic(c) for c in series] + [_ZERO] * max(0, degree + 1 - len(series))
    if not a[0]:
        raise SingularSeries("constant term of the denominator vanishes")
    inv0 = a[0].inverse()
    b = [inv0]
    for n in range(1, degree + 1):
        acc = _ZERO
        for k in range(1, n + 1):
            if a[k]:
                acc = acc + a[k] * b[n - k]
        b.append(-acc * inv0)
    return b


@lru_cache(maxsize=None)
def ahat_root_coeffs(degree: int = SERIES_DEGREE) -> tuple[Fraction, ...]:
    """Taylor coefficients of (x/2)/sinh(x/2).

    Uses x/sinh(x) = sum_n (2 - 2^(2n)) B_2n x^2n / (2n)!.
    """
    out = []
    for j in range(degree + 1):
        if j % 2:
            out.append(Fraction(0))
            continue
        n = j // 2
        b = Fraction(int(bernoulli(2 * n).p), int(bernoulli(2 * n).q))
        out.append((2 - 2 ** (2 * n)) * b / (factorial(2 * n) * 2 ** (2 * n)))
    return tuple(out)


@lru_cache(maxsize=None)
def td_root_coeffs(degree: int = SERIES_DEGREE) -> tuple[Fraction, ...]:
    """Taylor coefficients of x/(1 - e^{-x}) = sum_n B_n^+ x^n / n!  (B_1^+ = +1/2)."""
    out = []
    for n in range(degree + 1):
        if n == 1:
            b = Fraction(1, 2)
        else:
            bn = bernoulli(n)
            b = Fraction(int(bn.p), int(bn.q))
        out.append(b / factorial(n))
    return tuple(out)


def dolbeault_normal_coeffs(lam, degree: int = SERIES_DEGREE) -> list[Cyclotomic]:
    """1/(1 - lam^{-1} e^{-x})."""
    lam = as_cyclotomic(lam)
    if lam == 1:
        raise SingularSeries("normal eigenvalue 1 in Dolbeault normal factor")
    li = lam.inverse()
    den = [_ONE - li] + [-li * Fraction((-1) ** j, factorial(j)) for j in range(1, degree + 1)]
    return _reciprocal(den, degree)


def spin_normal_coeffs(s, degree: int = SERIES_DEGREE) -> list[Cyclotomic]:
    """1/(s e^{x/2} - s^{-1} e^{-x/2})."""
    s = as_cyclotomic(s)
    si = s.inverse()
    den = [s * Fraction(1, 2**j * factorial(j)) - si * Fraction((-1) ** j, 2**j * factorial(j)) for j in range(degree + 1)]
    if not den[0]:
        raise SingularSeries("spin lift squares to 1 on a normal direction")
    return _reciprocal(den, degree)


def series_eval(kind: str, root: GradedClass, param=None) -> GradedClass:
    """Evaluate one of AhatRoot, TdRoot, DolbeaultNormal(lam), SpinNormal(s) on a root."""
    deg = root.degree
    if kind == "AhatRoot":
        coeffs = ahat_root_coeffs(max(deg, SERIES_DEGREE))
    elif kind == "TdRoot":
        coeffs = td_root_coeffs(max(deg, SERIES_DEGREE))
    elif kind == "DolbeaultNormal":
        coeffs = dolbeault_normal_coeffs(param, deg)
    elif kind == "SpinNormal":
        coeffs = spin_normal_coeffs(param, deg)
    else:
        raise ValueError(f"unknown series {kind!r}")
    return root.apply_series(coeffs)


# ---------------------------------------------------------------------------
# classes on fixed components
# ---------------------------------------------------------------------------


def _space(Y) -> tuple[tuple[str, ...], int]:
    return Y.symbols, Y.dim // 2


def root_class(Y, root: Root) -> GradedClass:
    syms, deg = _space(Y)
    return GradedClass.linear(syms, deg, root)


def equiv_chern(bundle_data, Y) -> GradedClass:
    """sum over Chern roots of mu * e^{root}; ``bundle_data`` is [(root, mu)] at g."""
    syms, deg = _space(Y)
    total = GradedClass(syms, deg)
    for root, mu in bundle_data:
        total = total + root_class(Y, root).exp() * mu
    return total


def uhat_density(operator: str, Y, a: int) -> GradedClass:
    """Untwisted fixed-point density of g = gen^a on the component Y."""
    syms, deg = _space(Y)
    one = GradedClass.constant(syms, deg, 1)
    if operator == "deRham":
        euler = one
        for r in Y.tangent_roots:
            euler = euler * root_class(Y, r)
        return euler
    if operator == "dolbeault":
        out = one
        for r in Y.tangent_roots:
            out = out * series_eval("TdRoot", root_class(Y, r))
        for r, lam in Y.normal_at(a):
            out = out * series_eval("DolbeaultNormal", root_class(Y, r), lam)
        return out
    if operator == "spin":
        lifts = Y.spin_at(a)
        if lifts is None:
            raise UnsupportedOperator(f"component {Y.name} carries no spin lift")
        out = one
        for r in Y.tangent_roots:
            out = out * series_eval("AhatRoot", root_class(Y, r))
        for (r, _lam), s in zip(Y.normal_at(a), lifts):
            out = out * series_eval("SpinNormal", root_class(Y, r), s)
        return out
    raise UnsupportedOperator(operator)


def local_density(operator: str, Y, a: int, twist_data=None) -> GradedClass:
    """Fixed-point index density of gen^a on Y, twisted by ``twist_data``.

    deRham accepts only flat twists (all Chern roots zero).
    """
    base = uhat_density(operator, Y, a)
    if twist_data is None:
        return base
    if operator == "deRham" and any(any(r) for r, _ in twist_data):
        raise UnsupportedTwist("deRham operator only accepts flat (degree-0) twists")
    return base * equiv_chern(twist_data, Y)


def integrate(Y, c: GradedClass) -> Cyclotomic:
    """Pair the top-degree part of c with the fundamental class of Y."""
    if Y.dim == 0:
        return c.constant_term()
    total = _ZERO
    top = Y.dim // 2
    for m, coeff in c.coeffs.items():
        if sum(m) == top:
            total = total + coeff * Y.integrals.get(m, Fraction(0))
    return total
