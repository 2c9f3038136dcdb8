"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q(zeta_N) = Q[z]/Phi_N(z), which makes the representation unique for a
fixed N.  Mixed-order arithmetic promotes both operands to Q(zeta_lcm).
Equality compares after promotion; ``reduced()`` finds the smallest field
containing a value and is what serialization uses.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from sympy import Symbol, cyclotomic_poly, divisors, mobius, totient

from .errors import NotRational, OrderCapExceeded

__all__ = [
    "Cyclotomic",
    "cyc_root",
    "cyc_arith",
    "cyc_conjugate",
    "cyc_to_rational",
    "as_cyclotomic",
    "max_order",
]

DEFAULT_MAX_ORDER = 360


def max_order() -> int:
    """Cap on the order of any cyclotomic field (``ORBINDEX_MAX_ORDER``)."""
    raw = os.environ.get("ORBINDEX_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    return int(raw)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    x = Symbol("x")
    coeffs = cyclotomic_poly(n, x, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce_poly(poly: list, n: int) -> tuple:
    """Reduce a polynomial in z modulo Phi_n (monic, so plain long division)."""
    phi = _cyclotomic_poly(n)
    deg = len(phi) - 1
    poly = list(poly)
    nz = [(i, p) for i, p in enumerate(phi[:-1]) if p]
    for top in range(len(poly) - 1, deg - 1, -1):
        c = poly[top]
        if not c:
            continue
        shift = top - deg
        poly[top] = 0
        for i, p in nz:
            poly[shift + i] -= c * p
    if len(poly) < deg:
        poly += [0] * (deg - len(poly))
    return tuple(poly[:deg])


def _check_order(n: int) -> None:
    cap = max_order()
    if n > cap:
        raise OrderCapExceeded(f"cyclotomic order {n} exceeds cap {cap}")


def _solve_exact(columns: list[tuple[Fraction, ...]], target: tuple[Fraction, ...]):
    """Solve sum_j x_j * columns[j] = target over Q; None if inconsistent."""
    rows = len(target)
    ncols = len(columns)
    mat = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    if any(mat[i][ncols] for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = mat[i][ncols]
    return sol


class Cyclotomic:
    """An element of Q(zeta_N), immutable.

    Stored as integer numerators over one positive common denominator.

    >>> cyc_root(4, 1) * cyc_root(4, 1) == -1
    True
    """

    __slots__ = ("_order", "_num", "_den")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        _check_order(order)
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        if len(nums) != _phi(order):
            nums = list(_reduce_poly(nums, order))
        self._set(order, nums, den)

    def _set(self, order: int, nums, den: int) -> None:
        g = den
        for x in nums:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        self._order = order
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _make(cls, order: int, nums, den: int = 1) -> Cyclotomic:
        obj = object.__new__(cls)
        if den < 0:
            nums, den = [-x for x in nums], -den
        obj._set(order, nums, den)
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def root(cls, n: int, k: int = 1) -> Cyclotomic:
        _check_order(n)
        return _root_cached(n, k % n)

    @classmethod
    def rational(cls, q) -> Cyclotomic:
        q = Fraction(q)
        return cls._make(1, [q.numerator], q.denominator)

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, object]) -> Cyclotomic:
        """Build sum c_k zeta_n^k from a mapping k -> c_k (any integer k)."""
        _check_order(n)
        poly = [Fraction(0)] * n
        for k, c in terms.items():
            poly[k % n] += Fraction(c)
        return cls(n, poly)

    # -- basic accessors ----------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    # -- embeddings ---------------------------------------------------------
    def embed(self, m: int) -> Cyclotomic:
        """The same number viewed inside Q(zeta_m); requires order | m."""
        n = self._order
        if m == n:
            return self
        if m % n:
            raise ValueError(f"Q(zeta_{n}) does not embed in Q(zeta_{m})")
        step = m // n
        poly = [0] * m
        for k, c in enumerate(self._num):
            if c:
                poly[k * step] += c
        return Cyclotomic._make(m, _reduce_poly(poly, m), self._den)

    def _promote(self, other) -> tuple[Cyclotomic, Cyclotomic]:
        other = as_cyclotomic(other)
        a, b = self._order, other._order
        if a == b:
            return self, other
        m = _lcm(a, b)
        if m != a and m != b:
            _check_order(m)
        return self.embed(m), other.embed(m)

    def reduced(self) -> Cyclotomic:
        """Representation in the smallest Q(zeta_d) containing this value."""
        if self.is_rational():
            return self if self._order == 1 else Cyclotomic._make(1, [self._num[0]], self._den)
        n = self._order
        target = self.coeffs
        for d in divisors(n):
            d = int(d)
            if d == n:
                return self
            if d == 1 or (d % 4 == 2):
                continue
            sol = _solve_exact(_embedding_columns(d, n), target)
            if sol is not None:
                return Cyclotomic(d, sol)
        return self

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        if a._den == b._den:
            return Cyclotomic._make(a._order, [x + y for x, y in zip(a._num, b._num)], a._den)
        da, db = a._den, b._den
        return Cyclotomic._make(a._order, [x * db + y * da for x, y in zip(a._num, b._num)], da * db)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic._make(self._order, [-c for c in self._num], self._den)

    def __pos__(self) -> Cyclotomic:
        return self

    def __sub__(self, other):
        try:
            other = as_cyclotomic(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_cyclotomic(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic._make(self._order, [c * other for c in self._num], self._den)
        if isinstance(other, Fraction):
            return Cyclotomic._make(self._order, [c * other.numerator for c in self._num], self._den * other.denominator)
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        n = a._order
        den = a._den * b._den
        if n == 1:
            return Cyclotomic._make(1, [a._num[0] * b._num[0]], den)
        an, bn = a._num, b._num
        poly = [0] * (len(an) + len(bn))
        bnz = [(j, y) for j, y in enumerate(bn) if y]
        for i, x in enumerate(an):
            if x:
                for j, y in bnz:
                    poly[i + j] += x * y
        return Cyclotomic._make(n, _reduce_poly(poly, n), den)

    __rmul__ = __mul__

    def galois(self, a: int) -> Cyclotomic:
        """Apply the automorphism zeta_N -> zeta_N^a (gcd(a, N) = 1)."""
        n = self._order
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit mod {n}")
        poly = [0] * n
        for k, c in enumerate(self._num):
            if c:
                poly[(a * k) % n] += c
        return Cyclotomic._make(n, _reduce_poly(poly, n), self._den)

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1 % self._order) if self._order > 2 else self

    def norm(self) -> Fraction:
        prod = self
        n = self._order
        for a in range(2, n):
            if gcd(a, n) == 1:
                prod = prod * self.galois(a)
        return prod.to_rational()

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            num = self._num[0]
            return Cyclotomic._make(self._order, [self._den] + [0] * (len(self._num) - 1), num)
        cached = _INVERSES.get((self._order, self._num, self._den))
        if cached is not None:
            return cached
        small = self.reduced()
        n = small._order
        cof = Cyclotomic.rational(1)
        for a in range(2, n):
            if gcd(a, n) == 1:
                cof = cof * small.galois(a)
        nrm = (small * cof).to_rational()
        out = (cof * (1 / nrm)).embed(_lcm(cof._order, self._order))
        if len(_INVERSES) < 100_000:
            _INVERSES[(self._order, self._num, self._den)] = out
        return out

    def __truediv__(self, other):
        try:
            other = as_cyclotomic(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_cyclotomic(other) * self.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons --------------------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            a, b = self._promote(other)
        except (TypeError, OrderCapExceeded):
            return NotImplemented
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        """Tr_{Q(zeta_N)/Q}(x) / phi(N); independent of the chosen N."""
        n = self._order
        total = Fraction(0)
        for k, c in enumerate(self._num):
            if c:
                m = n // gcd(k, n)
                total += Fraction(c * int(mobius(m)), _phi(m) * self._den)
        return total

    # -- conversions --------------------------------------------------------
    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __complex__(self) -> complex:
        import cmath

        n = self._order
        return sum(
            (c / self._den * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(self._num) if c),
            0j,
        )

    def to_string(self) -> str:
        """Serialize as ``c0 + c1*z^1 + ... (z = zeta_N)`` in reduced form."""
        r = self.reduced()
        terms = []
        for k, c in enumerate(r.coeffs):
            if not c:
                continue
            terms.append(str(c) if k == 0 else f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (z = zeta_{r._order})"

    @classmethod
    def parse(cls, text: str) -> Cyclotomic:
        m = _SERIAL_RE.fullmatch(text.strip())
        if not m:
            raise ValueError(f"not a serialized cyclotomic: {text!r}")
        body, n = m.group(1), int(m.group(2))
        terms: dict[int, Fraction] = {}
        if body.strip() != "0":
            for part in body.split(" + "):
                if "*z^" in part:
                    c, k = part.split("*z^")
                    terms[int(k)] = terms.get(int(k), Fraction(0)) + Fraction(c)
                else:
                    terms[0] = terms.get(0, Fraction(0)) + Fraction(part)
        return cls.from_exponents(n, terms)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Cyclotomic({self.to_string()!r})"


_INVERSES: dict = {}


@lru_cache(maxsize=4096)
def _root_cached(n: int, k: int) -> Cyclotomic:
    poly = [0] * n
    poly[k] = 1
    return Cyclotomic._make(n, _reduce_poly(poly, n), 1)


_SERIAL_RE = re.compile(r"(.*) \(z = zeta_(\d+)\)")


@lru_cache(maxsize=None)
def _embedding_columns(d: int, n: int) -> list[tuple[Fraction, ...]]:
    return [Cyclotomic.root(d, j).embed(n).coeffs for j in range(_phi(d))]


def as_cyclotomic(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
        return Cyclotomic.rational(Fraction(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as a cyclotomic number")


def cyc_root(n: int, k: int) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    return Cyclotomic.root(n, k)


def cyc_arith(a, b, op: str) -> Cyclotomic:
    a, b = as_cyclotomic(a), as_cyclotomic(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def cyc_conjugate(a) -> Cyclotomic:
    return as_cyclotomic(a).conjugate()


def cyc_to_rational(a) -> Fraction:
    return as_cyclotomic(a).to_rational()
