"""Finite groups, orientation-preserving wallpaper groups and class functions.

Two group kinds share one query surface (``finite_order_classes``,
``cyclic_subgroup_classes``, ``centralizer``, ``weyl_orbits``,
``cyclic_class_of``):

* :class:`FiniteGroup` -- elements are indices into a Cayley table.
* :class:`WallpaperGroup` -- elements are pairs (R^k, t) with R the
  generator of the cyclic point group acting by an integer matrix on the
  lattice Z^2 and t an exact translation in lattice coordinates.

Generators of a cyclic subgroup C = <g> are addressed by their exponent
a in (Z/|C|)^x, i.e. g^a.  The Weyl group W_G(C) acts on gen(C) through a
subgroup of these units, so its orbits are cosets.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Sequence

import numpy as np

from .cyclotomic import Cyclotomic, as_cyclotomic
from .errors import InvalidGroup, InvalidRepresentation

MAX_GROUP_ORDER = 10_000


def units(d: int) -> list[int]:
    """Exponents a in 1..d with gcd(a, d) = 1 (just [1] for d = 1)."""
    if d == 1:
        return [1]
    return [a for a in range(1, d) if gcd(a, d) == 1]


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Hashable
    size: int | None  # None for infinite classes (wallpaper groups)
    order: int


@dataclass(frozen=True)
class CyclicClass:
    """Conjugacy class of a finite cyclic subgroup C = <generator>.

    ``gens`` maps each unit exponent a to the element generator^a.
    ``weyl_exponents`` is the image of W_G(C) in (Z/|C|)^x.
    ``centralizer`` is None when Z_G(C) is all of an infinite G.
    """

    index: int
    generator: Hashable
    order: int
    gens: tuple[tuple[int, Hashable], ...]
    centralizer: tuple[Hashable, ...] | None
    weyl_exponents: tuple[int, ...]
    label: str = ""

    @property
    def gen_exponents(self) -> list[int]:
        return [a for a, _ in self.gens]

    def gen(self, a: int) -> Hashable:
        return dict(self.gens)[a % self.order if self.order > 1 else 1]

    @property
    def centralizer_order(self) -> int | None:
        return None if self.centralizer is None else len(self.centralizer)

    def weyl_orbit_list(self) -> list[tuple[int, tuple[int, ...]]]:
        """W-orbits on gen(C) as (representative exponent, orbit)."""
        seen: set[int] = set()
        orbits = []
        for a in self.gen_exponents:
            if a in seen:
                continue
            orbit = tuple(sorted({(a * w) % self.order if self.order > 1 else 1 for w in self.weyl_exponents}))
            seen.update(orbit)
            orbits.append((a, orbit))
        return orbits


# ---------------------------------------------------------------------------
# finite groups
# ---------------------------------------------------------------------------


class FiniteGroup:
    """A finite group stored as a Cayley table over element indices 0..n-1."""

    kind = "finite"

    def __init__(
        self,
        table,
        labels: Sequence[str] | None = None,
        generators: Sequence[int] | None = None,
        name: str = "G",
        verify: bool = True,
    ):
        table = np.asarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.ndim != 2 or table.shape != (n, n):
            raise InvalidGroup("multiplication table must be square")
        if n > MAX_GROUP_ORDER:
            raise InvalidGroup(f"group order {n} exceeds cap {MAX_GROUP_ORDER}")
        self.table = table
        self.n = n
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if verify:
            self._verify()
        self.identity = self._find_identity()
        self.inverses = np.argmax(self.table == self.identity, axis=1)
        self.generators = list(generators) if generators is not None else self._greedy_generators()
        self._words = self._build_words()
        self._classes: list[ConjugacyClass] | None = None
        self._cyclic: list[CyclicClass] | None = None

    # -- construction -------------------------------------------------------
    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        idx = np.arange(n)
        table = (idx[:, None] + idx[None, :]) % n
        labels = ["e"] + [f"g^{j}" for j in range(1, n)]
        return cls(table, labels=labels, generators=[1 % n] if n > 1 else [], name=f"Z/{n}", verify=False)

    @classmethod
    def from_permutations(cls, gens: Iterable[Sequence[int]], name: str = "G") -> FiniteGroup:
        gens = [tuple(int(x) for x in g) for g in gens]
        if not gens:
            raise InvalidGroup("no generators")
        deg = len(gens[0])
        for g in gens:
            if len(g) != deg or sorted(g) != list(range(deg)):
                raise InvalidGroup(f"not a permutation of 0..{deg - 1}: {g}")
        ident = tuple(range(deg))
        elements = [ident]
        index = {ident: 0}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = tuple(g[i] for i in x)  # g after x
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    queue.append(y)
                    if len(elements) > MAX_GROUP_ORDER:
                        raise InvalidGroup(f"group order exceeds cap {MAX_GROUP_ORDER}")
        n = len(elements)
        perm = np.array(elements, dtype=np.int64)
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            # (a * b)(i) = a(b(i))
            composed = perm[a][perm]
            table[a] = [index[tuple(row)] for row in composed]
        labels = [_cycle_notation(p) for p in elements]
        group = cls(table, labels=labels, generators=[index[g] for g in gens], name=name, verify=False)
        group.permutations = elements
        return group

    @classmethod
    def from_text(cls, text: str, name: str = "G") -> FiniteGroup:
        """Parse generator permutations, one per line (images of 0..d-1)."""
        gens = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                gens.append([int(x) for x in line.replace(",", " ").split()])
        return cls.from_permutations(gens, name=name)

    def _verify(self) -> None:
        t = self.table
        n = self.n
        if t.min() < 0 or t.max() >= n:
            raise InvalidGroup("table entries out of range")
        rng = np.arange(n)
        for row in t:
            if not np.array_equal(np.sort(row), rng):
                raise InvalidGroup("table rows are not permutations (no cancellation)")
        for col in t.T:
            if not np.array_equal(np.sort(col), rng):
                raise InvalidGroup("table columns are not permutations")
        ident = self._find_identity()
        if ident is None:
            raise InvalidGroup("no identity element")
        # Light's associativity test against a generating set
        self.identity = ident
        for s in self._greedy_generators():
            left = t[t[:, s], :]  # (x s) y
            right = t[:, t[s, :]]  # x (s y)
            if not np.array_equal(left, right):
                raise InvalidGroup("multiplication is not associative")

    def _find_identity(self):
        rng = np.arange(self.n)
        for e in range(self.n):
            if np.array_equal(self.table[e], rng) and np.array_equal(self.table[:, e], rng):
                return e
        return None

    def _greedy_generators(self) -> list[int]:
        gens: list[int] = []
        span = {self.identity}
        for x in range(self.n):
            if x in span:
                continue
            gens.append(x)
            span = self._closure(gens)
            if len(span) == self.n:
                break
        return gens

    def _closure(self, gens: Sequence[int]) -> set[int]:
        span = {int(self.identity)}
        queue = deque(span)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.table[g, x])
                if y not in span:
                    span.add(y)
                    queue.append(y)
        return span

    def _build_words(self) -> dict[int, tuple[int, ...]]:
        """Shortest generator word for each element (left multiplication)."""
        words = {int(self.identity): ()}
        queue = deque([int(self.identity)])
        while queue:
            x = queue.popleft()
            for s in self.generators:
                y = int(self.table[s, x])
                if y not in words:
                    words[y] = (s,) + words[x]
                    queue.append(y)
        if len(words) != self.n:
            raise InvalidGroup("declared generators do not generate the group")
        return words

    # -- element arithmetic -------------------------------------------------
    def __len__(self) -> int:
        return self.n

    @property
    def elements(self) -> range:
        return range(self.n)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = int(self.identity)
        for _ in range(k % self.element_order(a)):
            result = self.mul(result, a)
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def conjugate(self, x: int, by: int) -> int:
        """by * x * by^-1."""
        return self.mul(self.mul(by, x), self.inv(by))

    def word(self, a: int) -> tuple[int, ...]:
        return self._words[a]

    def label(self, a: int) -> str:
        return self.labels[a]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    # -- conjugacy ----------------------------------------------------------
    def conjugacy_class(self, x: int) -> frozenset[int]:
        return frozenset(int(self.conjugate(x, g)) for g in range(self.n))

    def finite_order_classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            seen: set[int] = set()
            classes = []
            for x in range(self.n):
                if x in seen:
                    continue
                cls_ = self.conjugacy_class(x)
                seen |= cls_
                classes.append(ConjugacyClass(x, len(cls_), self.element_order(x)))
            classes.sort(key=lambda c: (c.order, c.representative))
            self._classes = classes
        return self._classes

    conjugacy_classes = finite_order_classes

    def cyclic_subgroup(self, x: int) -> frozenset[int]:
        return frozenset(self.power(x, k) for k in range(self.element_order(x)))

    def centralizer(self, x: int) -> tuple[int, ...]:
        return tuple(g for g in range(self.n) if self.mul(g, x) == self.mul(x, g))

    def normalizer(self, subset: Iterable[int]) -> tuple[int, ...]:
        subset = frozenset(subset)
        return tuple(g for g in range(self.n) if frozenset(self.conjugate(h, g) for h in subset) == subset)

    def cyclic_subgroup_classes(self) -> list[CyclicClass]:
        if self._cyclic is not None:
            return self._cyclic
        seen: set[frozenset[int]] = set()
        reps: list[int] = []
        for x in sorted(range(self.n), key=lambda y: (self.element_order(y), y)):
            sub = self.cyclic_subgroup(x)
            if sub in seen:
                continue
            for g in range(self.n):
                seen.add(frozenset(self.conjugate(h, g) for h in sub))
            reps.append(x)
        out = []
        for i, x in enumerate(reps):
            d = self.element_order(x)
            gens = tuple((a, self.power(x, a)) for a in units(d))
            sub = self.cyclic_subgroup(x)
            weyl = sorted(
                {a for a, ga in gens for g in self.normalizer(sub) if self.conjugate(x, g) == ga}
            )
            out.append(
                CyclicClass(
                    index=i,
                    generator=x,
                    order=d,
                    gens=gens,
                    centralizer=self.centralizer(x),
                    weyl_exponents=tuple(weyl),
                    label=f"<{self.label(x)}>",
                )
            )
        self._cyclic = out
        return out

    def weyl_orbits(self, c: CyclicClass) -> list[tuple[int, tuple[int, ...]]]:
        return c.weyl_orbit_list()

    def cyclic_class_of(self, g: int) -> tuple[CyclicClass, int]:
        """The class (C) containing <g> and the exponent a with h g h^-1 = gen^a."""
        d = self.element_order(g)
        for c in self.cyclic_subgroup_classes():
            if c.order != d:
                continue
            lookup = {x: a for a, x in c.gens}
            for h in range(self.n):
                y = self.conjugate(g, h)
                if y in lookup:
                    return c, lookup[y]
        raise InvalidGroup(f"element {g} not matched to a cyclic subgroup class")

    def describe(self) -> str:
        return f"{self.name} (order {self.n})"


def _cycle_notation(perm: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


# ---------------------------------------------------------------------------
# lattices and wallpaper groups
# ---------------------------------------------------------------------------

Vec = tuple[Fraction, Fraction]
Mat = tuple[tuple[int, int], tuple[int, int]]

# generator of the point group in lattice coordinates, counterclockwise by 2pi/n
_POINT_GENERATORS: dict[int, tuple[Mat, str]] = {
    1: (((1, 0), (0, 1)), "square"),
    2: (((-1, 0), (0, -1)), "square"),
    3: (((-1, -1), (1, 0)), "hexagonal"),
    4: (((0, -1), (1, 0)), "square"),
    6: (((0, -1), (1, 1)), "hexagonal"),
}

WALLPAPER_NAMES = {"p1": 1, "p2": 2, "p3": 3, "p4": 4, "p6": 6}


def lattice_basis(kind: str) -> tuple[Cyclotomic, Cyclotomic]:
    """Lattice basis vectors as complex numbers (exact)."""
    if kind == "square":
        return (Cyclotomic.rational(1), Cyclotomic.root(4, 1))
    if kind == "hexagonal":
        return (Cyclotomic.rational(1), Cyclotomic.root(6, 1))
    raise ValueError(kind)


def mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )  # type: ignore[return-value]


def mat_pow(a: Mat, k: int, n: int) -> Mat:
    out: Mat = ((1, 0), (0, 1))
    for _ in range(k % n):
        out = mat_mul(out, a)
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return (a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1])


def frac_mod1(v: Vec) -> Vec:
    return (v[0] - (v[0].numerator // v[0].denominator), v[1] - (v[1].numerator // v[1].denominator))


def _solve2(m: Mat, v: Vec) -> Vec:
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det == 0:
        raise ValueError("singular")
    return (
        Fraction(m[1][1] * v[0] - m[0][1] * v[1], det),
        Fraction(-m[1][0] * v[0] + m[0][0] * v[1], det),
    )


def torus_fixed_points(a: Mat) -> list[Vec]:
    """Solutions x in [0,1)^2 of (1 - A)x in Z^2, i.e. fixed points on R^2/Z^2."""
    m: Mat = ((1 - a[0][0], -a[0][1]), (-a[1][0], 1 - a[1][1]))
    det = abs(m[0][0] * m[1][1] - m[0][1] * m[1][0])
    if det == 0:
        raise ValueError("A has eigenvalue 1; fixed set is not discrete")
    pts = set()
    for v in itertools.product(range(det), repeat=2):
        pts.add(frac_mod1(_solve2(m, (Fraction(v[0]), Fraction(v[1])))))
    return sorted(pts)


@dataclass(frozen=True, order=True)
class WallpaperElement:
    k: int
    t: Vec


class WallpaperGroup:
    """Orientation-preserving wallpaper group Z^2 x| Z/n (symmorphic)."""

    kind = "wallpaper"

    def __init__(self, name: str):
        if name not in WALLPAPER_NAMES:
            raise InvalidGroup(f"unknown or unsupported wallpaper group {name!r}")
        self.name = name
        self.n = WALLPAPER_NAMES[name]
        self.R, self.lattice_kind = _POINT_GENERATORS[self.n]
        self.basis = lattice_basis(self.lattice_kind)
        self.point_group = FiniteGroup.cyclic(self.n)
        self._verify_lattice()
        self.identity = WallpaperElement(0, (Fraction(0), Fraction(0)))
        self._cyclic: list[CyclicClass] | None = None

    def _verify_lattice(self) -> None:
        # zeta_n * b_j must equal sum_i R[i][j] b_i
        rot = Cyclotomic.root(self.n, 1)
        for j in range(2):
            image = sum((self.R[i][j] * self.basis[i] for i in range(2)), Cyclotomic.rational(0))
            if image != rot * self.basis[j]:
                raise InvalidGroup(f"{self.name}: point group does not preserve the lattice")

    # -- element arithmetic -------------------------------------------------
    def matrix(self, k: int) -> Mat:
        return mat_pow(self.R, k, self.n)

    def element(self, k: int, t=(0, 0)) -> WallpaperElement:
        return WallpaperElement(k % self.n, (Fraction(t[0]), Fraction(t[1])))

    def mul(self, a: WallpaperElement, b: WallpaperElement) -> WallpaperElement:
        at = mat_vec(self.matrix(a.k), b.t)
        return self.element(a.k + b.k, (at[0] + a.t[0], at[1] + a.t[1]))

    def inv(self, a: WallpaperElement) -> WallpaperElement:
        ai = self.matrix(-a.k)
        t = mat_vec(ai, a.t)
        return self.element(-a.k, (-t[0], -t[1]))

    def conjugate(self, x: WallpaperElement, by: WallpaperElement) -> WallpaperElement:
        return self.mul(self.mul(by, x), self.inv(by))

    def power(self, a: WallpaperElement, k: int) -> WallpaperElement:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def is_finite_order(self, a: WallpaperElement) -> bool:
        return a.k != 0 or a.t == (0, 0)

    def element_order(self, a: WallpaperElement) -> int:
        if a.k == 0:
            if a.t != (0, 0):
                raise ValueError("translations have infinite order")
            return 1
        return self.n // gcd(a.k, self.n)

    def center(self, a: WallpaperElement) -> Vec:
        """Rotation center c, the unique solution of (1 - A)c = t."""
        if a.k == 0:
            raise ValueError("identity/translation has no rotation center")
        A = self.matrix(a.k)
        m: Mat = ((1 - A[0][0], -A[0][1]), (-A[1][0], 1 - A[1][1]))
        return _solve2(m, a.t)

    def rotation_about(self, k: int, c: Vec) -> WallpaperElement:
        A = self.matrix(k)
        ac = mat_vec(A, c)
        return self.element(k, (c[0] - ac[0], c[1] - ac[1]))

    def contains(self, a: WallpaperElement) -> bool:
        return a.t[0].denominator == 1 and a.t[1].denominator == 1

    def point_image(self, a: WallpaperElement) -> int:
        return a.k

    def label(self, a: WallpaperElement) -> str:
        if a.k == 0:
            return "e" if a.t == (0, 0) else f"T{tuple(str(x) for x in a.t)}"
        c = self.center(a)
        return f"rot({a.k}/{self.n}) @ ({c[0]}, {c[1]})"

    # -- rotation centers ---------------------------------------------------
    def _orbit_key(self, c: Vec) -> Vec:
        """Canonical representative of the G-orbit of a point (min over P mod Z^2)."""
        return min(frac_mod1(mat_vec(self.matrix(j), c)) for j in range(self.n))

    def stabilizer_order(self, c: Vec) -> int:
        c = frac_mod1(c)
        return sum(1 for j in range(self.n) if frac_mod1(mat_vec(self.matrix(j), c)) == c)

    def special_points(self) -> list[tuple[Vec, int]]:
        """Orbit representatives of points with nontrivial stabilizer, with stabilizer order."""
        pts = set()
        for k in range(1, self.n):
            for c in torus_fixed_points(self.matrix(k)):
                pts.add(self._orbit_key(c))
        return sorted((c, self.stabilizer_order(c)) for c in pts)

    def rotation_signature(self) -> tuple[int, ...]:
        return tuple(sorted((s for _, s in self.special_points()), reverse=True))

    def finite_order_classes(self) -> list[ConjugacyClass]:
        classes = [ConjugacyClass(self.identity, 1, 1)]
        for k in range(1, self.n):
            centers = sorted({self._orbit_key(c) for c in torus_fixed_points(self.matrix(k))})
            for c in centers:
                g = self.rotation_about(k, c)
                classes.append(ConjugacyClass(g, None, self.element_order(g)))
        classes.sort(key=lambda c: (c.order, c.representative))
        return classes

    def conjugator(self, a: WallpaperElement, b: WallpaperElement) -> WallpaperElement | None:
        """Some h in G with h a h^-1 = b, searched over P with lattice translations."""
        if a.k != b.k:
            return None
        if a.k == 0:
            return self.identity if a == b else None
        ca, cb = self.center(a), self.center(b)
        for j in range(self.n):
            s = mat_vec(self.matrix(j), ca)
            shift = (cb[0] - s[0], cb[1] - s[1])
            if shift[0].denominator == 1 and shift[1].denominator == 1:
                h = self.element(j, shift)
                assert self.conjugate(a, h) == b
                return h
        return None

    def are_conjugate(self, a: WallpaperElement, b: WallpaperElement) -> bool:
        return self.conjugator(a, b) is not None

    def centralizer(self, a: WallpaperElement) -> tuple[WallpaperElement, ...] | None:
        """Finite stabilizer of the rotation center; None means all of G."""
        if a.k == 0:
            if a.t != (0, 0):
                raise ValueError("translations are not of finite order")
            return None
        c = self.center(a)
        out = []
        for j in range(self.n):
            h = self.rotation_about(j, c)
            if self.contains(h):
                out.append(h)
        return tuple(out)

    def cyclic_subgroup_classes(self) -> list[CyclicClass]:
        if self._cyclic is not None:
            return self._cyclic
        out = [
            CyclicClass(0, self.identity, 1, ((1, self.identity),), None, (1,), label="<e>"),
        ]
        entries = []
        for c, s in self.special_points():
            for d in range(2, s + 1):
                if s % d == 0:
                    entries.append((d, c))
        for d, c in sorted(entries):
            g = self.rotation_about(self.n // d, c)
            gens = tuple((a, self.power(g, a)) for a in units(d))
            out.append(
                CyclicClass(
                    index=len(out),
                    generator=g,
                    order=d,
                    gens=gens,
                    centralizer=self.centralizer(g),
                    weyl_exponents=(1,),  # N_G(C) fixes the center; it is abelian
                    label=f"Z/{d} @ ({c[0]}, {c[1]})",
                )
            )
        self._cyclic = out
        return out

    def weyl_orbits(self, c: CyclicClass) -> list[tuple[int, tuple[int, ...]]]:
        return c.weyl_orbit_list()

    def cyclic_class_of(self, g: WallpaperElement) -> tuple[CyclicClass, int]:
        for c in self.cyclic_subgroup_classes():
            if c.order != self.element_order(g):
                continue
            for a, x in c.gens:
                if self.are_conjugate(g, x):
                    return c, a
        raise InvalidGroup(f"{g} matches no cyclic subgroup class")

    def describe(self) -> str:
        return f"wallpaper {self.name} (point group Z/{self.n}, {self.lattice_kind} lattice)"


GroupModel = FiniteGroup | WallpaperGroup


# ---------------------------------------------------------------------------
# representations and class functions
# ---------------------------------------------------------------------------

Matrix = tuple[tuple[Cyclotomic, ...], ...]


def _mmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(m)), Cyclotomic.rational(0)) for j in range(p))
        for i in range(n)
    )


def _identity_matrix(d: int) -> Matrix:
    return tuple(tuple(Cyclotomic.rational(int(i == j)) for j in range(d)) for i in range(d))


class Representation:
    """A finite-dimensional representation given by matrices on generators.

    For a wallpaper group the matrices describe a representation of the
    point group; translations act trivially.
    """

    def __init__(self, group: GroupModel, images: dict[int, Sequence[Sequence]] | Sequence, name: str = "rho"):
        self.group = group
        self.name = name
        finite = group.point_group if isinstance(group, WallpaperGroup) else group
        self._finite = finite
        if not isinstance(images, dict):
            images = dict(zip(finite.generators, images))
        mats = {
            s: tuple(tuple(as_cyclotomic(x) for x in row) for row in m) for s, m in images.items()
        }
        if set(mats) != set(finite.generators):
            raise InvalidRepresentation("matrices must be given for exactly the group generators")
        dims = {len(m) for m in mats.values()} | {len(r) for m in mats.values() for r in m}
        if len(dims) > 1:
            raise InvalidRepresentation("generator matrices must be square of one size")
        self.dim = dims.pop() if dims else 1
        self._images = self._extend(mats)

    def _extend(self, mats) -> dict[int, Matrix]:
        g = self._finite
        images = {int(g.identity): _identity_matrix(self.dim)}
        for x in sorted(range(g.n), key=lambda y: len(g.word(y))):
            w = g.word(x)
            if not w:
                continue
            images[x] = _mmul(mats[w[0]], images[g.mul(g.inv(w[0]), x)])
        for s in g.generators:
            for x in range(g.n):
                if _mmul(mats[s], images[x]) != images[g.mul(s, x)]:
                    raise InvalidRepresentation(
                        f"{self.name}: matrices violate the group relations"
                    )
        return images

    def matrix(self, x) -> Matrix:
        if isinstance(self.group, WallpaperGroup):
            x = self.group.point_image(x)
        return self._images[x]

    def character(self, x) -> Cyclotomic:
        m = self.matrix(x)
        return sum((m[i][i] for i in range(self.dim)), Cyclotomic.rational(0))

    # -- standard representations ------------------------------------------
    @classmethod
    def trivial(cls, group: GroupModel) -> Representation:
        finite = group.point_group if isinstance(group, WallpaperGroup) else group
        return cls(group, {s: [[1]] for s in finite.generators}, name="trivial")

    @classmethod
    def cyclic_character(cls, group: GroupModel, m: int) -> Representation:
        """Weight-m character g^j -> zeta_n^(m j) of a cyclic (point) group."""
        finite = group.point_group if isinstance(group, WallpaperGroup) else group
        n = finite.n
        if len(finite.generators) != 1 or finite.element_order(finite.generators[0]) != n:
            if n != 1:
                raise InvalidRepresentation("weight characters need a cyclic group with one generator")
        gens = finite.generators
        return cls(group, {s: [[Cyclotomic.root(n, m)]] for s in gens}, name=f"chi:{m % n if n else 0}")

    @classmethod
    def regular(cls, group: GroupModel) -> Representation:
        finite = group.point_group if isinstance(group, WallpaperGroup) else group
        n = finite.n
        mats = {}
        for s in finite.generators:
            m = [[0] * n for _ in range(n)]
            for x in range(n):
                m[finite.mul(s, x)][x] = 1
            mats[s] = m
        return cls(group, mats, name="regular")


def irreducible_representations(group: GroupModel) -> list[Representation]:
    """All irreducible representations of an abelian cyclic (point) group."""
    finite = group.point_group if isinstance(group, WallpaperGroup) else group
    if not finite.is_abelian() or len(finite.generators) > 1:
        raise InvalidRepresentation("irreducibles are enumerated only for cyclic groups")
    return [Representation.cyclic_character(group, m) for m in range(finite.n)]


def character_value(rho: Representation, g) -> Cyclotomic:
    return rho.character(g)


@dataclass(frozen=True)
class ClassFunction:
    """Cyclotomic-valued function on a finite group, constant on conjugacy classes."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != self.group.n:
            raise ValueError("one value per group element required")
        object.__setattr__(self, "values", tuple(as_cyclotomic(v) for v in self.values))
        for c in self.group.finite_order_classes():
            v = self.values[c.representative]
            for x in self.group.conjugacy_class(c.representative):
                if self.values[x] != v:
                    raise ValueError("class function is not constant on conjugacy classes")

    @classmethod
    def from_callable(cls, group: FiniteGroup, f) -> ClassFunction:
        return cls(group, tuple(f(x) for x in group.elements))

    @classmethod
    def from_character(cls, rho: Representation) -> ClassFunction:
        return cls.from_callable(rho._finite, rho.character)

    def __call__(self, x: int) -> Cyclotomic:
        return self.values[x]

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        if other.group is not self.group:
            raise ValueError("class functions on different groups")
        return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if other.group is not self.group:
            raise ValueError("class functions on different groups")
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))


def epsilon_trivial(group: FiniteGroup, f: ClassFunction) -> Cyclotomic:
    """Multiplicity of the trivial representation: (1/|H|) sum_h f(h)."""
    total = sum(f.values, Cyclotomic.rational(0))
    return total * Fraction(1, group.n)


def extend_by_zero(c: CyclicClass | int, f) -> ClassFunction:
    """Class function on C = Z/d equal to f on generators and 0 elsewhere.

    ``f`` maps a unit exponent a to the value at gen^a (dict or callable).
    The result lives on ``FiniteGroup.cyclic(d)`` with element j = gen^j.
    """
    d = c.order if isinstance(c, CyclicClass) else int(c)
    get = f.__getitem__ if isinstance(f, dict) else f
    grp = FiniteGroup.cyclic(d)
    unit_set = set(units(d))
    if d == 1:
        return ClassFunction(grp, (as_cyclotomic(get(1)),))
    return ClassFunction(grp, tuple(as_cyclotomic(get(j)) if j in unit_set else Cyclotomic.rational(0) for j in range(d)))
