"""Catalog of G-manifolds with explicit fixed-point data.

Every model lists, for each conjugacy class of finite cyclic subgroups
(C), the components Y of the fixed set M^C up to the action of Z_G(C).
A component records:

* ``stabilizer_order`` -- order of the setwise stabilizer of Y in Z_G(C).
  The stacky integral over [M^C / Z_G(C)] weights Y by 1/stabilizer_order.
  For a wallpaper group the identity stratum is the torus R^2/Z^2 with
  weight 1/|P|.
* tangent Chern roots, normal roots with eigenvalues per generator
  gen(C)^a, optional spin lifts, and the integrals of top monomials.

Linearizations: on football(n) the generator rotates the north chart by
zeta_n; O(k) has fibre weight lambda^k at the pole whose tangent
eigenvalue is lambda and 1 at the other pole.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .cyclotomic import Cyclotomic, as_cyclotomic
from .errors import UnsupportedModel, UnsupportedParams, UnsupportedTwist, ValidationFailure
from .groups import (
    CyclicClass,
    FiniteGroup,
    GroupModel,
    Representation,
    WallpaperGroup,
    WALLPAPER_NAMES,
    _POINT_GENERATORS,
    frac_mod1,
    mat_pow,
    mat_vec,
    torus_fixed_points,
    units,
)

Root = tuple[Fraction, ...]


def _root(*xs) -> Root:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class FixedComponent:
    owner: int  # index of the CyclicClass
    name: str
    dim: int
    stabilizer_order: int
    symbols: tuple[str, ...]
    integrals: dict[tuple[int, ...], Fraction]
    tangent_roots: tuple[Root, ...]
    normal: dict[int, tuple[tuple[Root, Cyclotomic], ...]]
    spin_lift: dict[int, tuple[Cyclotomic, ...]] | None = None
    location: str = ""

    def normal_at(self, a: int) -> tuple[tuple[Root, Cyclotomic], ...]:
        return self.normal[a]

    def spin_at(self, a: int):
        return None if self.spin_lift is None else self.spin_lift[a]

    def basis(self) -> list[tuple[int, ...]]:
        from .charform import monomials

        return monomials(len(self.symbols), self.dim // 2)


@dataclass(frozen=True)
class EquivariantBundle:
    """Per-component Chern roots with fibre eigenvalues mu(gen^a)."""

    name: str
    rank: int
    data: dict[tuple[int, int], tuple[tuple[Root, dict[int, Cyclotomic]], ...]]

    def at(self, cls_index: int, comp_index: int, a: int) -> list[tuple[Root, Cyclotomic]]:
        return [(r, mu[a]) for r, mu in self.data[(cls_index, comp_index)]]

    def is_flat(self) -> bool:
        return all(not any(r) for entries in self.data.values() for r, _ in entries)

    def __add__(self, other: EquivariantBundle) -> EquivariantBundle:
        if set(self.data) != set(other.data):
            raise UnsupportedTwist("bundles live on different models")
        data = {k: self.data[k] + other.data[k] for k in self.data}
        return EquivariantBundle(f"{self.name}+{other.name}", self.rank + other.rank, data)

    def __mul__(self, other: EquivariantBundle) -> EquivariantBundle:
        """Tensor product: roots add, eigenvalues multiply."""
        if set(self.data) != set(other.data):
            raise UnsupportedTwist("bundles live on different models")
        data = {}
        for k in self.data:
            entries = []
            for r1, mu1 in self.data[k]:
                for r2, mu2 in other.data[k]:
                    root = tuple(x + y for x, y in zip(r1, r2)) if r1 else r2
                    entries.append((root, {a: mu1[a] * mu2[a] for a in mu1}))
            data[k] = tuple(entries)
        return EquivariantBundle(f"({self.name})x({other.name})", self.rank * other.rank, data)


# ---------------------------------------------------------------------------
# twist descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwistTerm:
    degree: int = 0
    weight: int = 0  # global character twist chi:weight

    def __str__(self) -> str:
        s = f"O:{self.degree}"
        return s + (f"/chi:{self.weight}" if self.weight else "")


@dataclass(frozen=True)
class TwistSpec:
    terms: tuple[TwistTerm, ...] = (TwistTerm(),)

    def __str__(self) -> str:
        if len(self.terms) == 1:
            return str(self.terms[0])
        return "sum:" + ",".join(str(t) for t in self.terms)

    @property
    def is_trivial(self) -> bool:
        return self.terms == (TwistTerm(),)

    @property
    def is_flat(self) -> bool:
        return all(t.degree == 0 for t in self.terms)


_TERM_RE = re.compile(r"O:(-?\d+)(?:/chi:(-?\d+))?")


def parse_twist(text: str | None) -> TwistSpec:
    """Grammar: ``O:k``, ``O:k/chi:m``, ``sum:O:k,O:j/chi:m,...``; empty/none = O:0."""
    if text is None or text.strip() in ("", "none"):
        return TwistSpec()
    text = text.strip()
    parts = text[4:].split(",") if text.startswith("sum:") else [text]
    terms = []
    for p in parts:
        m = _TERM_RE.fullmatch(p.strip())
        if not m:
            raise UnsupportedTwist(f"cannot parse twist term {p!r}")
        terms.append(TwistTerm(int(m.group(1)), int(m.group(2) or 0)))
    return TwistSpec(tuple(terms))


# ---------------------------------------------------------------------------
# models
# ---------------------------------------------------------------------------


@dataclass
class ManifoldModel:
    id: str
    params: dict[str, Any]
    group: GroupModel
    dimension: int
    operators: tuple[str, ...]
    components: dict[int, list[FixedComponent]]
    twist_degrees: tuple[int, ...] | None = None  # None: any degree
    custom_bundles: dict[str, EquivariantBundle] = field(default_factory=dict)
    _line_builder: Any = None

    @property
    def label(self) -> str:
        if not self.params:
            return self.id
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.id}({inner})"

    def classes(self) -> list[CyclicClass]:
        return self.group.cyclic_subgroup_classes()

    @property
    def point_group(self) -> FiniteGroup:
        return self.group.point_group if isinstance(self.group, WallpaperGroup) else self.group

    def supports(self, operator: str) -> bool:
        return operator in self.operators

    # -- bundles ------------------------------------------------------------
    def line_bundle(self, k: int) -> EquivariantBundle:
        if self._line_builder is None:
            if k == 0:
                return self.trivial_bundle()
            raise UnsupportedTwist(f"{self.label} has no line bundle slot")
        if self.twist_degrees is not None and k not in self.twist_degrees:
            raise UnsupportedTwist(f"{self.label} supports degrees {self.twist_degrees}, not {k}")
        return self._line_builder(self, k)

    def trivial_bundle(self) -> EquivariantBundle:
        return self.character_bundle(Representation.trivial(self.group), name="O:0")

    def character_bundle(self, rho: Representation, name: str | None = None) -> EquivariantBundle:
        """Trivial line bundle on which G acts through a 1-dim representation."""
        if rho.dim != 1:
            raise UnsupportedTwist("character twists must be one-dimensional")
        data = {}
        for c in self.classes():
            for i, _ in enumerate(self.components[c.index]):
                nsym = len(self.components[c.index][i].symbols)
                mu = {a: rho.character(g) for a, g in c.gens}
                data[(c.index, i)] = ((_root(*([0] * nsym)), mu),)
        return EquivariantBundle(name or rho.name, 1, data)

    def bundle(self, spec: TwistSpec | str | None) -> EquivariantBundle:
        if isinstance(spec, str) or spec is None:
            if isinstance(spec, str) and spec in self.custom_bundles:
                return self.custom_bundles[spec]
            spec = parse_twist(spec)
        total = None
        for t in spec.terms:
            b = self.line_bundle(t.degree)
            if t.weight:
                b = b * self.character_bundle(Representation.cyclic_character(self.group, t.weight))
            b = EquivariantBundle(str(t), b.rank, b.data)
            total = b if total is None else total + b
        return EquivariantBundle(str(spec), total.rank, total.data)

    # -- dump ---------------------------------------------------------------
    def dump(self) -> dict:
        """Structured description of every stratum (json-serialisable)."""
        classes = []
        for c in self.classes():
            comps = []
            for Y in self.components[c.index]:
                comps.append(_dump_component(Y))
            classes.append(
                {
                    "class": c.label,
                    "order": c.order,
                    "generator": _element_json(self.group, c.generator),
                    "components": comps,
                }
            )
        return {
            "model": self.id,
            "params": self.params,
            "dimension": self.dimension,
            "operators": list(self.operators),
            "group": _group_json(self.group),
            "strata": classes,
            "bundles": {name: _dump_bundle(b) for name, b in self.custom_bundles.items()},
        }


def _cyc_json(c: Cyclotomic) -> str:
    return c.to_string()


def _dump_component(Y: FixedComponent) -> dict:
    out = {
        "name": Y.name,
        "location": Y.location,
        "dim": Y.dim,
        "stabilizer_order": Y.stabilizer_order,
        "symbols": list(Y.symbols),
        "integrals": [[list(m), str(v)] for m, v in sorted(Y.integrals.items())],
        "tangent_roots": [[str(x) for x in r] for r in Y.tangent_roots],
        "normal": {
            str(a): [[[str(x) for x in r], _cyc_json(lam)] for r, lam in entries]
            for a, entries in sorted(Y.normal.items())
        },
    }
    if Y.spin_lift is not None:
        out["spin_lift"] = {str(a): [_cyc_json(s) for s in v] for a, v in sorted(Y.spin_lift.items())}
    return out


def _dump_bundle(b: EquivariantBundle) -> dict:
    return {
        "rank": b.rank,
        "data": [
            {
                "class": ci,
                "component": yi,
                "roots": [
                    {"root": [str(x) for x in r], "mu": {str(a): _cyc_json(m) for a, m in sorted(mu.items())}}
                    for r, mu in entries
                ],
            }
            for (ci, yi), entries in sorted(b.data.items())
        ],
    }


def _group_json(group: GroupModel) -> dict:
    if isinstance(group, WallpaperGroup):
        return {"wallpaper": group.name}
    perms = getattr(group, "permutations", None)
    if perms is not None:
        return {"permutations": [list(perms[g]) for g in group.generators]}
    return {"cyclic": group.n}


def _element_json(group: GroupModel, g) -> Any:
    if isinstance(group, WallpaperGroup):
        return {"k": g.k, "t": [str(x) for x in g.t]}
    perms = getattr(group, "permutations", None)
    if perms is not None:
        return list(perms[g])
    return int(g)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

CATALOG: dict[str, dict] = {
    "football": {
        "params": {"n": "1..12", "lift": "+ | -"},
        "operators": ["deRham", "dolbeault", "spin"],
        "description": "S^2 with Z/n rotating about the poles",
    },
    "torusrot": {
        "params": {"n": "2 | 3 | 4 | 6"},
        "operators": ["deRham", "dolbeault"],
        "description": "T^2 = C/Lambda with Z/n acting by the lattice rotation",
    },
    "symprod_s2": {
        "params": {},
        "operators": ["deRham", "dolbeault"],
        "description": "S^2 x S^2 with Z/2 swapping the factors",
    },
    "wallpaper": {
        "params": {"name": "p1 | p2 | p3 | p4 | p6"},
        "operators": ["deRham", "dolbeault"],
        "description": "R^2 with an orientation-preserving wallpaper group",
    },
}


def catalog() -> list[dict]:
    """Static listing of the model families and their admissible parameters."""
    out = []
    for name, info in CATALOG.items():
        out.append({"id": name, **info})
    return out


def catalog_instances() -> list[tuple[str, dict]]:
    """Every concrete catalog model (spin lifts as separate variants)."""
    out: list[tuple[str, dict]] = []
    for n in range(1, 13):
        for lift in ("+", "-"):
            out.append(("football", {"n": n, "lift": lift}))
    for n in (2, 3, 4, 6):
        out.append(("torusrot", {"n": n}))
    out.append(("symprod_s2", {}))
    for name in WALLPAPER_NAMES:
        out.append(("wallpaper", {"name": name}))
    return out


def instantiate(model_id: str, **params) -> ManifoldModel:
    if model_id == "football":
        return football(int(params.get("n", 1)), params.get("lift", "+"))
    if model_id == "torusrot":
        return torusrot(int(params["n"]))
    if model_id == "symprod_s2":
        if params:
            raise UnsupportedParams("symprod_s2 takes no parameters")
        return symprod_s2()
    if model_id == "wallpaper":
        return wallpaper(str(params["name"]))
    raise UnsupportedModel(f"unknown model {model_id!r}")


def _identity_class(group: GroupModel) -> CyclicClass:
    return group.cyclic_subgroup_classes()[0]


def football(n: int, lift: str = "+") -> ManifoldModel:
    if not 1 <= n <= 12:
        raise UnsupportedParams(f"football needs 1 <= n <= 12, got {n}")
    if lift not in ("+", "-"):
        raise UnsupportedParams(f"spin lift must be '+' or '-', got {lift!r}")
    sign = 1 if lift == "+" else -1
    G = FiniteGroup.cyclic(n)
    comps: dict[int, list[FixedComponent]] = {}
    for c in G.cyclic_subgroup_classes():
        if c.order == 1:
            comps[c.index] = [
                FixedComponent(
                    owner=c.index,
                    name="S^2",
                    dim=2,
                    stabilizer_order=n,
                    symbols=("h",),
                    integrals={(1,): Fraction(1)},
                    tangent_roots=(_root(2),),
                    normal={1: ()},
                    spin_lift={1: ()},
                    location="M",
                )
            ]
            continue
        poles = []
        for pole, sgn in (("N", 1), ("S", -1)):
            normal = {}
            spin = {}
            for a, g in c.gens:
                # g = gen^a is the element g^j of Z/n, j = int(g)
                j = int(g)
                normal[a] = (((), Cyclotomic.root(n, sgn * j)),)
                s = Cyclotomic.root(2 * n, j) * (sign**j)
                spin[a] = (s if sgn == 1 else s.inverse(),)
            poles.append(
                FixedComponent(
                    owner=c.index,
                    name=f"{pole} pole",
                    dim=0,
                    stabilizer_order=n,
                    symbols=(),
                    integrals={(): Fraction(1)},
                    tangent_roots=(),
                    normal=normal,
                    spin_lift=spin,
                    location=pole,
                )
            )
        comps[c.index] = poles

    def line(model: ManifoldModel, k: int) -> EquivariantBundle:
        data = {}
        for c in model.classes():
            for i, Y in enumerate(model.components[c.index]):
                if Y.dim == 2:
                    data[(c.index, i)] = ((_root(k), {1: Cyclotomic.rational(1)}),)
                    continue
                mu = {}
                for a, _g in c.gens:
                    lam = Y.normal_at(a)[0][1]
                    mu[a] = lam**k if Y.location == "N" else Cyclotomic.rational(1)
                data[(c.index, i)] = (((), mu),)
        return EquivariantBundle(f"O:{k}", 1, data)

    return ManifoldModel(
        id="football",
        params={"n": n, "lift": lift},
        group=G,
        dimension=2,
        operators=("deRham", "dolbeault", "spin"),
        components=comps,
        twist_degrees=None,
        _line_builder=line,
    )


def _torus_components(n: int, cls_index: int, d: int, gens, stab_group_order: int, matrix_of) -> list[FixedComponent]:
    """Fixed points of the rotation R^(n/d) on R^2/Z^2 modulo Z/n."""
    A = matrix_of(n // d)

    def key(p):
        return min(frac_mod1(mat_vec(matrix_of(j), p)) for j in range(n))

    reps = sorted({key(p) for p in torus_fixed_points(A)})
    out = []
    for p in reps:
        stab = sum(1 for j in range(n) if frac_mod1(mat_vec(matrix_of(j), p)) == p)
        normal = {a: (((), Cyclotomic.root(d, a)),) for a, _ in gens}
        out.append(
            FixedComponent(
                owner=cls_index,
                name=f"pt ({p[0]}, {p[1]})",
                dim=0,
                stabilizer_order=stab,
                symbols=(),
                integrals={(): Fraction(1)},
                tangent_roots=(),
                normal=normal,
                location=f"({p[0]},{p[1]})",
            )
        )
    return out


def _torus_identity(cls_index: int, weight: int) -> FixedComponent:
    return FixedComponent(
        owner=cls_index,
        name="T^2",
        dim=2,
        stabilizer_order=weight,
        symbols=("h",),
        integrals={(1,): Fraction(1)},
        tangent_roots=(_root(0),),
        normal={1: ()},
        location="M",
    )


def torusrot(n: int) -> ManifoldModel:
    if n not in (1, 2, 3, 4, 6):
        raise UnsupportedParams(f"torusrot needs n in {{2, 3, 4, 6}}, got {n}")
    R, _kind = _POINT_GENERATORS[n]
    G = FiniteGroup.cyclic(n)
    comps = {}
    for c in G.cyclic_subgroup_classes():
        if c.order == 1:
            comps[c.index] = [_torus_identity(c.index, n)]
        else:
            comps[c.index] = _torus_components(n, c.index, c.order, c.gens, n, lambda j: mat_pow(R, j, n))
    return ManifoldModel(
        id="torusrot",
        params={"n": n},
        group=G,
        dimension=2,
        operators=("deRham", "dolbeault"),
        components=comps,
        twist_degrees=(0,),
        _line_builder=lambda m, k: m.trivial_bundle(),
    )


def wallpaper(name: str) -> ManifoldModel:
    if name not in WALLPAPER_NAMES:
        raise UnsupportedParams(f"unsupported wallpaper group {name!r}")
    G = WallpaperGroup(name)
    n = G.n
    comps = {}
    for c in G.cyclic_subgroup_classes():
        if c.order == 1:
            # [R^2 / G] = [T^2 / P]: the identity stratum is the torus with weight 1/|P|
            comps[c.index] = [_torus_identity(c.index, n)]
            continue
        center = G.center(c.generator)
        cm = frac_mod1(center)
        normal = {a: (((), Cyclotomic.root(n, g.k)),) for a, g in c.gens}
        comps[c.index] = [
            FixedComponent(
                owner=c.index,
                name=f"center ({cm[0]}, {cm[1]})",
                dim=0,
                stabilizer_order=c.centralizer_order,
                symbols=(),
                integrals={(): Fraction(1)},
                tangent_roots=(),
                normal=normal,
                location=f"({cm[0]},{cm[1]})",
            )
        ]
    return ManifoldModel(
        id="wallpaper",
        params={"name": name},
        group=G,
        dimension=2,
        operators=("deRham", "dolbeault"),
        components=comps,
        twist_degrees=(0,),
        _line_builder=lambda m, k: m.trivial_bundle(),
    )


def symprod_s2() -> ManifoldModel:
    G = FiniteGroup.cyclic(2)
    comps = {}
    for c in G.cyclic_subgroup_classes():
        if c.order == 1:
            comps[c.index] = [
                FixedComponent(
                    owner=c.index,
                    name="S^2 x S^2",
                    dim=4,
                    stabilizer_order=2,
                    symbols=("a", "b"),
                    integrals={(2, 0): Fraction(0), (1, 1): Fraction(1), (0, 2): Fraction(0)},
                    tangent_roots=(_root(2, 0), _root(0, 2)),
                    normal={1: ()},
                    location="M",
                )
            ]
        else:
            comps[c.index] = [
                FixedComponent(
                    owner=c.index,
                    name="diagonal",
                    dim=2,
                    stabilizer_order=2,
                    symbols=("h",),
                    integrals={(1,): Fraction(1)},
                    tangent_roots=(_root(2),),
                    normal={1: ((_root(2), Cyclotomic.rational(-1)),)},
                    location="diag",
                )
            ]

    def line(model: ManifoldModel, k: int) -> EquivariantBundle:
        # O(k) boxtimes O(k); the swap acts on L_p (x) L_p by exchanging factors: +1
        data = {}
        for c in model.classes():
            Y = model.components[c.index][0]
            if Y.dim == 4:
                data[(c.index, 0)] = ((_root(k, k), {1: Cyclotomic.rational(1)}),)
            else:
                data[(c.index, 0)] = ((_root(2 * k), {1: Cyclotomic.rational(1)}),)
        return EquivariantBundle(f"O:{k}", 1, data)

    return ManifoldModel(
        id="symprod_s2",
        params={},
        group=G,
        dimension=4,
        operators=("deRham", "dolbeault"),
        components=comps,
        twist_degrees=None,
        _line_builder=line,
    )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass
class ValidationReport:
    model: str
    checks: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def _is_root_of_unity(x: Cyclotomic) -> bool:
    m = x.reduced().order
    m = m * 2 if m % 2 else m
    return x**m == 1


def validate_model(model: ManifoldModel, raise_on_failure: bool = True) -> ValidationReport:
    """Check the fixed-point data invariants; raises ValidationFailure by default."""
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))
        if not ok and raise_on_failure:
            raise ValidationFailure(name, detail)

    classes = model.classes()
    record("strata cover every cyclic class", set(model.components) == {c.index for c in classes})
    for c in classes:
        units_c = set(units(c.order))
        for Y in model.components[c.index]:
            where = f"{c.label} / {Y.name}"
            record("even dimension", Y.dim % 2 == 0 and 0 <= Y.dim <= model.dimension, where)
            record(
                "stabilizer contains C",
                Y.stabilizer_order >= 1 and Y.stabilizer_order % c.order == 0,
                where,
            )
            record("tangent root count", len(Y.tangent_roots) == Y.dim // 2, where)
            record("normal data for every generator", set(Y.normal) == units_c, where)
            base = Y.normal[min(units_c)]
            codim = (model.dimension - Y.dim) // 2
            for a, entries in Y.normal.items():
                record("normal rank", len(entries) == codim, where)
                for r, lam in entries:
                    record("normal eigenvalue != 1", lam != 1, f"{where}, a={a}")
                    record("normal eigenvalue is a root of unity", _is_root_of_unity(lam), where)
                    if c.order > 1:
                        record("eigenvalue order divides |C|", lam ** c.order == 1, f"{where}, a={a}")
                powered = [lam**a for _, lam in base]
                record(
                    "power compatibility across gen(C)",
                    powered == [lam for _, lam in entries],
                    f"{where}, a={a}",
                )
            if Y.spin_lift is not None:
                s_base = Y.spin_lift.get(min(units_c), ())
                for a, lifts in Y.spin_lift.items():
                    lams = [lam for _, lam in Y.normal[a]]
                    record("spin lift squares to eigenvalue", [s * s for s in lifts] == lams, f"{where}, a={a}")
                    for s, sb in zip(lifts, s_base):
                        p = sb**a
                        record("spin lift power-compatible up to sign", s == p or s == -p, f"{where}, a={a}")
                    for s in lifts:
                        v = s ** c.order
                        record("spin lift order", v == 1 or v == -1, f"{where}, a={a}")
    for c in classes:
        comps = [Y for Y in model.components[c.index] if Y.spin_lift is not None]
        for a in units(c.order):
            values = {(s ** c.order).to_string() for Y in comps for s in Y.spin_lift.get(a, ())}
            record("spin lift sign uniform across components", len(values) <= 1, f"{c.label}, a={a}")
    _validate_inclusions(model, record)
    return ValidationReport(model.label, checks)


def _validate_inclusions(model: ManifoldModel, record) -> None:
    """M^C lies in M^C' for C' < C, with eigenvalues restricting by powers."""
    group = model.group
    for c in model.classes():
        d = c.order
        for dp in range(2, d):
            if d % dp:
                continue
            sub_gen = group.power(c.generator, d // dp)
            sub_cls, b = group.cyclic_class_of(sub_gen)
            if sub_cls.gen(b) != sub_gen:
                continue  # subgroup not literally the class representative
            targets = {Y.location: Y for Y in model.components[sub_cls.index]}
            for Y in model.components[c.index]:
                where = f"{c.label} / {Y.name} in {sub_cls.label}"
                if Y.location not in targets:
                    record("subgroup inclusion of fixed sets", False, where)
                    continue
                Yp = targets[Y.location]
                restricted = sorted(
                    (lam ** (d // dp) for _, lam in Y.normal[1] if lam ** (d // dp) != 1),
                    key=lambda z: z.to_string(),
                )
                actual = sorted((lam for _, lam in Yp.normal[b]), key=lambda z: z.to_string())
                record("eigenvalues restrict by powers", restricted == actual, where)


# ---------------------------------------------------------------------------
# strata text format (json)
# ---------------------------------------------------------------------------


def _parse_root(xs: Sequence) -> Root:
    return tuple(Fraction(str(x)) for x in xs)


def _parse_cyc(v) -> Cyclotomic:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return as_cyclotomic(Fraction(str(v)))
    if isinstance(v, list):  # [N, k] shorthand for zeta_N^k
        return Cyclotomic.root(int(v[0]), int(v[1]))
    return Cyclotomic.parse(v)


def _parse_group(spec: dict) -> GroupModel:
    if "wallpaper" in spec:
        return WallpaperGroup(spec["wallpaper"])
    if "cyclic" in spec:
        return FiniteGroup.cyclic(int(spec["cyclic"]))
    if "permutations" in spec:
        return FiniteGroup.from_permutations(spec["permutations"], name=spec.get("name", "G"))
    raise UnsupportedModel("group spec needs 'cyclic', 'permutations' or 'wallpaper'")


def _match_element(group: GroupModel, spec) -> Any:
    if isinstance(group, WallpaperGroup):
        return group.element(int(spec["k"]), tuple(Fraction(x) for x in spec["t"]))
    perms = getattr(group, "permutations", None)
    if perms is not None:
        return perms.index(tuple(spec))
    return int(spec)


def load_model(source: str | dict) -> ManifoldModel:
    """Build a model from the strata dump format (json text or parsed dict)."""
    doc = json.loads(source) if isinstance(source, str) else source
    group = _parse_group(doc["group"])
    classes = group.cyclic_subgroup_classes()
    comps: dict[int, list[FixedComponent]] = {}
    for entry in doc["strata"]:
        g = _match_element(group, entry["generator"])
        cls_, a0 = group.cyclic_class_of(g)
        if cls_.gen(a0) != g or a0 != 1:
            raise UnsupportedModel(
                f"stratum generator {entry['generator']} is not the representative of {cls_.label}"
            )
        out = []
        for cj in entry["components"]:
            normal = {
                int(a): tuple((_parse_root(r), _parse_cyc(lam)) for r, lam in ent)
                for a, ent in cj["normal"].items()
            }
            spin = None
            if "spin_lift" in cj:
                spin = {int(a): tuple(_parse_cyc(s) for s in v) for a, v in cj["spin_lift"].items()}
            out.append(
                FixedComponent(
                    owner=cls_.index,
                    name=cj.get("name", "component"),
                    dim=int(cj["dim"]),
                    stabilizer_order=int(cj["stabilizer_order"]),
                    symbols=tuple(cj.get("symbols", [])),
                    integrals={tuple(m): Fraction(str(v)) for m, v in cj.get("integrals", [[[], 1]])},
                    tangent_roots=tuple(_parse_root(r) for r in cj.get("tangent_roots", [])),
                    normal=normal,
                    spin_lift=spin,
                    location=cj.get("location", cj.get("name", "")),
                )
            )
        comps[cls_.index] = out
    missing = [c.label for c in classes if c.index not in comps]
    if missing:
        raise UnsupportedModel(f"model file lacks strata for {missing}")
    bundles = {}
    for name, bdoc in doc.get("bundles", {}).items():
        data = {}
        for ent in bdoc["data"]:
            data[(int(ent["class"]), int(ent["component"]))] = tuple(
                (_parse_root(r["root"]), {int(a): _parse_cyc(m) for a, m in r["mu"].items()})
                for r in ent["roots"]
            )
        bundles[name] = EquivariantBundle(name, int(bdoc["rank"]), data)
    model = ManifoldModel(
        id=doc.get("model", "custom"),
        params=doc.get("params", {}),
        group=group,
        dimension=int(doc["dimension"]),
        operators=tuple(doc.get("operators", ["deRham", "dolbeault"])),
        components=comps,
        twist_degrees=(0,),
        custom_bundles=bundles,
        _line_builder=lambda m, k: m.trivial_bundle(),
    )
    return model


def dump_model(model: ManifoldModel) -> str:
    return json.dumps(model.dump(), indent=2, sort_keys=True)
