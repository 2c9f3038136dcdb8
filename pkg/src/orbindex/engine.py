"""Fixed-point evaluation of orbifold indices.

For a finite-order g generating C, the per-element quantity is the
stacky integral

    I(g) = sum_Y (|C| / stab(Y)) * integral_Y U_E(g)

over Z_G(C)-orbit representatives Y of the components of M^C, i.e. the
integral over the quotient of M^g by Z_G(g)/<g> with orbifold weights.
Grouping by element classes weights I(g) by tr rho(g)/ord(g); grouping by
cyclic subgroups weights each W_G(C)-orbit representative by 1/|C|.
Both sums are the same rational expression, evaluated independently.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .charform import equiv_chern, integrate, local_density, uhat_density, OPERATORS
from .cyclotomic import Cyclotomic, as_cyclotomic
from .errors import (
    BasisMismatch,
    GroupingMismatch,
    InvalidRepresentation,
    NotRational,
    ReconstructionFailure,
    TwistMismatch,
    UnsupportedOperator,
    UnsupportedTwist,
)
from .groups import (
    ClassFunction,
    CyclicClass,
    FiniteGroup,
    Representation,
    WallpaperGroup,
    epsilon_trivial,
    irreducible_representations,
)
from .report import IndexReport
from .strata import EquivariantBundle, ManifoldModel, TwistSpec, parse_twist

_ZERO = Cyclotomic.rational(0)


def resolve_rho(group, rho: Representation | str | None) -> Representation:
    """``trivial``, ``regular``, ``chi:m`` (cyclic groups) or ``sign``."""
    if isinstance(rho, Representation):
        return rho
    if rho is None or rho == "trivial":
        return Representation.trivial(group)
    if rho == "regular":
        return Representation.regular(group)
    if rho == "sign":
        finite = group.point_group if isinstance(group, WallpaperGroup) else group
        if finite.n % 2:
            raise InvalidRepresentation("sign character needs a cyclic group of even order")
        return Representation.cyclic_character(group, finite.n // 2)
    if rho.startswith("chi:"):
        return Representation.cyclic_character(group, int(rho[4:]))
    raise InvalidRepresentation(f"unknown representation {rho!r}")


def _bundle(model: ManifoldModel, twist) -> tuple[EquivariantBundle, str]:
    if isinstance(twist, EquivariantBundle):
        return twist, twist.name
    if isinstance(twist, str) and twist in model.custom_bundles:
        return model.custom_bundles[twist], twist
    spec = twist if isinstance(twist, TwistSpec) else parse_twist(twist)
    return model.bundle(spec), str(spec)


def _check_operator(model: ManifoldModel, operator: str, bundle: EquivariantBundle) -> None:
    if operator not in OPERATORS:
        raise UnsupportedOperator(f"unknown operator {operator!r}")
    if not model.supports(operator):
        raise UnsupportedOperator(f"{model.label} does not support {operator}")
    if operator == "deRham" and not bundle.is_flat():
        raise UnsupportedTwist("deRham operator only accepts flat (degree-0) twists")
    if operator == "spin" and bundle.name not in ("O:0",):
        raise UnsupportedTwist("spin operator is supported untwisted only")


def stacky_integral(model: ManifoldModel, operator: str, c: CyclicClass, a: int, bundle: EquivariantBundle | None) -> Cyclotomic:
    """I(gen^a) for the class C (see module docstring)."""
    total = _ZERO
    for i, Y in enumerate(model.components[c.index]):
        twist = bundle.at(c.index, i, a) if bundle is not None else None
        value = integrate(Y, local_density(operator, Y, a, twist))
        total = total + value * Fraction(c.order, Y.stabilizer_order)
    return total


def _finish(model, operator, twist_name, rho, grouping, contributions) -> IndexReport:
    total_c = sum((v for _, v in contributions), _ZERO)
    total = total_c.to_rational()  # NotRational is a correctness alarm
    return IndexReport(
        model=model.id,
        params=dict(model.params),
        operator=operator,
        twist=twist_name,
        rho=rho.name,
        grouping=grouping,
        contributions=tuple(contributions),
        total=total,
        integral=total.denominator == 1,
    )


def index_by_elements(model: ManifoldModel, operator: str, twist=None, rho=None, conjugate_by=None) -> IndexReport:
    """Sum over conjugacy classes of finite-order elements.

    ``conjugate_by`` replaces every class representative g by h g h^-1 (for
    checking independence of the representative choice).
    """
    bundle, tname = _bundle(model, twist)
    _check_operator(model, operator, bundle)
    rho = resolve_rho(model.group, rho)
    group = model.group
    contributions = []
    for cls_ in group.finite_order_classes():
        g = cls_.representative
        if conjugate_by is not None:
            g = group.conjugate(g, conjugate_by)
        c, a = group.cyclic_class_of(g)
        value = stacky_integral(model, operator, c, a, bundle)
        contributions.append((group.label(g), value * rho.character(g) * Fraction(1, c.order)))
    return _finish(model, operator, tname, rho, "byElements", contributions)


def index_by_cyclic(model: ManifoldModel, operator: str, twist=None, rho=None) -> IndexReport:
    """Sum over conjugacy classes of finite cyclic subgroups and W_G(C)\\gen(C)."""
    bundle, tname = _bundle(model, twist)
    _check_operator(model, operator, bundle)
    rho = resolve_rho(model.group, rho)
    contributions = []
    for c in model.classes():
        value = _ZERO
        for a, _orbit in model.group.weyl_orbits(c):
            value = value + stacky_integral(model, operator, c, a, bundle) * rho.character(c.gen(a))
        contributions.append((c.label, value * Fraction(1, c.order)))
    return _finish(model, operator, tname, rho, "byCyclic", contributions)


def compute(model: ManifoldModel, operator: str, twist=None, rho=None, grouping: str = "byCyclic", oracle: bool = True) -> IndexReport:
    """Index report with the cross-grouping check and (when available) the oracle value."""
    by_el = index_by_elements(model, operator, twist, rho)
    by_cy = index_by_cyclic(model, operator, twist, rho)
    main = by_el if grouping == "byElements" else by_cy
    checks = [("grouping invariance", by_el.total == by_cy.total)]
    oracle_value = None
    if oracle:
        from . import oracle as _oracle
        from .errors import UnsupportedModel

        try:
            oracle_value = _oracle.lefschetz_average(model, operator, twist, rho)
        except UnsupportedModel:
            oracle_value = None
        if oracle_value is not None:
            checks.append(("engine = oracle", main.total == oracle_value))
    return main.with_checks(*checks, oracle=oracle_value)


# ---------------------------------------------------------------------------
# Lefschetz numbers from fixed-point data
# ---------------------------------------------------------------------------


def lefschetz_from_strata(model: ManifoldModel, operator: str, twist, x) -> Cyclotomic:
    """L(x) = sum over all components of M^x of the local index density.

    ``x`` is an element of the finite group, or of the point group (an
    exponent k) for a wallpaper model, where the sum runs over the torus.
    """
    bundle, _ = _bundle(model, twist)
    _check_operator(model, operator, bundle)
    group = model.group
    finite = model.point_group
    if isinstance(group, WallpaperGroup):
        total = _ZERO
        for cls_ in group.finite_order_classes():
            g = cls_.representative
            if g.k != x % group.n:
                continue
            c, a = group.cyclic_class_of(g)
            total = total + stacky_integral(model, operator, c, a, bundle) * Fraction(group.n, c.order)
        return total
    c, a = group.cyclic_class_of(x)
    return stacky_integral(model, operator, c, a, bundle) * Fraction(len(group.centralizer(x)), c.order)


def lefschetz_class_function(model: ManifoldModel, operator: str, twist=None) -> ClassFunction:
    finite = model.point_group
    return ClassFunction.from_callable(finite, lambda x: lefschetz_from_strata(model, operator, twist, x))


def fourier_inversion(model: ManifoldModel, operator: str, twist=None) -> list[tuple[Any, Cyclotomic, Cyclotomic]]:
    """(x, sum_rho index_rho * chi_rho(x^-1), L(x)) for every x in the (point) group."""
    finite = model.point_group
    irreps = irreducible_representations(model.group)
    indices = [index_by_cyclic(model, operator, twist, rho).total for rho in irreps]
    out = []
    for x in finite.elements:
        xi = finite.inv(x)
        lhs = sum((rho._images[xi][0][0] * idx for rho, idx in zip(irreps, indices)), _ZERO)
        out.append((x, lhs, lefschetz_from_strata(model, operator, twist, x)))
    return out


# ---------------------------------------------------------------------------
# cohomological pairing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UhatClass:
    """[U^(g)] for g in gen(C), as functionals on monomial bases of the components.

    ``functionals[a][i]`` maps each basis monomial m of component i to
    (|C| / stab) * integral (U^(gen^a) * m).
    """

    owner: CyclicClass
    operator: str
    component_names: tuple[str, ...]
    component_symbols: tuple[tuple[str, ...], ...]
    functionals: dict[int, tuple[dict[tuple[int, ...], Cyclotomic], ...]]

    def evaluate(self, a: int, chern: Sequence) -> Cyclotomic:
        """Pair the cohomology classes ``chern[i]`` (one per component) with [U^(gen^a)]."""
        total = _ZERO
        for phi, ch in zip(self.functionals[a], chern):
            for m, coeff in ch.coeffs.items():
                if m in phi:
                    total = total + coeff * phi[m]
        return total

    def w_equivariant(self) -> bool:
        """Functional for gen^(a w) is that of gen^a with components permuted."""
        d = self.owner.order
        for a in self.functionals:
            mine = sorted(_functional_key(phi) for phi in self.functionals[a])
            for w in self.owner.weyl_exponents:
                b = (a * w) % d if d > 1 else 1
                theirs = sorted(_functional_key(phi) for phi in self.functionals[b])
                if mine != theirs:
                    return False
        return True


def _functional_key(phi: dict) -> tuple:
    return tuple((m, v.to_string()) for m, v in sorted(phi.items()))


def uhat_classes(model: ManifoldModel, operator: str, c: CyclicClass) -> UhatClass:
    if not model.supports(operator):
        raise UnsupportedOperator(f"{model.label} does not support {operator}")
    comps = model.components[c.index]
    functionals = {}
    for a in c.gen_exponents:
        per_comp = []
        for Y in comps:
            u = uhat_density(operator, Y, a)
            weight = Fraction(c.order, Y.stabilizer_order)
            per_comp.append({m: integrate(Y, u * _monomial(Y, m)) * weight for m in Y.basis()})
        functionals[a] = tuple(per_comp)
    return UhatClass(c, operator, tuple(Y.name for Y in comps), tuple(Y.symbols for Y in comps), functionals)


def monomial_name(symbols: Sequence[str], m: Sequence[int]) -> str:
    return "*".join(s if e == 1 else f"{s}^{e}" for s, e in zip(symbols, m) if e) or "1"


def _monomial(Y, m):
    from .charform import GradedClass

    return GradedClass(Y.symbols, Y.dim // 2, {m: 1})


def _chern_at(model: ManifoldModel, bundle: EquivariantBundle, c: CyclicClass, a: int) -> list:
    return [equiv_chern(bundle.at(c.index, i, a), Y) for i, Y in enumerate(model.components[c.index])]


def pair_twist(model: ManifoldModel, operator: str, twist, rho=None, uhats: dict[int, UhatClass] | None = None) -> IndexReport:
    """Index of the twisted operator via <[ch(g, E)], [U^(g)]>, cross-checked
    against the direct evaluation with the twist folded into the density."""
    bundle, tname = _bundle(model, twist)
    _check_operator(model, operator, bundle)
    rho = resolve_rho(model.group, rho)
    if uhats is None:
        uhats = {c.index: uhat_classes(model, operator, c) for c in model.classes()}
    contributions = []
    for c in model.classes():
        value = _ZERO
        for a, _orbit in model.group.weyl_orbits(c):
            pairing = uhats[c.index].evaluate(a, _chern_at(model, bundle, c, a))
            value = value + pairing * rho.character(c.gen(a))
        contributions.append((c.label, value * Fraction(1, c.order)))
    report = _finish(model, operator, tname, rho, "pairing", contributions)
    direct = index_by_cyclic(model, operator, bundle, rho)
    if direct.total != report.total:
        raise TwistMismatch(f"pairing gives {report.total}, direct evaluation {direct.total}")
    return report.with_checks(("pairing = direct twisted index", True))


def pair_inform(group: FiniteGroup, homology: dict, cohomology: dict, rho=None) -> Cyclotomic:
    """<E-side, A>_rho: pair componentwise, multiply by chi_rho, take the trivial multiplicity.

    Both sides map basis labels to class functions on ``group``.
    """
    if set(homology) != set(cohomology):
        raise BasisMismatch("homology and cohomology use different bases")
    for f in list(homology.values()) + list(cohomology.values()):
        if f.group is not group:
            raise BasisMismatch("class functions live on a different group")
    prod = ClassFunction(group, tuple(_ZERO for _ in group.elements))
    for key in homology:
        prod = prod + homology[key] * cohomology[key]
    if rho is not None:
        chi = rho if isinstance(rho, ClassFunction) else ClassFunction.from_character(resolve_rho(group, rho))
        prod = prod * chi
    return epsilon_trivial(group, prod)


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------


@dataclass
class Decomposition:
    model: str
    operator: str
    classes: dict[int, UhatClass]
    family: list[str]
    checks: list[tuple[str, bool]] = field(default_factory=list)
    rank: int = 0
    target_dim: int = 0

    @property
    def separating(self) -> bool:
        return self.rank == self.target_dim

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_dict(self) -> dict:
        classes = []
        for idx, u in sorted(self.classes.items()):
            classes.append(
                {
                    "class": u.owner.label,
                    "order": u.owner.order,
                    "components": list(u.component_names),
                    "functionals": {
                        str(a): [
                            {monomial_name(syms, m): v.to_string() for m, v in sorted(phi.items())}
                            for phi, syms in zip(per, u.component_symbols)
                        ]
                        for a, per in sorted(u.functionals.items())
                    },
                    "w_equivariant": u.w_equivariant(),
                }
            )
        return {
            "model": self.model,
            "operator": self.operator,
            "classes": classes,
            "family": self.family,
            "checks": [{"name": n, "ok": ok} for n, ok in self.checks],
            "rank": self.rank,
            "target_dim": self.target_dim,
            "separating": self.separating,
            "verdict": "ok" if self.passed else "mismatch",
        }


def spanning_family(model: ManifoldModel, operator: str) -> list[str]:
    """Twists used to test reconstruction: degrees |k| <= 2 times point-group characters."""
    if operator == "spin":
        return ["O:0"]
    if model.custom_bundles:
        return ["O:0"] + sorted(model.custom_bundles)
    degrees = [0] if operator == "deRham" else [k for k in range(-2, 3) if model.twist_degrees is None or k in model.twist_degrees]
    n = model.point_group.n
    out = []
    for k in degrees:
        for m in range(n):
            out.append(f"O:{k}" + (f"/chi:{m}" if m else ""))
    return out


def _rank(rows: list[list[Cyclotomic]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def decompose(model: ManifoldModel, operator: str, family: list[str] | None = None, strict: bool = False) -> Decomposition:
    """All [U^] classes, plus reconstruction of twisted indices from them."""
    uhats = {c.index: uhat_classes(model, operator, c) for c in model.classes()}
    family = family if family is not None else spanning_family(model, operator)
    result = Decomposition(model.label, operator, uhats, family)
    result.checks.append(("W-equivariance", all(u.w_equivariant() for u in uhats.values())))
    try:
        reps = irreducible_representations(model.group)
    except InvalidRepresentation:
        reps = [Representation.trivial(model.group), Representation.regular(model.group)]
    from . import oracle as _oracle
    from .errors import UnsupportedModel

    rows = []
    for twist in family:
        bundle, _ = _bundle(model, twist)
        row = []
        for c in model.classes():
            for a, _ in model.group.weyl_orbits(c):
                for i, Y in enumerate(model.components[c.index]):
                    ch = equiv_chern(bundle.at(c.index, i, a), Y)
                    row.extend(ch.coefficient(m) for m in Y.basis())
        rows.append(row)
        for rho in reps:
            try:
                via_pairing = pair_twist(model, operator, twist, rho, uhats=uhats).total
                ok = True
            except TwistMismatch:
                via_pairing, ok = None, False
            try:
                direct = _oracle.lefschetz_average(model, operator, twist, rho)
            except UnsupportedModel:
                direct = index_by_elements(model, operator, twist, rho).total
            ok = ok and via_pairing == direct
            result.checks.append((f"reconstruct {twist} rho={rho.name}", ok))
    result.rank = _rank(rows)
    result.target_dim = len(rows[0]) if rows else 0
    if strict and not result.passed:
        bad = [n for n, ok in result.checks if not ok]
        raise ReconstructionFailure(f"{model.label}/{operator}: {bad}")
    return result
