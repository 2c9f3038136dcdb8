"""The catalog verification suite.

Each criterion returns a :class:`CriterionResult`; ``run_suite`` runs all
of them.  Used by ``orbindex verify --suite catalog`` and by the test
suite, so the command line and pytest check exactly the same things.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from . import oracle
from .charform import (
    ahat_root_coeffs,
    dolbeault_normal_coeffs,
    equiv_chern,
    spin_normal_coeffs,
    td_root_coeffs,
)
from .cyclotomic import Cyclotomic
from .engine import (
    decompose,
    fourier_inversion,
    index_by_cyclic,
    index_by_elements,
    pair_twist,
    spanning_family,
)
from .errors import OrbIndexError
from .groups import FiniteGroup, WallpaperGroup, irreducible_representations
from .strata import ManifoldModel, football, instantiate, symprod_s2, torusrot, wallpaper

SERIES_CHECK_DEGREE = 6


@dataclass
class CriterionResult:
    number: int
    title: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, case: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(case)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"criterion {self.number}: {status}  {self.title}  ({self.cases} cases, {self.seconds:.1f}s)"
        if self.failures:
            out += "\n" + "\n".join(f"    failing: {f}" for f in self.failures[:20])
            if len(self.failures) > 20:
                out += f"\n    ... {len(self.failures) - 20} more"
        return out

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "cases": self.cases,
            "failures": list(self.failures),
        }


# ---------------------------------------------------------------------------
# the suite's models and cases
# ---------------------------------------------------------------------------

SUITE_FOOTBALL = range(1, 7)
SUITE_TORUS = (2, 3, 4, 6)
DOLBEAULT_DEGREES = range(-3, 4)


def suite_models() -> list[ManifoldModel]:
    """Football n = 1..6 (both spin lifts), torusrot, symprod_s2, wallpaper."""
    out = [football(n, lift) for n in SUITE_FOOTBALL for lift in ("+", "-")]
    out += [torusrot(n) for n in SUITE_TORUS]
    out.append(symprod_s2())
    out += [wallpaper(name) for name in ("p1", "p2", "p3", "p4", "p6")]
    return out


def operator_twists(model: ManifoldModel, operator: str) -> list[str]:
    if operator == "spin":
        return ["O:0"]
    if operator == "deRham":
        return ["O:0"]
    if model.twist_degrees is None:
        return [f"O:{k}" for k in DOLBEAULT_DEGREES]
    return [f"O:{k}" for k in DOLBEAULT_DEGREES if k in model.twist_degrees]


def suite_cases() -> Iterator[tuple[ManifoldModel, str, str]]:
    """(model, operator, twist) for criterion 1.

    The spin lift only matters for the spin operator, so the "-" football
    variants contribute spin cases only.
    """
    for model in suite_models():
        for op in model.operators:
            if model.id == "football" and model.params["lift"] == "-" and op != "spin":
                continue
            for tw in operator_twists(model, op):
                yield model, op, tw


def _case(model: ManifoldModel, op: str, tw, rho=None) -> str:
    r = f" rho={rho.name}" if rho is not None else ""
    return f"{model.label} {op} {tw}{r}"


def _guard(result: CriterionResult, case: str, fn: Callable[[], bool]) -> None:
    try:
        ok = bool(fn())
    except OrbIndexError as exc:
        result.check(False, f"{case}: {type(exc).__name__}: {exc}")
        return
    result.check(ok, case)


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    res = CriterionResult(1, "orbifold index equality: byElements = byCyclic = oracle average")
    for model, op, tw in suite_cases():
        for rho in irreducible_representations(model.group):

            def run() -> bool:
                a = index_by_elements(model, op, tw, rho).total
                b = index_by_cyclic(model, op, tw, rho).total
                c = oracle.lefschetz_average(model, op, tw, rho)
                return a == b == c and a.denominator == 1

            _guard(res, _case(model, op, tw, rho), run)
    return res


def criterion_2() -> CriterionResult:
    res = CriterionResult(2, "spot values")
    spots = [
        (football(3), "dolbeault", "O:4", "trivial", 2),
        (torusrot(4), "deRham", "O:0", "trivial", 2),
        (wallpaper("p4"), "deRham", "O:0", "trivial", 2),
        (symprod_s2(), "dolbeault", "O:0", "trivial", 1),
    ]
    for model, op, tw, rho, want in spots:
        _guard(res, f"{model.label} {op} {tw} rho={rho} = {want}", lambda: index_by_cyclic(model, op, tw, rho).total == want)
    for n in SUITE_FOOTBALL:
        for lift in ("+", "-"):
            model = football(n, lift)
            for rho in irreducible_representations(model.group):
                _guard(res, _case(model, "spin", "O:0", rho) + " = 0", lambda: index_by_cyclic(model, "spin", "O:0", rho).total == 0)
    return res


def criterion_3() -> CriterionResult:
    res = CriterionResult(3, "wallpaper p_n totals = torusrot(n) totals")
    for n, name in ((1, "p1"), (2, "p2"), (3, "p3"), (4, "p4"), (6, "p6")):
        wp, tr = wallpaper(name), torusrot(n)
        shared = [op for op in wp.operators if op in tr.operators]
        wp_irreps = irreducible_representations(wp.group)
        tr_irreps = irreducible_representations(tr.group)
        for op in shared:
            for tw in ["O:0"] + [f"O:0/chi:{m}" for m in range(1, n)]:
                for rw, rt in zip(wp_irreps, tr_irreps):
                    _guard(
                        res,
                        f"{name} vs torusrot({n}) {op} {tw} rho={rw.name}",
                        lambda: index_by_cyclic(wp, op, tw, rw).total == index_by_cyclic(tr, op, tw, rt).total,
                    )
    return res


def aggregate_by_cyclic(model: ManifoldModel, report) -> dict[str, Cyclotomic]:
    """Fold a byElements report into per-cyclic-class sums."""
    group = model.group
    labels = {c.index: c.label for c in model.classes()}
    out: dict[str, Cyclotomic] = {}
    for cls_, (_label, value) in zip(group.finite_order_classes(), report.contributions):
        c, _a = group.cyclic_class_of(cls_.representative)
        key = labels[c.index]
        out[key] = out.get(key, Cyclotomic.rational(0)) + value
    return out


def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "grouping invariance per cyclic class")
    for model, op, tw in suite_cases():
        for rho in irreducible_representations(model.group):

            def run() -> bool:
                el = index_by_elements(model, op, tw, rho)
                cy = index_by_cyclic(model, op, tw, rho)
                agg = aggregate_by_cyclic(model, el)
                zero = Cyclotomic.rational(0)
                return all(agg.get(label, zero) == value for label, value in cy.contributions) and len(agg) == len(cy.contributions)

            _guard(res, _case(model, op, tw, rho), run)
    return res


def _twist_family(model: ManifoldModel, op: str) -> list[str]:
    fam = list(dict.fromkeys(operator_twists(model, op) + spanning_family(model, op)))
    return fam


def criterion_5() -> CriterionResult:
    res = CriterionResult(5, "twisting coherence: pairing = direct, additivity, multiplicativity of ch")
    for model in suite_models():
        if model.id == "football" and model.params["lift"] == "-":
            continue
        irreps = irreducible_representations(model.group)
        for op in model.operators:
            fam = _twist_family(model, op)
            for tw in fam:
                for rho in irreps:
                    # pair_twist raises TwistMismatch when the two routes disagree
                    _guard(res, "pairing " + _case(model, op, tw, rho), lambda: pair_twist(model, op, tw, rho).total == index_by_cyclic(model, op, tw, rho).total)
            if op == "spin":
                continue
            pairs = [(fam[i], fam[j]) for i in range(len(fam)) for j in range(i, len(fam))][:12]
            for e, f in pairs:
                for rho in irreps:

                    def additive() -> bool:
                        whole = index_by_cyclic(model, op, f"sum:{e},{f}", rho).total
                        return whole == index_by_cyclic(model, op, e, rho).total + index_by_cyclic(model, op, f, rho).total

                    _guard(res, f"additivity {model.label} {op} {e} + {f} rho={rho.name}", additive)
                _guard(res, f"ch multiplicative {model.label} {e} x {f}", lambda: _ch_multiplicative(model, e, f))
    return res


def _ch_multiplicative(model: ManifoldModel, e: str, f: str) -> bool:
    be, bf = model.bundle(e), model.bundle(f)
    prod = be * bf
    for c in model.classes():
        for a in c.gen_exponents:
            for i, Y in enumerate(model.components[c.index]):
                lhs = equiv_chern(prod.at(c.index, i, a), Y)
                rhs = equiv_chern(be.at(c.index, i, a), Y) * equiv_chern(bf.at(c.index, i, a), Y)
                if lhs != rhs:
                    return False
    return True


def criterion_6() -> CriterionResult:
    res = CriterionResult(6, "decomposition, W-equivariance, Fourier inversion")
    for model in suite_models():
        if model.id == "football" and model.params["lift"] == "-":
            ops = ["spin"]
        else:
            ops = list(model.operators)
        for op in ops:
            _guard(res, f"decompose {model.label} {op}", lambda: decompose(model, op).passed)
            tw = "O:1" if op == "dolbeault" and model.twist_degrees is None else "O:0"

            def fourier() -> bool:
                for x, lhs, from_strata in fourier_inversion(model, op, tw):
                    if not (lhs == from_strata == oracle.closed_form_L(model, op, tw, x)):
                        return False
                return True

            _guard(res, f"Fourier inversion {model.label} {op} {tw}", fourier)
    return res


# -- series oracle ----------------------------------------------------------


def _series_reciprocal(a: list, degree: int) -> list:
    b = [1 / a[0]]
    for n in range(1, degree + 1):
        b.append(-sum((a[k] * b[n - k] for k in range(1, n + 1)), 0 * a[0]) / a[0])
    return b


def taylor_ahat(degree: int) -> list[Fraction]:
    """(x/2)/sinh(x/2) as the reciprocal of sinh(x/2)/(x/2) = sum x^2j / (4^j (2j+1)!)."""
    a = [Fraction(0)] * (degree + 1)
    for j in range(0, degree // 2 + 1):
        a[2 * j] = Fraction(1, 4**j * factorial(2 * j + 1))
    return _series_reciprocal(a, degree)


def taylor_td(degree: int) -> list[Fraction]:
    """x/(1 - e^-x) as the reciprocal of (1 - e^-x)/x = sum (-1)^j x^j / (j+1)!."""
    a = [Fraction((-1) ** j, factorial(j + 1)) for j in range(degree + 1)]
    return _series_reciprocal(a, degree)


def _mul_series(a: list, b: list, degree: int) -> list:
    return [sum((a[i] * b[n - i] for i in range(n + 1)), Cyclotomic.rational(0)) for n in range(degree + 1)]


def criterion_7() -> CriterionResult:
    res = CriterionResult(7, "series library vs Taylor recursion; normal-factor identity")
    d = SERIES_CHECK_DEGREE
    res.check(list(ahat_root_coeffs(d)) == taylor_ahat(d), "Ahat root coefficients to degree 6")
    res.check(list(td_root_coeffs(d)) == taylor_td(d), "Td root coefficients to degree 6")
    res.check(ahat_root_coeffs(d)[2] == Fraction(-1, 24), "Ahat x^2 coefficient = -1/24")
    res.check(list(td_root_coeffs(d)[:3]) == [1, Fraction(1, 2), Fraction(1, 12)], "Td = 1 + x/2 + x^2/12 + ...")
    for n in range(2, 13):
        for k in range(1, n):
            lam = Cyclotomic.root(n, k)
            for s in (Cyclotomic.root(2 * n, k), -Cyclotomic.root(2 * n, k)):
                # s^2 = lam; s * e^{x/2}
                shift = [s * Fraction(1, 2**j * factorial(j)) for j in range(d + 1)]
                lhs = dolbeault_normal_coeffs(lam, d)
                rhs = _mul_series(spin_normal_coeffs(s, d), shift, d)
                res.check(lhs == rhs, f"DolbeaultNormal(zeta_{n}^{k}) = SpinNormal(s) s e^(x/2), s = {s}")
    return res


def _finite_suite_groups() -> list:
    groups = [FiniteGroup.cyclic(n) for n in range(1, 13)]
    groups.append(FiniteGroup.from_permutations([(1, 0, 2), (1, 2, 0)], name="S3"))
    groups.append(FiniteGroup.from_permutations([(1, 2, 3, 0), (3, 2, 1, 0)], name="D4"))
    return groups


def preimage_counts(group) -> list[tuple[str, int, int]]:
    """(class label, |p^-1(C)|, |W_G(C) \\ gen(C)|) for every cyclic class."""
    counts: dict[int, int] = {}
    for cls_ in group.finite_order_classes():
        c, _ = group.cyclic_class_of(cls_.representative)
        counts[c.index] = counts.get(c.index, 0) + 1
    return [(c.label, counts.get(c.index, 0), len(group.weyl_orbits(c))) for c in group.cyclic_subgroup_classes()]


def criterion_8() -> CriterionResult:
    res = CriterionResult(8, "group machinery")
    p4 = WallpaperGroup("p4")
    res.check(len(p4.finite_order_classes()) == 8, "p4 has 8 finite-order classes")
    res.check(len(p4.cyclic_subgroup_classes()) == 6, "p4 has 6 cyclic-subgroup classes")
    for name, sig in (("p2", (2, 2, 2, 2)), ("p3", (3, 3, 3)), ("p4", (4, 4, 2)), ("p6", (6, 3, 2))):
        res.check(WallpaperGroup(name).rotation_signature() == sig, f"{name} signature {sig}")
    groups = [WallpaperGroup(n) for n in ("p1", "p2", "p3", "p4", "p6")] + _finite_suite_groups()
    groups.append(instantiate("symprod_s2").group)
    for g in groups:
        for label, pre, orbits in preimage_counts(g):
            res.check(pre == orbits, f"{getattr(g, 'name', g)} class {label}: |p^-1(C)| = {pre}, |W\\gen| = {orbits}")
    return res


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


def run_criterion(number: int) -> CriterionResult:
    t0 = time.perf_counter()
    res = CRITERIA[number]()
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(numbers=None, echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    out = []
    for k in numbers or sorted(CRITERIA):
        res = run_criterion(k)
        if echo is not None:
            echo(res.line())
        out.append(res)
    return out
