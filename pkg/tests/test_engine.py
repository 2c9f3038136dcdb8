from fractions import Fraction

import pytest

from orbindex import oracle
from orbindex.cyclotomic import Cyclotomic, cyc_root
from orbindex.engine import (
    compute,
    decompose,
    fourier_inversion,
    index_by_cyclic,
    index_by_elements,
    lefschetz_from_strata,
    pair_inform,
    pair_twist,
    resolve_rho,
    uhat_classes,
)
from orbindex.errors import BasisMismatch, UnsupportedOperator, UnsupportedTwist
from orbindex.groups import ClassFunction, FiniteGroup, irreducible_representations
from orbindex.strata import football, symprod_s2, torusrot, wallpaper


def total(model, op, twist="O:0", rho="trivial", grouping="byCyclic"):
    f = index_by_cyclic if grouping == "byCyclic" else index_by_elements
    return f(model, op, twist, rho).total


@pytest.mark.parametrize("grouping", ["byElements", "byCyclic"])
def test_spot_values(grouping):
    assert total(football(2), "deRham", grouping=grouping) == 2
    assert total(torusrot(4), "deRham", grouping=grouping) == 2
    assert total(football(3), "dolbeault", "O:4", grouping=grouping) == 2
    assert total(wallpaper("p4"), "deRham", grouping=grouping) == 2
    assert total(football(6), "dolbeault", grouping=grouping) == 1
    assert total(football(2), "deRham", rho="regular", grouping=grouping) == 2


def test_football_derham_contributions():
    r = index_by_cyclic(football(2), "deRham")
    assert [v for _, v in r.contributions] == [1, 1]


def test_p4_contribution_breakdown():
    r = index_by_cyclic(wallpaper("p4"), "deRham")
    values = dict(r.contributions)
    assert values["<e>"] == 0  # chi(T^2) = 0
    assert sum(values.values(), Cyclotomic.rational(0)) == 2


def test_regular_rho_gives_upstairs_index():
    for m, op, tw in [(football(5), "dolbeault", "O:3"), (symprod_s2(), "dolbeault", "O:2"), (torusrot(6), "deRham", "O:0")]:
        upstairs = oracle.kernel_character(m, op, tw)(0)
        assert total(m, op, tw, "regular") == upstairs


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("lift", ["+", "-"])
def test_spin_vanishes(n, lift):
    m = football(n, lift)
    for rho in irreducible_representations(m.group):
        assert total(m, "spin", "O:0", rho) == 0


def test_spin_only_untwisted():
    with pytest.raises(UnsupportedTwist):
        index_by_cyclic(football(3), "spin", "O:1")
    with pytest.raises(UnsupportedOperator):
        index_by_cyclic(torusrot(2), "spin")


def test_representative_choice_does_not_matter():
    m = wallpaper("p6")
    base = index_by_elements(m, "deRham", "O:0", "chi:1").total
    h = m.group.element(1, (1, 2))
    assert index_by_elements(m, "deRham", "O:0", "chi:1", conjugate_by=h).total == base


def test_compute_report_checks():
    r = compute(football(3), "dolbeault", "O:4")
    assert r.total == 2 and r.oracle == 2
    assert r.verdict == "ok"
    assert dict(r.checks) == {"grouping invariance": True, "engine = oracle": True}


def test_lefschetz_from_strata_matches_closed_form():
    for m, op, tw in [(football(3), "dolbeault", "O:4"), (torusrot(4), "deRham", "O:0"), (wallpaper("p3"), "dolbeault", "O:0/chi:2"), (symprod_s2(), "dolbeault", "O:1")]:
        for x in m.point_group.elements:
            assert lefschetz_from_strata(m, op, tw, x) == oracle.closed_form_L(m, op, tw, x)


def test_lefschetz_at_identity_is_upstairs_index():
    assert lefschetz_from_strata(football(3), "dolbeault", "O:4", 0) == 5
    assert lefschetz_from_strata(torusrot(4), "deRham", "O:0", 0) == 0


def test_fourier_inversion_football_o4():
    rows = fourier_inversion(football(3), "dolbeault", "O:4")
    for _x, lhs, L in rows:
        assert lhs == L
    indices = [index_by_cyclic(football(3), "dolbeault", "O:4", rho).total for rho in irreducible_representations(football(3).group)]
    assert indices == [2, 1, 2]


def test_uhat_football2():
    m = football(2)
    c_triv, c2 = m.classes()
    u = uhat_classes(m, "dolbeault", c2)
    assert [phi[()] for phi in u.functionals[1]] == [Fraction(1, 2), Fraction(1, 2)]
    u0 = uhat_classes(m, "dolbeault", c_triv)
    # Td(S^2) functional, weighted by 1/2: <Td, 1> = 1 -> 1/2, <Td, h> = 1 -> 1/2
    assert u0.functionals[1][0] == {(0,): Fraction(1, 2), (1,): Fraction(1, 2)}


def test_uhat_symprod_swap():
    m = symprod_s2()
    c2 = m.classes()[1]
    u = uhat_classes(m, "dolbeault", c2)
    phi = u.functionals[1][0]
    # u = 2h is the tangent root of the diagonal: <U, 1> = 1, <U, u> = 1
    assert phi[(0,)] == 1
    assert 2 * phi[(1,)] == 1
    assert u.w_equivariant()


def test_pair_twist_examples():
    r = pair_twist(football(2), "dolbeault", "O:0")
    assert r.total == 1
    assert [v for _, v in r.contributions] == [Fraction(1, 2), Fraction(1, 2)]
    assert pair_twist(football(3), "dolbeault", "O:4").total == 2
    for k in range(-3, 4):
        single = index_by_cyclic(football(4), "dolbeault", f"O:{k}").total
        assert pair_twist(football(4), "dolbeault", f"sum:O:{k},O:{k}").total == 2 * single


def test_pair_inform_examples():
    z2 = FiniteGroup.cyclic(2)
    A = {"pt": ClassFunction(z2, (Cyclotomic.rational(1), Cyclotomic.rational(-1)))}
    E = {"pt": ClassFunction(z2, (Cyclotomic.rational(1), Cyclotomic.rational(1)))}
    assert pair_inform(z2, A, E, "trivial") == 0
    assert pair_inform(z2, A, E, "sign") == 1
    e = FiniteGroup.cyclic(1)
    A = {"a": ClassFunction(e, (Cyclotomic.rational(3),)), "b": ClassFunction(e, (Cyclotomic.rational(2),))}
    E = {"a": ClassFunction(e, (Cyclotomic.rational(5),)), "b": ClassFunction(e, (Cyclotomic.rational(-1),))}
    assert pair_inform(e, A, E) == 13
    with pytest.raises(BasisMismatch):
        pair_inform(e, A, {"a": E["a"]})


def test_decompose_examples():
    d = decompose(football(2), "dolbeault")
    assert len(d.classes) == 2 and d.passed
    assert {"O:-2", "O:2"} <= set(d.family)
    d = decompose(torusrot(4), "deRham")
    # Z/4 has three cyclic subgroups; with W trivial they carry 1 + 1 + 2 generator functionals
    assert len(d.classes) == 3 and d.passed
    assert sum(len(u.functionals) for u in d.classes.values()) == 4
    d = decompose(symprod_s2(), "dolbeault")
    assert len(d.classes) == 2 and d.passed
    assert index_by_cyclic(symprod_s2(), "dolbeault", "O:0").total == 1


def test_resolve_rho():
    z4 = FiniteGroup.cyclic(4)
    assert resolve_rho(z4, "sign").character(1) == -1
    assert resolve_rho(z4, "chi:1").character(1) == cyc_root(4, 1)


def test_fourier_needs_inverse_argument():
    # sum_rho index_rho chi_rho(g) is L(g^-1), which differs from L(g) when L is not real
    m = football(3)
    irreps = irreducible_representations(m.group)
    idx = [index_by_cyclic(m, "dolbeault", "O:4", rho).total for rho in irreps]
    plain = sum((rho.character(1) * i for rho, i in zip(irreps, idx)), Cyclotomic.rational(0))
    L = lefschetz_from_strata(m, "dolbeault", "O:4", 1)
    assert L == 1 + cyc_root(3, 1)
    assert plain == L.conjugate() != L
