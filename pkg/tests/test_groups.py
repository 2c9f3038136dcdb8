from fractions import Fraction
from itertools import permutations

import pytest

from orbindex.cyclotomic import cyc_root
from orbindex.errors import InvalidGroup, InvalidRepresentation
from orbindex.groups import (
    ClassFunction,
    FiniteGroup,
    Representation,
    WallpaperGroup,
    character_value,
    epsilon_trivial,
    extend_by_zero,
    irreducible_representations,
    torus_fixed_points,
)

S3_GENS = [(1, 0, 2), (1, 2, 0)]


@pytest.fixture(scope="module")
def s3():
    return FiniteGroup.from_permutations(S3_GENS, name="S3")


@pytest.fixture(scope="module")
def p4():
    return WallpaperGroup("p4")


def brute_force_classes(perms):
    """Conjugacy classes of a permutation group by direct conjugation."""
    def compose(a, b):
        return tuple(a[b[i]] for i in range(len(a)))

    def inverse(a):
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    seen, classes = set(), []
    for x in perms:
        if x in seen:
            continue
        cls = {compose(compose(h, x), inverse(h)) for h in perms}
        seen |= cls
        classes.append(cls)
    return classes


def test_cyclic_counts():
    z6 = FiniteGroup.cyclic(6)
    assert len(z6.finite_order_classes()) == 6
    assert sorted(c.order for c in z6.cyclic_subgroup_classes()) == [1, 2, 3, 6]


def test_s3_classes_match_brute_force(s3):
    ref = brute_force_classes(list(permutations(range(3))))
    assert len(s3.finite_order_classes()) == len(ref) == 3
    assert sorted(c.size for c in s3.finite_order_classes()) == sorted(len(c) for c in ref)
    assert sorted(c.order for c in s3.cyclic_subgroup_classes()) == [1, 2, 3]


def test_centralizers(s3):
    z5 = FiniteGroup.cyclic(5)
    assert len(z5.centralizer(2)) == 5
    t = next(x for x in s3.elements if s3.element_order(x) == 2)
    assert sorted(s3.centralizer(t)) == sorted({s3.identity, t})


def test_weyl_orbits(s3):
    z5 = FiniteGroup.cyclic(5)
    c5 = next(c for c in z5.cyclic_subgroup_classes() if c.order == 5)
    assert [orbit for _, orbit in z5.weyl_orbits(c5)] == [(1,), (2,), (3,), (4,)]
    c3 = next(c for c in s3.cyclic_subgroup_classes() if c.order == 3)
    assert [orbit for _, orbit in s3.weyl_orbits(c3)] == [(1, 2)]


def test_p4_classes(p4):
    classes = p4.finite_order_classes()
    assert len(classes) == 8
    assert sorted(c.order for c in classes) == [1, 2, 2, 2, 4, 4, 4, 4]
    cyc = p4.cyclic_subgroup_classes()
    assert len(cyc) == 6
    assert sorted(c.order for c in cyc) == [1, 2, 2, 2, 4, 4]


def test_p4_centralizer_of_quarter_turn(p4):
    g = p4.rotation_about(1, (Fraction(1, 2), Fraction(1, 2)))
    cent = p4.centralizer(g)
    assert len(cent) == 4
    assert all(p4.center(h) == (Fraction(1, 2), Fraction(1, 2)) for h in cent if h.k)


def test_p4_weyl_orbits_are_singletons(p4):
    for c in p4.cyclic_subgroup_classes():
        if c.order == 4:
            assert [orbit for _, orbit in p4.weyl_orbits(c)] == [(1,), (3,)]


@pytest.mark.parametrize("name, sig", [("p1", ()), ("p2", (2, 2, 2, 2)), ("p3", (3, 3, 3)), ("p4", (4, 4, 2)), ("p6", (6, 3, 2))])
def test_rotation_signatures(name, sig):
    assert WallpaperGroup(name).rotation_signature() == sig


@pytest.mark.parametrize("name, n_classes, n_cyclic", [("p1", 1, 1), ("p2", 5, 5), ("p3", 7, 4), ("p4", 8, 6), ("p6", 9, 6)])
def test_wallpaper_counts(name, n_classes, n_cyclic):
    g = WallpaperGroup(name)
    assert len(g.finite_order_classes()) == n_classes
    assert len(g.cyclic_subgroup_classes()) == n_cyclic


def test_wallpaper_composition_law(p4):
    a = p4.element(1, (1, 0))
    b = p4.element(2, (0, 1))
    ab = p4.mul(a, b)
    assert ab.k == 3
    assert p4.mul(ab, p4.inv(ab)) == p4.element(0)
    assert not p4.is_finite_order(p4.element(0, (1, 0)))


def test_conjugate_representatives_are_matched(p4):
    for cls in p4.finite_order_classes():
        g = cls.representative
        h = p4.conjugate(g, p4.element(1, (2, -1)))
        assert p4.are_conjugate(g, h)
        assert p4.cyclic_class_of(g)[0].index == p4.cyclic_class_of(h)[0].index


@pytest.mark.parametrize("k, count", [(2, 4), (1, 2)])
def test_torus_fixed_point_counts(k, count):
    assert len(torus_fixed_points(WallpaperGroup("p4").matrix(k))) == count


def test_characters():
    z2, z4 = FiniteGroup.cyclic(2), FiniteGroup.cyclic(4)
    assert character_value(Representation.trivial(z4), 3) == 1
    assert character_value(Representation.regular(z2), 1) == 0
    assert character_value(Representation.cyclic_character(z4, 1), 1) == cyc_root(4, 1)


def test_representation_relations_checked():
    with pytest.raises(InvalidRepresentation):
        Representation(FiniteGroup.cyclic(3), [[[cyc_root(4, 1)]]])


def test_irreducibles_of_cyclic_group():
    irreps = irreducible_representations(FiniteGroup.cyclic(5))
    assert len(irreps) == 5
    # column orthogonality at a non-identity element
    assert sum((r.character(2) for r in irreps), cyc_root(1, 0) * 0) == 0


def test_epsilon_trivial():
    z3, z4 = FiniteGroup.cyclic(3), FiniteGroup.cyclic(4)
    for n in (1, 3, 4):
        g = FiniteGroup.cyclic(n)
        assert epsilon_trivial(g, ClassFunction.from_character(Representation.trivial(g))) == 1
    assert epsilon_trivial(z3, ClassFunction.from_character(Representation.cyclic_character(z3, 1))) == 0
    assert epsilon_trivial(z4, ClassFunction.from_character(Representation.regular(z4))) == 1


def test_class_function_must_be_class_constant(s3):
    vals = [1 if x == s3.identity else 0 for x in s3.elements]
    ClassFunction(s3, tuple(cyc_root(1, 0) * v for v in vals))
    t = next(x for x in s3.elements if s3.element_order(x) == 2)
    bad = [1 if x == t else 0 for x in s3.elements]
    with pytest.raises(ValueError):
        ClassFunction(s3, tuple(cyc_root(1, 0) * v for v in bad))


def test_extend_by_zero():
    f = extend_by_zero(2, {1: 1})
    assert [f(x) for x in range(2)] == [0, 1]
    f = extend_by_zero(4, {1: 1, 3: cyc_root(4, 1)})
    assert [f(x) for x in range(4)] == [0, 1, 0, cyc_root(4, 1)]
    f = extend_by_zero(1, {1: 5})
    assert f(0) == 5


def test_group_text_input():
    g = FiniteGroup.from_text("# S3\n1 0 2\n1 2 0\n")
    assert len(g) == 6
    with pytest.raises(InvalidGroup):
        FiniteGroup.from_text("")


def test_preimage_equals_weyl_orbit_count(s3, p4):
    from orbindex.verify import preimage_counts

    for g in (s3, p4, FiniteGroup.cyclic(12), WallpaperGroup("p6")):
        for _label, pre, orbits in preimage_counts(g):
            assert pre == orbits
