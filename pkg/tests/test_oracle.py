import pytest

from orbindex import oracle
from orbindex.cyclotomic import cyc_root
from orbindex.errors import UnsupportedTwist
from orbindex.strata import football, symprod_s2, torusrot, wallpaper


def test_kernel_character_examples():
    ch = oracle.kernel_character(football(3), "dolbeault", "O:4")
    assert ch(1) == 1 + cyc_root(3, 1)
    assert ch.dimension == 5
    assert oracle.kernel_character(torusrot(4), "deRham")(1) == 2
    for n in range(1, 7):
        ch = oracle.kernel_character(football(n), "dolbeault", "O:-1")
        assert all(ch(x) == 0 for x in range(n))


def test_lefschetz_average_examples():
    assert oracle.lefschetz_average(football(3), "dolbeault", "O:4") == 2
    assert oracle.lefschetz_average(symprod_s2(), "dolbeault", "O:0") == 1
    assert oracle.lefschetz_average(football(2), "deRham") == 2


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("k", range(0, 6))
def test_closed_form_geometric_sum(n, k):
    m = football(n)
    lam = cyc_root(n, 1)
    assert oracle.closed_form_L(m, "dolbeault", f"O:{k}", 1) == sum((lam**j for j in range(k + 1)), 0 * lam)


def test_derham_closed_form_is_fixed_point_count():
    # classical Lefschetz: L(g) = chi(M^g)
    assert oracle.closed_form_L(football(5), "deRham", "O:0", 2) == 2
    assert oracle.closed_form_L(torusrot(2), "deRham", "O:0", 1) == 4
    assert oracle.closed_form_L(torusrot(3), "deRham", "O:0", 1) == 3
    assert oracle.closed_form_L(torusrot(6), "deRham", "O:0", 1) == 1
    assert oracle.closed_form_L(symprod_s2(), "deRham", "O:0", 1) == 2


def test_wallpaper_uses_torus_presentation():
    for n, name in ((2, "p2"), (4, "p4"), (6, "p6")):
        for x in range(n):
            assert oracle.closed_form_L(wallpaper(name), "dolbeault", "O:0", x) == oracle.closed_form_L(torusrot(n), "dolbeault", "O:0", x)


def test_identity_gives_upstairs_index():
    assert oracle.closed_form_L(football(3), "dolbeault", "O:4", 0) == 5
    assert oracle.closed_form_L(torusrot(4), "deRham", "O:0", 0) == 0


def test_unsupported():
    with pytest.raises(UnsupportedTwist):
        oracle.kernel_character(football(3), "deRham", "O:1")
