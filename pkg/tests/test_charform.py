from fractions import Fraction
from math import factorial

import mpmath
import pytest
import sympy

from orbindex.charform import (
    GradedClass,
    ahat_root_coeffs,
    dolbeault_normal_coeffs,
    equiv_chern,
    integrate,
    local_density,
    series_eval,
    spin_normal_coeffs,
    td_root_coeffs,
    uhat_density,
)
from orbindex.cyclotomic import Cyclotomic, cyc_root
from orbindex.errors import SingularSeries, UnsupportedTwist
from orbindex.strata import football, symprod_s2


def sympy_taylor(expr, x, degree):
    s = sympy.series(expr, x, 0, degree + 1).removeO()
    return [Fraction(str(s.coeff(x, j))) for j in range(degree + 1)]


def test_ahat_against_sympy_series():
    x = sympy.Symbol("x")
    assert list(ahat_root_coeffs(6)) == sympy_taylor((x / 2) / sympy.sinh(x / 2), x, 6)
    assert ahat_root_coeffs(6)[2] == Fraction(-1, 24)


def test_td_against_sympy_series():
    x = sympy.Symbol("x")
    assert list(td_root_coeffs(6)) == sympy_taylor(x / (1 - sympy.exp(-x)), x, 6)
    assert list(td_root_coeffs(2)) == [1, Fraction(1, 2), Fraction(1, 12)]


def test_dolbeault_normal_constant_term():
    assert dolbeault_normal_coeffs(-1, 3)[0] == Fraction(1, 2)


@pytest.mark.parametrize("n, k", [(3, 1), (4, 3), (5, 2), (12, 7)])
def test_normal_factors_against_numeric_taylor(n, k):
    # sympy.series mis-expands 1/(1 - w e^-x) for complex w at order 4; mpmath is used instead
    mpmath.mp.dps = 30
    w = mpmath.exp(2j * mpmath.pi * k / n)
    dol = mpmath.taylor(lambda x: 1 / (1 - e_inv(w) * mpmath.exp(-x)), 0, 6)
    s = mpmath.exp(1j * mpmath.pi * k / n)
    spin = mpmath.taylor(lambda x: 1 / (s * mpmath.exp(x / 2) - mpmath.exp(-x / 2) / s), 0, 6)
    ours_dol = dolbeault_normal_coeffs(cyc_root(n, k), 6)
    ours_spin = spin_normal_coeffs(cyc_root(2 * n, k), 6)
    for j in range(7):
        assert abs(complex(ours_dol[j]) - complex(dol[j])) < 1e-12
        assert abs(complex(ours_spin[j]) - complex(spin[j])) < 1e-12


def e_inv(w):
    return 1 / w


@pytest.mark.parametrize("n", range(2, 13))
def test_normal_factor_identity(n):
    for k in range(1, n):
        lam = cyc_root(n, k)
        for s in (cyc_root(2 * n, k), -cyc_root(2 * n, k)):
            shift = [s * Fraction(1, 2**j * factorial(j)) for j in range(7)]
            spin = spin_normal_coeffs(s, 6)
            prod = [sum((spin[i] * shift[j - i] for i in range(j + 1)), Cyclotomic.rational(0)) for j in range(7)]
            assert prod == dolbeault_normal_coeffs(lam, 6)


def test_singular_series_rejected():
    with pytest.raises(SingularSeries):
        dolbeault_normal_coeffs(1)
    with pytest.raises(SingularSeries):
        spin_normal_coeffs(-1)


def test_graded_algebra_truncates():
    x = GradedClass.linear(("x", "y"), 2, (1, 0))
    y = GradedClass.linear(("x", "y"), 2, (0, 1))
    assert (x * y * x).coeffs == {}
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y).exp().coefficient((1, 1)) == 1


def test_series_eval_multiplicative_on_sum_of_roots():
    # Td(a) Td(b) is the series evaluated root by root; check against exp identity
    a = GradedClass.linear(("a", "b"), 2, (1, 0))
    b = GradedClass.linear(("a", "b"), 2, (0, 1))
    assert (a + b).exp() == a.exp() * b.exp()
    td = series_eval("TdRoot", a) * series_eval("TdRoot", b)
    assert td.coefficient((1, 1)) == Fraction(1, 4)


def test_equiv_chern_examples():
    m = football(3)
    c3 = m.classes()[1]
    north = m.components[c3.index][0]
    assert north.location == "N"
    data = m.bundle("O:4").at(c3.index, 0, 1)
    assert equiv_chern(data, north).constant_term() == cyc_root(3, 1)
    assert equiv_chern(m.trivial_bundle().at(c3.index, 0, 1), north) == 1
    from orbindex.strata import FixedComponent

    pt = FixedComponent(0, "pt", 0, 1, (), {(): Fraction(1)}, (), {1: ()}, None, "pt")
    assert equiv_chern([((), 1), ((), -1)], pt) == 0


def test_local_density_examples():
    m = football(2)
    c2 = m.classes()[1]
    pole = m.components[c2.index][0]
    assert local_density("dolbeault", pole, 1) == Fraction(1, 2)
    assert local_density("deRham", pole, 1) == 1
    s = symprod_s2()
    diag = s.components[s.classes()[1].index][0]
    u = GradedClass.linear(diag.symbols, 1, diag.tangent_roots[0])
    dens = local_density("dolbeault", diag, 1)
    assert dens == Fraction(1, 2) + u * Fraction(1, 2)
    assert integrate(diag, dens) == 1


def test_derham_rejects_curved_twist():
    m = football(2)
    Y = m.components[0][0]
    with pytest.raises(UnsupportedTwist):
        local_density("deRham", Y, 1, m.bundle("O:1").at(0, 0, 1))


def test_integrate_examples():
    m = football(2)
    sphere = m.components[0][0]
    e = GradedClass.linear(sphere.symbols, 1, sphere.tangent_roots[0])
    assert integrate(sphere, e) == 2
    assert integrate(sphere, GradedClass.constant(sphere.symbols, 1, 7)) == 0
    pole = m.components[1][0]
    assert integrate(pole, GradedClass.constant((), 0, cyc_root(8, 1))) == cyc_root(8, 1)


def test_td_of_sphere_integrates_to_one():
    sphere = football(1).components[0][0]
    assert integrate(sphere, uhat_density("dolbeault", sphere, 1)) == 1
    assert integrate(sphere, uhat_density("spin", sphere, 1)) == 0
    assert integrate(sphere, uhat_density("deRham", sphere, 1)) == 2
