import cmath
from fractions import Fraction

import pytest

from orbindex.cyclotomic import (
    Cyclotomic,
    cyc_arith,
    cyc_conjugate,
    cyc_root,
    cyc_to_rational,
)
from orbindex.errors import NotRational, OrderCapExceeded


def close(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) < tol


def test_root_examples():
    assert cyc_root(4, 2) == -1
    assert cyc_root(1, 0) == 1
    assert cyc_root(3, 1) + cyc_root(3, 2) == -1


def test_root_exponent_wraps():
    assert cyc_root(5, 7) == cyc_root(5, 2)
    assert cyc_root(5, -1) == cyc_root(5, 4)


def test_arith_examples():
    z4 = cyc_root(4, 1)
    assert cyc_arith(z4, z4, "mul") == -1
    assert cyc_root(2, 1).embed(6) == cyc_root(6, 3)
    assert cyc_arith(Cyclotomic.rational(1), 1 - cyc_root(2, 1), "div") == Fraction(1, 2)


def test_arith_ops_agree_with_complex_embedding():
    a = cyc_root(12, 5) * 3 + Fraction(1, 7)
    b = cyc_root(8, 3) - cyc_root(3, 1)
    for op, f in [("add", complex.__add__), ("sub", complex.__sub__), ("mul", complex.__mul__), ("div", complex.__truediv__)]:
        assert close(cyc_arith(a, b, op), f(complex(a), complex(b)))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        cyc_root(3, 1) / (cyc_root(3, 1) + cyc_root(3, 2) + 1)


def test_conjugate_examples():
    assert cyc_conjugate(cyc_root(4, 1)) == -cyc_root(4, 1)
    assert cyc_conjugate(Cyclotomic.rational(Fraction(3, 5))) == Fraction(3, 5)
    assert cyc_conjugate(1 + cyc_root(3, 1)) == 1 + cyc_root(3, 2)


def test_to_rational_examples():
    s = sum((cyc_root(5, k) for k in range(1, 5)), Cyclotomic.rational(0))
    assert cyc_to_rational(s) == -1
    with pytest.raises(NotRational):
        cyc_to_rational(cyc_root(8, 1))
    assert cyc_to_rational(Cyclotomic.rational(Fraction(7, 3))) == Fraction(7, 3)


def test_mixed_orders_promote_to_lcm():
    x = cyc_root(4, 1) + cyc_root(6, 1)
    assert x.order == 12
    assert close(x, 1j + cmath.exp(1j * cmath.pi / 3))


def test_reduced_finds_smallest_field():
    assert (cyc_root(12, 1) ** 4).reduced().order == 3
    assert (cyc_root(12, 3)).reduced().order == 4
    assert (cyc_root(20, 4) + cyc_root(20, 16)).reduced().order == 5
    # sqrt(2) = zeta_8 + zeta_8^-1 needs Q(zeta_8)
    assert (cyc_root(8, 1) + cyc_root(8, 7)).reduced().order == 8


def test_equal_values_hash_equal():
    a = cyc_root(4, 1)
    b = cyc_root(12, 3)
    c = cyc_root(24, 6)
    assert a == b == c
    assert hash(a) == hash(b) == hash(c)
    assert len({a, b, c, Cyclotomic.rational(2), Cyclotomic.rational(2).embed(10)}) == 2


def test_norm_and_inverse():
    x = 1 - cyc_root(5, 1)
    assert x.norm() == 5  # Phi_5(1)
    assert x * x.inverse() == 1
    assert (2 + cyc_root(7, 3)).inverse() * (2 + cyc_root(7, 3)) == 1


def test_galois_action():
    z = cyc_root(9, 1)
    assert z.galois(2) == cyc_root(9, 2)
    with pytest.raises(ValueError):
        z.galois(3)


def test_serialization_round_trip():
    x = Fraction(-3, 4) + cyc_root(15, 2) * Fraction(5, 6)
    text = x.to_string()
    assert text.endswith("(z = zeta_15)")
    assert Cyclotomic.parse(text) == x
    assert Cyclotomic.parse("0 (z = zeta_1)") == 0


def test_serialization_is_canonical():
    assert cyc_root(12, 3).to_string() == cyc_root(4, 1).to_string() == "1*z^1 (z = zeta_4)"


def test_power():
    z = cyc_root(7, 1)
    assert z**7 == 1
    assert z**-1 == cyc_root(7, 6)
    assert (1 + z) ** 0 == 1


def test_order_cap(monkeypatch):
    monkeypatch.setenv("ORBINDEX_MAX_ORDER", "12")
    cyc_root(12, 1)
    with pytest.raises(OrderCapExceeded):
        cyc_root(4, 1) * cyc_root(5, 1)
    with pytest.raises(OrderCapExceeded):
        cyc_root(13, 1)


def test_no_float_leaks_into_exact_values():
    x = cyc_root(6, 1) / 3
    assert all(isinstance(c, Fraction) for c in x.coeffs)
