"""Representation-theoretic ground truth, independent of fixed-point data.

Kernels are described in closed form and the group acts on them by
(g.s)(x) = g s(g^-1 x):

* football(n), generator rotating the north chart by lambda = zeta_n:
  H^0(O(k)) has weights lambda^0..lambda^k (k >= 0); H^1(O(k)) for
  k <= -2 has weights lambda^-1..lambda^-(|k|-1); O(-1) is acyclic.
  H^0 and H^2 of S^2 are trivial representations.  S^2 has no harmonic
  spinors.
* T^2 = C/Lambda with z -> lambda z: H^1 = H^{1,0} + H^{0,1} carries
  lambda and lambda^-1; H^{0,1} = C dzbar carries lambda under the action
  above, so the Dolbeault character of O is 1 - lambda.
* S^2 x S^2 with the swap: H^2 is the permutation representation on two
  classes (trace 0), H^4 is trivial.  H^*(O(k) boxtimes O(k)) is
  H^*(O(k)) tensor itself; the swap has trace (k+1) by Kuenneth with the
  Koszul sign in odd degree, and the identity has trace (k+1)^2.
* wallpaper p_n: [R^2/G] = [T^2/P], so the torus character with the same
  point group is used.

Characters are twisted by a global weight chi:m as chi_m(g) * character.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .errors import NonIntegral, UnsupportedModel, UnsupportedOperator, UnsupportedTwist
from .groups import ClassFunction, FiniteGroup, Representation, WallpaperGroup, epsilon_trivial
from .strata import EquivariantBundle, ManifoldModel, TwistSpec, parse_twist

_ZERO = Cyclotomic.rational(0)
_ONE = Cyclotomic.rational(1)


@dataclass(frozen=True)
class EquivariantCharacter:
    group: FiniteGroup
    values: ClassFunction
    description: str = ""

    def __call__(self, x) -> Cyclotomic:
        return self.values(x)

    @property
    def dimension(self) -> Fraction:
        return self.values(self.group.identity).to_rational()


def _spec(twist) -> TwistSpec:
    if isinstance(twist, TwistSpec):
        return twist
    if isinstance(twist, EquivariantBundle):
        twist = twist.name
    try:
        return parse_twist(twist)
    except UnsupportedTwist:
        raise UnsupportedModel(f"oracle has no closed form for twist {twist!r}")


def _football_weights(lam: Cyclotomic, k: int) -> Cyclotomic:
    if k >= 0:
        return sum((lam**i for i in range(k + 1)), _ZERO)
    if k == -1:
        return _ZERO
    return -sum((lam ** (-i) for i in range(1, -k)), _ZERO)


def _character_values(model: ManifoldModel, operator: str, spec: TwistSpec):
    """Function j -> character at g^j (point group element for wallpaper)."""
    mid = model.id
    if operator not in model.operators:
        raise UnsupportedOperator(f"{model.label} does not support {operator}")
    flat = spec.is_flat
    if operator == "deRham" and not flat:
        raise UnsupportedTwist("deRham kernel character only for flat twists")
    if operator == "spin" and not spec.is_trivial:
        raise UnsupportedTwist("spin kernel character only untwisted")
    if mid == "football":
        n = model.params["n"]

        def chi(j):
            lam = Cyclotomic.root(n, j)
            if operator == "spin":
                return _ZERO
            total = _ZERO
            for t in spec.terms:
                w = Cyclotomic.root(n, t.weight * j)
                if operator == "deRham":
                    total = total + w * 2
                else:
                    total = total + w * _football_weights(lam, t.degree)
            return total

        return n, chi
    if mid in ("torusrot", "wallpaper"):
        if mid == "torusrot":
            n = model.params["n"]
        else:
            n = model.group.n
        if not flat:
            raise UnsupportedTwist("torus models carry only degree-0 twists")

        def chi(j):
            lam = Cyclotomic.root(n, j)
            base = (2 - lam - lam.inverse()) if operator == "deRham" else (1 - lam)
            return sum((base * Cyclotomic.root(n, t.weight * j) for t in spec.terms), _ZERO)

        return n, chi
    if mid == "symprod_s2":

        def chi(j):
            total = _ZERO
            for t in spec.terms:
                sign = Cyclotomic.rational((-1) ** (t.weight * j))
                if operator == "deRham":
                    base = 4 if j == 0 else 2
                else:
                    base = (t.degree + 1) ** 2 if j == 0 else t.degree + 1
                total = total + sign * base
            return total

        return 2, chi
    raise UnsupportedModel(f"no closed-form kernel for model {mid!r}")


def kernel_character(model: ManifoldModel, operator: str, twist=None) -> EquivariantCharacter:
    spec = _spec(twist)
    n, chi = _character_values(model, operator, spec)
    group = FiniteGroup.cyclic(n)
    values = ClassFunction.from_callable(group, chi)
    return EquivariantCharacter(group, values, f"{model.label} {operator} {spec}")


def closed_form_L(model: ManifoldModel, operator: str, twist, g) -> Cyclotomic:
    """Lefschetz number at g (an element index of Z/n, or a point-group exponent)."""
    if isinstance(model.group, WallpaperGroup) and not isinstance(g, int):
        g = g.k
    return kernel_character(model, operator, twist)(int(g) % model.point_group.n)


def lefschetz_average(model: ManifoldModel, operator: str, twist=None, rho=None) -> int:
    """(1/|G|) sum_g chi(g) tr rho(g): index of the rho-twisted quotient operator."""
    from .engine import resolve_rho

    char = kernel_character(model, operator, twist)
    rho = resolve_rho(model.group, rho)
    # rho lives on the model's (point) group, which is Z/n with the same indexing
    rho_values = ClassFunction.from_callable(char.group, lambda j: rho.character(_element(model, j)))
    value = epsilon_trivial(char.group, char.values * rho_values).to_rational()
    if value.denominator != 1:
        raise NonIntegral(f"oracle average {value} is not an integer")
    return int(value)


def _element(model: ManifoldModel, j: int):
    if isinstance(model.group, WallpaperGroup):
        return model.group.element(j)
    return j
