import json
from fractions import Fraction

import pytest

from orbindex.cyclotomic import cyc_root
from orbindex.errors import UnsupportedModel, UnsupportedParams, UnsupportedTwist, ValidationFailure
from orbindex.strata import (
    catalog,
    catalog_instances,
    dump_model,
    football,
    instantiate,
    load_model,
    parse_twist,
    symprod_s2,
    torusrot,
    validate_model,
    wallpaper,
)


def test_catalog_contents():
    ids = {f["id"] for f in catalog()}
    assert {"football", "torusrot", "symprod_s2", "wallpaper"} <= ids
    inst = catalog_instances()
    assert {p["n"] for m, p in inst if m == "football"} == set(range(1, 13))
    assert ("wallpaper", {"name": "p4"}) in inst
    assert ("symprod_s2", {}) in inst


@pytest.mark.parametrize("mid, params", catalog_instances())
def test_every_catalog_model_validates(mid, params):
    assert validate_model(instantiate(mid, **params)).ok


def _class_of_order(model, order):
    return next(c for c in model.classes() if c.order == order)


def test_torus_fixed_point_counts():
    m2 = torusrot(2)
    assert len(m2.components[_class_of_order(m2, 2).index]) == 4
    m4 = torusrot(4)
    assert len(m4.components[_class_of_order(m4, 4).index]) == 2
    m3 = torusrot(3)
    assert len(m3.components[_class_of_order(m3, 3).index]) == 3


def test_football_pole_eigenvalues():
    m = football(4)
    c = _class_of_order(m, 4)
    north, south = m.components[c.index]
    assert north.normal_at(1)[0][1] == cyc_root(4, 1)
    assert south.normal_at(1)[0][1] == cyc_root(4, -1)


def test_football_line_bundle_weights():
    m = football(3)
    c = _class_of_order(m, 3)
    b = m.line_bundle(4)
    mus = [b.at(c.index, i, 1)[0][1] for i in range(2)]
    assert mus == [cyc_root(3, 1), 1]
    assert all(mu == 1 for entries in m.line_bundle(0).data.values() for _, w in entries for mu in w.values())


def test_direct_sum_data():
    m = football(3)
    b = m.bundle("sum:O:1,O:-1")
    assert b.rank == 2
    sphere = m.components[0][0]
    roots = [r for r, _ in b.at(0, 0, 1)]
    assert [sum(x * sphere.integrals[(1,)] for x in r) for r in roots] == [1, -1]


def test_wallpaper_strata_match_rotation_centers():
    for name in ("p2", "p3", "p4", "p6"):
        m = wallpaper(name)
        for c in m.classes():
            if c.order > 1:
                # one orbit representative point per rotation-center class
                assert len(m.components[c.index]) == 1


def test_symprod_diagonal():
    m = symprod_s2()
    diag = m.components[_class_of_order(m, 2).index][0]
    assert diag.dim == 2
    assert diag.normal_at(1)[0][1] == -1
    assert diag.normal_at(1)[0][0] == diag.tangent_roots[0]


def test_validation_rejects_trivial_normal_eigenvalue():
    doc = json.loads(dump_model(football(2)))
    doc["strata"][1]["components"][0]["normal"]["1"][0][1] = "1 (z = zeta_1)"
    with pytest.raises(ValidationFailure) as exc:
        validate_model(load_model(doc))
    assert "eigenvalue" in exc.value.invariant


def test_validation_rejects_bad_spin_lift():
    doc = json.loads(dump_model(football(3)))
    doc["strata"][1]["components"][0]["spin_lift"]["1"] = [[6, 2]]  # squares to zeta_3^2, not zeta_3
    with pytest.raises(ValidationFailure) as exc:
        validate_model(load_model(doc))
    assert "spin" in exc.value.invariant


def test_validation_report_without_raising():
    doc = json.loads(dump_model(football(2)))
    doc["strata"][1]["components"][0]["normal"]["1"][0][1] = "1 (z = zeta_1)"
    report = validate_model(load_model(doc), raise_on_failure=False)
    assert not report.ok


@pytest.mark.parametrize("mid, params", [("football", {"n": 5, "lift": "-"}), ("torusrot", {"n": 6}), ("symprod_s2", {}), ("wallpaper", {"name": "p3"})])
def test_dump_load_round_trip(mid, params):
    m = instantiate(mid, **params)
    again = load_model(dump_model(m))
    assert dump_model(again) == dump_model(m)
    assert validate_model(again).ok


def test_bad_params():
    with pytest.raises(UnsupportedParams):
        torusrot(5)
    with pytest.raises(UnsupportedModel):
        instantiate("klein_bottle")
    with pytest.raises(UnsupportedParams):
        instantiate("symprod_s2", n=2)


def test_twist_grammar():
    assert str(parse_twist("O:3")) == "O:3"
    assert str(parse_twist("sum:O:1,O:-2/chi:1")) == "sum:O:1,O:-2/chi:1"
    assert parse_twist("O:0").is_trivial
    assert parse_twist("O:0/chi:2").is_flat
    for bad in ("O:", "L:1", "sum:", "O:1/chi:x"):
        with pytest.raises(UnsupportedTwist):
            parse_twist(bad)


def test_torus_refuses_curved_twists():
    with pytest.raises(UnsupportedTwist):
        torusrot(4).bundle("O:1")
