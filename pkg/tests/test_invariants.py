import json

import pytest

from toricgb.groebner import toric_basis
from toricgb.harness import a1b_config, b2_case1_config, enumerate_configs, fig3_config
from toricgb.invariants import (
    ConsistencyError,
    bounds,
    compute_report,
    face_analysis,
    face_bounds,
    gcm_check,
    hilbert_function,
    is_isolated_singularity,
    is_normal,
    multiplicity,
    multiplicity_by_counting,
    multiplicity_from_basis,
    reduction_number,
)
from toricgb.lattice_core import Configuration

from conftest import full_m


def test_reduction_number_examples(after_a3):
    assert reduction_number(after_a3) == 2
    for alpha, d in [(4, 2), (5, 2), (4, 3), (5, 3)]:
        assert reduction_number(a1b_config(alpha, d)) == alpha - 2
    for d in (3, 4):
        assert reduction_number(b2_case1_config(d)) == 2
    assert fig3_config().c == 12
    assert reduction_number(fig3_config()) == 2


def test_reduction_number_cap_is_enforced(after_a3):
    with pytest.raises(ConsistencyError):
        reduction_number(after_a3, cap=1)


def test_multiplicity_examples(after_a3, c1b):
    assert multiplicity(after_a3) == 4
    assert multiplicity(c1b) == 9
    assert multiplicity_by_counting(c1b) == 9
    for alpha, d in [(2, 3), (3, 2), (3, 3), (4, 2), (2, 4), (4, 3)]:
        assert multiplicity(full_m(alpha, d)) == alpha ** (d - 1)


def test_hilbert_function_after_a3(after_a3):
    assert hilbert_function(after_a3, 4) == [1, 4, 9, 13, 17]
    _, _, h = multiplicity_from_basis(toric_basis(after_a3), 2)
    assert h == [1, 2, 2, -1]


def test_multiplicity_is_order_independent(c1b, after_a3):
    for cfg in (after_a3, c1b):
        assert {multiplicity_from_basis(toric_basis(cfg, o), cfg.c)[0] for o in ("revlex", "lex", "xblock")} == {
            multiplicity(cfg)}


def test_faces_after_a3(after_a3):
    faces = face_analysis(after_a3)
    assert [(f.index_set, f.dimension, f.is_full) for f in faces] == [((1,), 0, True), ((2,), 0, True)]


def test_faces_a1b():
    faces = {f.index_set: f for f in face_analysis(a1b_config(4, 3))}
    assert not faces[(3,)].is_full and faces[(3,)].points_in_A == 4
    assert faces[(1,)].is_full and faces[(2,)].is_full
    assert all(faces[I].is_full for I in [(1, 2), (1, 3), (2, 3)])
    assert face_bounds(a1b_config(4, 3), list(faces.values()))["a2ii"] == 4


def test_faces_full_m():
    assert all(f.is_full for f in face_analysis(full_m(3, 3)))


def test_normality(after_a3, c1b):
    for alpha, d in [(2, 3), (3, 3), (4, 2), (2, 4)]:
        assert is_normal(full_m(alpha, d))
    assert not is_normal(after_a3)
    assert not is_normal(c1b)


@pytest.mark.parametrize("cfg", list(enumerate_configs(2, 3)) + list(enumerate_configs(3, 3)), ids=str)
def test_normality_cap_is_enough(cfg):
    assert is_normal(cfg) == is_normal(cfg, cap=cfg.d + 1)


def test_isolated_singularity(after_a3, c1b):
    assert is_isolated_singularity(full_m(3, 3))
    assert is_isolated_singularity(after_a3)
    for alpha in (4, 5, 6):
        assert is_isolated_singularity(a1b_config(alpha, 3))
    assert not is_isolated_singularity(Configuration(4, 2, ((2, 2), (1, 3))))


def test_gcm(c1b, after_a3):
    g = gcm_check(c1b)
    assert g.status == "no" and g.witness == (2, 1, 0) and g.direction == 0
    assert g.to_dict()["direction"] == 1
    full = gcm_check(full_m(2, 3))
    assert full.status == "yes" and full.difference == []
    iso = gcm_check(after_a3)
    assert iso.status == "yes" and iso.difference == [(2, 2)]
    with pytest.raises(ValueError):
        gcm_check(after_a3, degree_cap=1)


def test_bounds_after_a3(after_a3):
    b = bounds(after_a3, 2, 4)
    assert {k: b[k] for k in ("eg", "a1", "a3", "a4", "a6", "sturmfels")} == {
        "eg": 3, "a1": 3, "a3": 3, "a4": 5, "a6": 10, "sturmfels": 8}


def test_bounds_r1(after_a3):
    assert bounds(after_a3, 1, 4)["a1"] == 2


def test_report(after_a3, c1b):
    rep = compute_report(after_a3)
    doc = json.loads(json.dumps(rep.to_dict()))
    assert (doc["r"], doc["deg"], doc["codim"], doc["bounds"]["eg"]) == (2, 4, 2, 3)
    assert doc["gb_max_degree"] == {"revlex": 3, "xblock": 3, "lex": 4}
    assert doc["normal"] is False and doc["isolated_singularity"] is True
    assert set(doc["bounds"]) >= {"eg", "a1", "a3", "a4", "a2ii", "a2iii", "a6", "sturmfels"}
    c = compute_report(c1b).to_dict()
    assert c["gcm"] == {"status": "no", "degree_cap": 12, "window": 6, "witness": [2, 1, 0], "direction": 1}
    m = compute_report(full_m(2, 3)).to_dict()
    assert (m["normal"], m["r"], m["deg"]) == (True, 1, 4)


MATRIX = list(enumerate_configs(2, 3)) + list(enumerate_configs(3, 3)) + list(enumerate_configs(4, 2))


@pytest.mark.parametrize("cfg", MATRIX, ids=str)
def test_universal_properties(cfg):
    deg = multiplicity(cfg)
    r = reduction_number(cfg, cap=deg - cfg.c)
    b = bounds(cfg, r, deg)
    assert r <= deg - cfg.c and r <= b["a2ii"] and r <= b["a2iii"]
    assert deg % cfg.alpha == 0
    assert multiplicity_by_counting(cfg) == deg
    if is_normal(cfg):
        assert gcm_check(cfg).status == "yes"
