"""Smoke tests for the compiled module (driven with PYTHONPATH=build/python)."""

import math

import pytest

import telesum


def test_tree_matches_oracle():
    cut = telesum.tree_cut(8)
    interior = sorted(cut["interior"])
    assert interior == sorted(telesum.unimodular_oracle(8))
    assert set(cut["boundary"]) <= set(cut["interior"])
    for xa, xb, ya, yb, d in interior:
        assert xa * yb - xb * ya == 1 == d


def test_theorem1_limit_and_identity():
    boundary = telesum.theorem1(300, "boundary")
    assert abs(4.0 * boundary["value"] - math.pi) < 5e-4
    direct = telesum.theorem1(300, "direct")
    assert abs(direct["value"] - boundary["value"]) <= 1e-12 * direct["value"]
    assert direct["terms"] > boundary["terms"]


def test_theorem2_and_tropical():
    assert abs(telesum.theorem2(400, "boundary")["value"] - (math.pi / 2 - 1)) < 2e-3
    lin, sq = telesum.tropical_sums(400)
    assert abs(lin - 2.0) < 0.2
    assert abs(sq - (2.0 - math.pi / 2)) < 1e-3


def test_scalar_series():
    assert abs(telesum.mt_scalar(2, 2, 2, 400, coprime=True) - 1.0 / 3.0) < 1e-3
    assert telesum.scalar_kernels_exact(123, 456)
    with pytest.raises(Exception):
        telesum.mt_scalar(0, 0, 1, 100)


def test_number_theory():
    assert telesum.sigma1(28) == 56
    assert telesum.sublattice_count(12) == telesum.sigma1(12) == 28
    assert abs(telesum.zeta(2.0) - math.pi**2 / 6.0) < 1e-12
    check = telesum.dirichlet_sigma(3.0, 2000)
    assert check["within_bound"]
    assert check["residual"] < 3e-3


def test_detn_and_theorem3():
    pairs = telesum.detn_pairs(2, 1)
    assert pairs == [(1, 1, -1, 1, 2)]
    r = telesum.theorem3(6, 150)
    assert abs(r["value"] - math.pi) < 0.1  # sigma1(6) = 12 makes the limit pi
    assert 0.0 < r["axis_ray_subtotal"] < r["value"]


def test_triple_sums():
    r = telesum.d111(0.0, 1.0, 6)
    assert r["total"]["value"] == r["collinear"]["value"] + r["noncollinear"]["value"]
    t4 = telesum.theorem4(0.0, 1.0, 0.0, 6)
    assert t4["value"] == r["noncollinear"]["value"]
    e = telesum.eisenstein(0.0, 1.0, 3.0, 60)
    assert abs(e["value"] - 2.3294571) < 1e-2


def test_report_json_round():
    import json

    text = telesum.report_json("theorem1", box=80, method="boundary")
    doc = json.loads(text)
    assert doc["series"] == "theorem1"
    assert doc["reference_value"] == pytest.approx(math.pi)
    assert doc["rel_error"] < 1e-2
    with pytest.raises(ValueError):
        telesum.report_json("no-such-series")


def test_zagier_chain_small():
    r = telesum.zagier_chain(coeff_box=8, n_series=8, box=120, n_exact=1000)
    d = r["d_closed_form"]
    assert d == pytest.approx(math.pi**3 * 1.2020569031595943, rel=1e-12)
    assert r["rel_ad"] < 0.15
    assert r["rel_cd"] < 0.02
