"""End-to-end smoke tests for the Python bindings."""

import torsorlab as tl


def test_group_construction():
    g = tl.group("z6")
    assert g.order == 6
    assert g.name == "z6"
    assert g.identity == 0
    assert g.add(3, 4) == 1
    assert g.neg(1) == 5

    prod = tl.group("z2xz4")
    assert prod.order == 8


def test_gamma_fixed_points():
    g = tl.group("z6")
    x, a, b = [0, 3], [0, 2, 4], [0, 2, 4]
    assert tl.gamma(g, x, a, x, b, x) == x
    assert tl.gamma(g, x, a, [0], b, x) == [0]


def test_sigma_torsor_identity():
    g = tl.group("z4")
    assert tl.sigma(g, [0, 2], [0, 1], [0, 1], [2, 3]) == [2, 3]


def test_mirror_maps_agree_on_abelian():
    g = tl.group("z4")
    args = ([0, 1], [0, 2], [1, 3], [0, 2], [2])
    assert tl.gamma(g, *args) == tl.gamma(g, *args, opposite=True)


def test_enumeration():
    z4 = tl.group("z4")
    assert len(tl.grassmannian(z4)) == 3
    assert tl.left_transversals(z4, [0, 2]) == [[0, 1], [0, 3], [1, 2], [2, 3]]
    assert tl.is_transversal(z4, [0, 2], [0, 1])
    assert not tl.is_transversal(z4, [0, 2], [0, 2])

    k4 = tl.group("k4")
    assert len(tl.carrier_uab(k4, [0, 1], [0, 2])) == 2
    assert len(tl.carrier_ub(z4, [0, 2])) == 4


def test_sign_table():
    rep = tl.sign_table(tl.group("s3"))
    assert len(rep["rows"]) == 24
    assert rep["all_match"] and rep["all_unique"]
    assert rep["rows"][0]["label"] == "id"


def test_suite_runs_clean():
    report = tl.run_suite(tl.group("z4"), seed=1)
    assert report["summary"]["fail"] == 0
    assert report["group"] == "z4"
    ids = [c["check_id"] for c in report["checks"]]
    assert "meta/registry-coverage" in ids
