"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import spin7cells as s7


def test_octonion_basics():
    e0 = [1.0] + [0.0] * 7
    e1 = [0.0, 1.0] + [0.0] * 6
    x = list(np.random.default_rng(1).normal(size=8))
    assert s7.octonion_mul(e0, x) == pytest.approx(x)
    assert s7.norm([1.0] * 8) == 8.0
    xinv = s7.inverse(x)
    assert s7.octonion_mul(x, xinv) == pytest.approx(e0, abs=1e-12)
    assert s7.conj(e1) == pytest.approx([0.0, -1.0] + [0.0] * 6)


def test_mult_table_derivation():
    rows = dict(((i, j), (s, k)) for i, j, s, k in s7.mult_table())
    assert rows[(1, 2)] == (1, 3)
    assert rows[(2, 1)] == (-1, 3)
    derived = s7.derive_mult_table()
    assert derived["survivors"] == 1
    assert derived["matches_shipped"]


def test_generators_and_membership():
    a = s7.generator_matrix("A", [0.3, -0.2, 0.1])
    assert s7.is_special_orthogonal(a)
    assert s7.is_g2(a)
    d = s7.generator_matrix("D", [0.4, 0.2])
    assert s7.is_spin7(d)
    assert not s7.is_g2(d)
    assert s7.is_spin7(-np.eye(8))


def test_chart_roundtrips():
    v7 = [0.3, -0.2, 0.1, 0.4, 0.2, -0.3, 0.25]
    a = s7.chart_projection(7, v7)
    assert s7.invert_p0_phi7(a) == pytest.approx(v7, abs=1e-9)

    v6 = [0.3, -0.2, 0.1, 0.4, 0.2, -0.3]
    t = s7.chart_projection(6, v6)
    assert s7.invert_chart_numeric(6, t) == pytest.approx(v6, abs=1e-8)

    with pytest.raises(s7.BoundaryError):
        s7.invert_p0_phi7([1.0] + [0.0] * 7)


def test_factorize():
    rng = np.random.default_rng(2)

    def ball(d):
        while True:
            p = rng.uniform(-1, 1, d)
            if (p * p).sum() <= 1.0:
                return 0.9 * p

    g = (
        s7.char_map(6, list(np.concatenate([ball(3), ball(2), ball(1)])))
        @ s7.char_map(7, list(np.concatenate([ball(3), ball(2), ball(2)])))
        @ s7.char_map(5, list(np.concatenate([ball(3), ball(2)])))
        @ s7.char_map(3, list(ball(3)))
    )
    f = s7.factorize(g)
    assert f["generators"] == [6, 7, 5, 3]
    assert f["cell"] == "e21"
    assert np.abs(f["reconstruction"] - g).max() < 1e-6

    ident = s7.factorize(np.eye(8))
    assert ident["generators"] == []
    assert ident["dim"] == 0


def test_census_and_polynomial():
    cells = s7.cell_census("spin7")
    assert len(cells) == 16
    dims = sorted(d for _, _, d in cells)
    assert dims == [0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 21]
    poly = np.array(s7.poincare_polynomial("spin7"))
    expanded = np.array([1])
    for n in [3, 5, 6, 7]:
        nxt = np.zeros(len(expanded) + n, dtype=int)
        nxt[: len(expanded)] += expanded
        nxt[n:] += expanded
        expanded = nxt
    assert (poly == expanded).all()
    assert len(s7.cell_census("spin8")) == 32


def test_boundary_relations():
    rels = dict(s7.boundary_relations("spin7"))
    assert rels[6] == [3, 5]
    assert rels[21] == [14, 15, 16, 18]


def test_category_reports():
    assert s7.cup_length("spin7") == 5
    assert s7.cup_length("spin8") == 6
    assert s7.ls_category_report("spin7") == (5, 5, "determined")
    assert s7.ls_category_report("spin8") == (6, 6, "determined")
    for i in range(1, 6):
        assert s7.ls_category_report(f"f{i}") == (i, i, "determined")
    for i in range(1, 4):
        assert s7.ls_category_report(f"fp{i}") == (i, i, "determined")


def test_ledgers():
    ss = s7.ss_ledger_check()
    assert ss["ok"], ss["failure"]
    sq = s7.sq2_check()
    assert sq["ok"], sq["failure"]
    assert s7.attach_degrees("S14 + join(S5, CP3)") == [8, 10, 12, 14]


def test_join_model():
    rng = np.random.default_rng(3)
    u = rng.normal(size=2)
    u /= np.linalg.norm(u) * (1 - 1e-15)
    v = 0.4 * rng.normal(size=3)
    p = list(u) + list(v)
    img = s7.join_box_to_ball(2, 3, p)
    assert np.linalg.norm(img) == pytest.approx(1.0, abs=1e-9)
    back = s7.join_ball_to_box(2, 3, img)
    assert back == pytest.approx(p, abs=1e-9)


def test_filtration_ledger():
    steps = s7.filtration_ledger()
    assert [s["new_cell_dims"] for s in steps] == [
        [3, 5, 7],
        [6, 8, 10, 12],
        [9, 11, 13, 15],
        [14, 16, 18],
        [21],
    ]
    assert len(s7.filtration_ledger("su4")) == 3
    assert len(s7.filtration_ledger("spin8")) == 6


def test_boundary_face_sampling():
    report = s7.verify_boundaries_numeric(6, samples_per_face=5)
    assert report["violations"] == []
    assert report["passed"]


def test_run_verify_subset():
    rows = s7.run_verify("cayley", samples=30)
    assert rows and all(r["status"] == "pass" for r in rows)
