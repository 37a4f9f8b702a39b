import json
import math

import pytest

import tusi


def test_solve_general_cubic():
    report = tusi.solve(tusi.GeneralCubic(1, 6, 9, 2))
    values = [r.value for r in report.roots]
    s = math.sqrt(3)
    assert values == pytest.approx([-2 - s, -2, -2 + s], abs=1e-10)
    assert report.classification.count == 3
    assert [step.form for step in report.pipeline] == ["general", "reduced", "tusi"]


def test_tusi_classification():
    c = tusi.classify_tusi(tusi.TusiForm(1.0))
    assert c.regime == tusi.Regime.delta_eq_1
    assert [iv.multiplicity for iv in c.intervals] == [1, 2]
    assert tusi.classify_tusi(tusi.TusiForm(0.5)).count == 3


def test_cardano_and_chord():
    assert tusi.cardano_reduced(tusi.ReducedForm(3, -4)).root == pytest.approx(1.0, abs=1e-12)
    r = tusi.khayyam_chord_solve(tusi.NormalForm(1, -6))
    assert r.root == pytest.approx(1.6343652930135333, abs=1e-12)
    with pytest.raises(tusi.RegimeError):
        tusi.cardano_reduced(tusi.ReducedForm(-1.0 / 3.0, 0))
    with pytest.raises(ValueError):
        tusi.TusiForm(float("nan"))


def test_options_and_methods():
    opts = tusi.SolveOptions(method=tusi.Method.bisection, tol=1e-10)
    report = tusi.solve(tusi.TusiForm(0.75), opts)
    assert all(r.method == "bisection" for r in report.roots)


def test_geometry():
    pts = tusi.intersect_with_parabola(tusi.build_conic(tusi.NormalForm(1, -2)))
    assert len(pts) == 1
    assert (pts[0].x, pts[0].y) == pytest.approx((1.0, 1.0), abs=1e-12)
    svg = tusi.emit_svg(tusi.build_conic(tusi.NormalForm(-1, 0.7)))
    assert svg.startswith("<?xml") and 'class="hyperbola"' in svg


def test_maximizer():
    m = tusi.maximizer(4)
    assert (m.alpha_star, m.phi_star) == pytest.approx((0.75, 27 / 256), abs=1e-15)


def test_cli_round_trip():
    code, out, err = tusi.run_cli(["tusi", "--delta", "0.5", "--solve", "--json"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert [r["value"] for r in doc["roots"]] == pytest.approx([-0.24402, 0.33333, 0.91068], abs=5e-6)
    code, _, _ = tusi.run_cli(["solve", "--coeffs", "1,0,-1/3,0", "--method", "cardano"])
    assert code == 4


def test_cli_output_matches_schema(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    from pathlib import Path

    schema = json.loads((Path(__file__).parents[2] / "docs" / "envelope.schema.json").read_text())
    commands = [
        ["solve", "--coeffs", "1,6,9,2"],
        ["solve", "--coeffs", "1,0,1,-2", "--method", "chord"],
        ["classify", "--coeffs", "1,-1,0,4/27"],
        ["reduce", "--coeffs", "2,1,-3,5"],
        ["tusi", "--delta", "2", "--solve"],
        ["general", "--n", "5", "--delta", "0.5", "--solve"],
        ["quadratic", "--b", "1", "--c", "1/8"],
        ["plot", "--figure", "hyperbola", "--qprime", "0.7", "--out", str(tmp_path / "h.svg")],
    ]
    for cmd in commands:
        code, out, _ = tusi.run_cli(cmd + ["--json"])
        assert code == 0, cmd
        jsonschema.validate(json.loads(out), schema)
