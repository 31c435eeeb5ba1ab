import json
import os
import pathlib

import pytest

import fmbend

DATA = pathlib.Path(os.environ.get("FMBEND_DATA", pathlib.Path(__file__).resolve().parents[1] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_collinear_k23_is_drawable():
    inst = load("k23_collinear.json")
    result = fmbend.solve_collinear(inst)
    assert result["drawable"]
    assert sorted(result["sides"].values()) == ["above", "below"]
    report = fmbend.validate_drawing(inst, result["drawing"], max_bends=0)
    assert report["valid"], report


def test_collinear_k33_is_not_drawable():
    assert not fmbend.solve_collinear(load("k33_collinear.json"))["drawable"]


def test_convex_hull_verdicts():
    assert fmbend.solve_convex_hull(load("two_triangles.json"))["verdict"] == "drawable"
    assert fmbend.solve_convex_hull(load("shared_triangle.json"))["verdict"] == "not_drawable"


def test_strip_gray_vertex():
    inst = load("gray_strips.json")
    result = fmbend.solve_strip(inst)
    assert result["drawable"]
    assert result["gaps"] == {"m": 1}
    assert fmbend.validate_drawing(inst, result["drawing"], mode="strip", max_bends=1)["valid"]
    assert not fmbend.solve_strip(load("k33_collinear.json"), h=1)["drawable"]


def test_duplicate_fixed_positions():
    report = fmbend.validate_instance(load("duplicate_fixed.json"))
    assert not report["valid"]
    assert report["violations"][0]["kind"] == "duplicate fixed position"
    with pytest.raises(fmbend.FmbendError) as err:
        fmbend.solve_collinear(load("duplicate_fixed.json"))
    assert err.value.code == "InvariantError"


def test_errors_carry_codes():
    with pytest.raises(fmbend.FmbendError) as err:
        fmbend.solve_collinear("{not json")
    assert err.value.code == "ParseError"
    with pytest.raises(fmbend.FmbendError) as err:
        fmbend.solve_collinear(load("bent_line.json"))
    assert err.value.code == "NotCollinear"


def test_reductions():
    fm = fmbend.reduce_bpsewc(load("triangle.bpsewc.json"))
    assert len(fm["fixed"]) == 3 and len(fm["mobile"]) == 3 and len(fm["edges"]) == 6
    assert not fmbend.reduce_sat((DATA / "unsat.cnf").read_text())["skeleton_exists"]
    sat = fmbend.reduce_sat((DATA / "sat.cnf").read_text())
    assert sat["skeleton_exists"] and len(sat["assignment"]) == 3


def test_generator_is_seeded_and_svg_is_deterministic():
    a = fmbend.generate("strip", seed=9)
    assert a == fmbend.generate("strip", seed=9)
    drawing = {"positions": {f["id"]: [f["x"], f["y"]] for f in a["fixed"]}, "bends": {}}
    drawing["positions"].update({m["id"]: ["0", "100"] for m in a["mobile"]})
    svg = fmbend.render_svg(a, drawing)
    assert svg.count('class="strip"') == len(a["strips"])
    assert svg == fmbend.render_svg(a, drawing)


def test_planarity():
    k5 = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    assert not fmbend.is_planar(5, k5)
    assert fmbend.is_planar(5, k5[1:])
    assert fmbend.oracle_is_planar(5, k5[1:])
