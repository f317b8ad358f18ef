import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import make_rng, seeds
from hypflat.curves import builtin_curve, sampled_curve
from hypflat.developable import curvature_fields, fundamental_forms, generate_surface
from hypflat.errors import ContractViolation, CurveSpecError, InvalidParameterError
from hypflat.lorentz import from_ball_array, random_unit_tangent
from hypflat.mesh_io import (
    Mesh,
    curve_from_spec,
    curve_to_spec,
    grid_triangles,
    project_grid,
    project_points,
    read_curve_json,
    read_obj,
    report_json,
    write_channels_csv,
    write_curve_json,
    write_fields_csv,
    write_obj,
    write_report_json,
)


def cone_grid(ns=32, nt=16, t_range=(-2, 2)):
    g = generate_surface(builtin_curve("nomizu2"), None, t_range, ns, nt)
    forms = fundamental_forms(g)
    return g, curvature_fields(g, forms)


def test_triangle_counts():
    tri = grid_triangles(2, 2)
    assert tri.shape == (2, 3) and set(tri.ravel()) == {0, 1, 2, 3}
    ns, nt = 7, 5
    tri = grid_triangles(ns, nt)
    assert len(tri) == 2 * (ns - 1) * (nt - 1) and tri.max() == ns * nt - 1


def test_origin_projects_to_ball_centre():
    v, clipped = project_points(np.array([[1.0, 0, 0, 0]]), "ball")
    assert np.array_equal(v, [[0, 0, 0]]) and not clipped.any()


def test_cone_is_vertical_cylinder_in_upper_model():
    g, curv = cone_grid()
    mesh = project_grid(g, "upper", curv)
    v = mesh.vertices.reshape(g.shape + (3,))
    mu = g.mu1[:, None]
    # rulings run from gamma_- = -mu up to the vertex at infinity
    assert np.allclose(v[..., 0] + 1j * v[..., 1], -mu, atol=1e-12)
    assert np.allclose(v[..., 2], np.exp(g.t)[None, :], rtol=1e-12)
    assert set(mesh.channels) == {"H", "Kext"}
    assert len(mesh.vertices) == 32 * 16 and len(mesh.triangles) == 2 * 31 * 15


def test_ball_vertices_stay_inside_unit_ball():
    g, curv = cone_grid()
    mesh = project_grid(g, "ball", curv)
    assert np.all(np.sum(mesh.vertices ** 2, axis=1) < 1)


def test_upper_model_clips_far_points_with_flag():
    g, _ = cone_grid(8, 8, (-2, 4))
    mesh = project_grid(g, "upper", clip=10.0)
    assert mesh.clipped.any() and not mesh.clipped.all()
    assert mesh.vertices[:, 2].max() == 10.0


def test_unknown_model_is_rejected():
    with pytest.raises(InvalidParameterError):
        project_points(np.array([[1.0, 0, 0, 0]]), "klein")


@given(seeds)
def test_ball_round_trip(seed):
    rng = make_rng(seed)
    pts = np.array([random_unit_tangent(rng).p.vector for _ in range(10)])
    b, _ = project_points(pts, "ball")
    b2, _ = project_points(from_ball_array(b), "ball")
    assert np.max(np.abs(b - b2)) < 1e-12


def test_obj_round_trip_is_bit_exact(tmp_path):
    g, curv = cone_grid()
    mesh = project_grid(g, "ball", curv)
    path = tmp_path / "cone.obj"
    write_obj(mesh, path)
    v, tri = read_obj(path)
    assert np.array_equal(v, mesh.vertices)
    assert np.array_equal(tri, mesh.triangles)
    assert path.read_text().splitlines()[0].startswith("# 512 vertices")


def test_obj_refuses_nan(tmp_path):
    mesh = Mesh(np.array([[0.0, 0, 0], [np.nan, 0, 0], [1, 0, 0]]), np.array([[0, 1, 2]]))
    with pytest.raises(ContractViolation):
        write_obj(mesh, tmp_path / "bad.obj")


def test_mesh_validates_indices_and_channels():
    with pytest.raises(ContractViolation):
        Mesh(np.zeros((3, 3)), np.array([[0, 1, 3]]))
    with pytest.raises(ContractViolation):
        Mesh(np.zeros((3, 3)), np.array([[0, 1, 2]]), {"H": np.zeros(2)})


def test_channel_and_field_csv(tmp_path):
    g, curv = cone_grid(8, 8)
    mesh = project_grid(g, "upper", curv)
    write_channels_csv(mesh, tmp_path / "c.csv")
    rows = (tmp_path / "c.csv").read_text().splitlines()
    assert rows[0] == "index,x,y,z,clipped,H,Kext" and len(rows) == 65
    write_fields_csv(g, curv, tmp_path / "f.csv")
    rows = (tmp_path / "f.csv").read_text().splitlines()
    assert rows[0].split(",")[:3] == ["s", "t", "Lambda"] and len(rows) == 65


def test_builtin_curve_json(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"type": "builtin", "name": "nomizu2", "params": {"radius": 0.5}}))
    c = read_curve_json(p)
    assert c.name == "nomizu2" and c.eval(0.0).mu1 == 0.5


def test_sampled_curve_json_round_trip(tmp_path):
    s = np.linspace(0, 1, 50)
    c = sampled_curve(s, 0.3 * np.exp(1j * s), -0.2j * s + 0.1)
    write_curve_json(c, tmp_path / "c.json")
    back = read_curve_json(tmp_path / "c.json")
    m0, m1 = c.mu_array(s), back.mu_array(s)
    assert np.max(np.abs(m0[0] - m1[0])) <= 1e-15 and np.max(np.abs(m0[1] - m1[1])) <= 1e-15
    assert curve_to_spec(builtin_curve("nra"))["type"] == "builtin"


@pytest.mark.parametrize("text, field", [
    ('{"type": "builtin", "name": "spiral"}', "name"),
    ('{"name": "nomizu1"}', "type"),
    ('{"type": "samples", "s": [0, 1], "mu1": [[0, 0], [1, 0]]}', "mu2"),
    ('{"type": "samples", "s": [0, 1], "mu1": [0, 1], "mu2": [[0, 0], [1, 0]]}', "mu1"),
    ('{"type": "builtin", "name": "nomizu1", "params": {"radius": 3}}', "params"),
    ('{"type": "polygon"}', "type"),
])
def test_curve_spec_errors_name_the_field(text, field):
    with pytest.raises(CurveSpecError) as e:
        curve_from_spec(json.loads(text))
    assert e.value.field == field


def test_malformed_json_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n "type": "builtin",\n "name": \n}')
    with pytest.raises(CurveSpecError) as e:
        read_curve_json(p)
    assert e.value.line == 4


@given(st.dictionaries(st.text(max_size=5), st.floats(allow_nan=True, allow_infinity=True), max_size=5))
def test_report_json_is_deterministic_and_strict(d):
    text = report_json(d)
    assert text == report_json(dict(reversed(list(d.items()))))
    back = json.loads(text)
    for k, v in d.items():
        assert back[k] == (v if np.isfinite(v) else None)


def test_report_json_handles_numpy_and_complex(tmp_path):
    write_report_json({"a": np.arange(3), "b": np.float64(1.5), "c": 1 + 2j, "d": np.bool_(True)}, tmp_path / "r.json")
    assert json.loads((tmp_path / "r.json").read_text()) == {"a": [0, 1, 2], "b": 1.5, "c": [1, 2], "d": True}
