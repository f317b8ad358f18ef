"""Meshes in the ball and upper half-space models, and file formats.

Floats are written with 17 significant digits, which round-trips doubles
exactly.
"""

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .curves import BUILTIN_DEFAULTS, ExampleParams, builtin_curve, sampled_curve
from .errors import ContractViolation, CurveSpecError, InvalidParameterError
from .lorentz import ball_array
from .tolerances import resolve

FLOAT = "%.17g"


@dataclass
class Mesh:
    """Grid mesh with ``ns * nt`` vertices and two triangles per cell."""

    vertices: np.ndarray
    triangles: np.ndarray
    channels: dict = field(default_factory=dict)
    clipped: np.ndarray = None
    model: str = "ball"
    shape: tuple = ()

    def __post_init__(self):
        n = len(self.vertices)
        if self.triangles.size and (self.triangles.min() < 0 or self.triangles.max() >= n):
            raise ContractViolation("triangle index out of range")
        for k, v in self.channels.items():
            if len(v) != n:
                raise ContractViolation(f"channel {k!r} has {len(v)} values for {n} vertices")
        if self.clipped is None:
            self.clipped = np.zeros(n, bool)


def grid_triangles(ns, nt):
    """Two triangles per cell of an ``ns x nt`` vertex grid (row-major)."""
    i, j = np.meshgrid(np.arange(ns - 1), np.arange(nt - 1), indexing="ij")
    a = (i * nt + j).ravel()
    b, c, d = a + 1, a + nt, a + nt + 1
    return np.stack([np.stack([a, c, b], 1), np.stack([b, c, d], 1)], 1).reshape(-1, 3)


def project_points(f, model="ball", clip=None):
    """Sigma coordinates -> 3-d model coordinates and a clipping mask."""
    f = np.asarray(f, float)
    clip = resolve(None).upper_clip if clip is None else clip
    if model == "ball":
        return ball_array(f), np.zeros(f.shape[:-1], bool)
    if model != "upper":
        raise InvalidParameterError(f"model must be 'ball' or 'upper', got {model!r}")
    den = f[..., 0] - f[..., 3]
    with np.errstate(divide="ignore", invalid="ignore"):
        r = 1.0 / den
        w = (f[..., 1] + 1j * f[..., 2]) * r
    w = np.where(np.isfinite(w), w, 0)
    big = np.abs(w) > clip
    w = np.where(big, w / np.where(big, np.abs(w), 1) * clip, w)
    clipped = ~(np.abs(r) <= clip) | big
    r = np.where(~(np.abs(r) <= clip), clip, r)
    return np.stack([w.real, w.imag, r], axis=-1), clipped


def project_grid(grid, model="ball", curvature=None, clip=None):
    """Mesh of a :class:`SurfaceGrid`; attaches ``H`` and ``Kext`` when curvature is given."""
    ns, nt = grid.shape
    v, clipped = project_points(grid.f, model, clip)
    channels = {}
    if curvature is not None:
        channels["H"] = curvature.H.reshape(-1)
        channels["Kext"] = curvature.Kext_numeric.reshape(-1)
    return Mesh(v.reshape(-1, 3), grid_triangles(ns, nt), channels, clipped.reshape(-1), model, (ns, nt))


# --------------------------------------------------------------------- OBJ


def write_obj(mesh, path):
    """ASCII OBJ with ``v`` and triangular ``f`` lines (1-based)."""
    if not np.all(np.isfinite(mesh.vertices)):
        raise ContractViolation("refusing to write non-finite vertices")
    lines = [f"# {len(mesh.vertices)} vertices, {len(mesh.triangles)} triangles, model {mesh.model}"]
    if mesh.clipped.any():
        lines.append(f"# clipped {int(mesh.clipped.sum())} vertices at r = {resolve(None).upper_clip:g}")
    lines += ["v " + " ".join(FLOAT % x for x in row) for row in mesh.vertices]
    lines += ["f %d %d %d" % tuple(tri + 1) for tri in mesh.triangles]
    Path(path).write_text("\n".join(lines) + "\n")


def read_obj(path):
    """Vertices and triangles of an OBJ written by :func:`write_obj`."""
    verts, tris = [], []
    for line in Path(path).read_text().splitlines():
        if line.startswith("v "):
            verts.append([float(x) for x in line.split()[1:4]])
        elif line.startswith("f "):
            tris.append([int(x.split("/")[0]) - 1 for x in line.split()[1:4]])
    return np.array(verts, float).reshape(-1, 3), np.array(tris, int).reshape(-1, 3)


def write_channels_csv(mesh, path):
    """Per-vertex scalars with vertex coordinates and the clipping flag."""
    names = sorted(mesh.channels)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["index", "x", "y", "z", "clipped"] + names)
        for k, row in enumerate(mesh.vertices):
            w.writerow([k] + [FLOAT % x for x in row] + [int(mesh.clipped[k])] + [FLOAT % mesh.channels[n][k] for n in names])


def write_fields_csv(grid, curvature, path):
    """Curvature fields on the ``(s, t)`` grid, one row per node."""
    cols = {"Lambda": curvature.Lambda, "Kext_closed": curvature.Kext_closed,
            "Kext_ruled": curvature.Kext_ruled, "Kext_numeric": curvature.Kext_numeric, "H": curvature.H, "K": curvature.K}
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["s", "t"] + list(cols))
        for i, s in enumerate(grid.s):
            for j, t in enumerate(grid.t):
                w.writerow([FLOAT % s, FLOAT % t] + [FLOAT % cols[k][i, j] for k in cols])


# -------------------------------------------------------------- curve JSON


def _load_json(path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise CurveSpecError(f"malformed JSON: {e.msg}", line=e.lineno) from None


def _complex_list(data, key):
    if key not in data:
        raise CurveSpecError("missing field", field=key)
    try:
        arr = np.array(data[key], float)
    except (TypeError, ValueError):
        raise CurveSpecError("expected a list of [re, im] pairs", field=key) from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise CurveSpecError("expected a list of [re, im] pairs", field=key)
    return arr[:, 0] + 1j * arr[:, 1]


def curve_from_spec(data, grid=512, check=True):
    """:class:`LCurve` from a parsed curve-spec dictionary."""
    if not isinstance(data, dict) or "type" not in data:
        raise CurveSpecError("missing field", field="type")
    kind = data["type"]
    if kind == "builtin":
        name = data.get("name")
        if name not in BUILTIN_DEFAULTS:
            raise CurveSpecError(f"unknown builtin {name!r}", field="name")
        params = data.get("params", {})
        if not isinstance(params, dict):
            raise CurveSpecError("params must be an object", field="params")
        try:
            return builtin_curve(ExampleParams(name, params), grid=grid, check=check)
        except InvalidParameterError as e:
            raise CurveSpecError(str(e), field="params") from None
    if kind == "samples":
        if "s" not in data:
            raise CurveSpecError("missing field", field="s")
        try:
            s = np.array(data["s"], float)
        except (TypeError, ValueError):
            raise CurveSpecError("expected a list of numbers", field="s") from None
        return sampled_curve(s, _complex_list(data, "mu1"), _complex_list(data, "mu2"), grid=grid,
                             name=data.get("name", "samples"), check=check)
    raise CurveSpecError(f"unknown curve type {kind!r}", field="type")


def read_curve_json(path, grid=512, check=True):
    return curve_from_spec(_load_json(path), grid, check)


def curve_to_spec(c, n=None):
    """Curve-spec dictionary: builtins by name, anything else as samples."""
    if c.name in BUILTIN_DEFAULTS and c.params and "s" not in c.params:
        return {"type": "builtin", "name": c.name, "params": _jsonable(c.params)}
    if "s" in c.params and n is None:
        s, mu1, mu2 = c.params["s"], c.params["mu1"], c.params["mu2"]
    else:
        s = c.samples(n)
        mu1, mu2 = c.mu_array(s)
    return {"type": "samples", "name": c.name, "s": [float(x) for x in s],
            "mu1": [[float(z.real), float(z.imag)] for z in mu1],
            "mu2": [[float(z.real), float(z.imag)] for z in mu2]}


def write_curve_json(c, path, n=None):
    Path(path).write_text(json.dumps(curve_to_spec(c, n), indent=1) + "\n")


# ------------------------------------------------------------- reports


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if np.isfinite(x) else None
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def report_json(report):
    """Deterministic JSON text (sorted keys, shortest round-trip floats, NaN as null)."""
    return json.dumps(_jsonable(report), indent=1, sort_keys=True, allow_nan=False) + "\n"


def write_report_json(report, path):
    Path(path).write_text(report_json(report))
