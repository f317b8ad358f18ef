"""
Exporting meshes and curves
===========================

Surfaces are written as OBJ meshes in the Poincare ball or the upper
half-space, with per-vertex curvature channels in a CSV file next to them.
Curves round-trip through a small JSON format.

Run with an output directory as argument; defaults to ``./hypflat-out``.
"""
import sys
from pathlib import Path

import numpy as np

from hypflat.curves import builtin_curve, sampled_curve
from hypflat.developable import curvature_fields, fundamental_forms, generate_surface
from hypflat.mesh_io import project_grid, read_curve_json, read_obj, write_channels_csv, write_curve_json, write_obj

out = Path(sys.argv[1] if len(sys.argv) > 1 else "hypflat-out")
out.mkdir(parents=True, exist_ok=True)

for name, model in (("nomizu1", "ball"), ("nomizu2", "upper"), ("nra", "ball")):
    grid = generate_surface(builtin_curve(name), None, (-2, 2), 96, 48)
    curv = curvature_fields(grid, fundamental_forms(grid))
    mesh = project_grid(grid, model, curv)
    write_obj(mesh, out / f"{name}.obj")
    write_channels_csv(mesh, out / f"{name}.csv")
    v, _ = read_obj(out / f"{name}.obj")
    print(f"{name}: {len(v)} vertices, {len(mesh.triangles)} triangles in the {model} model,"
          f" re-read exactly: {np.array_equal(v, mesh.vertices)}")

#########################################################################
# A sampled curve written to JSON and read back.
s = np.linspace(0, 2 * np.pi, 200)
c = sampled_curve(s, 0.5 * np.exp(1j * s), np.zeros_like(s, complex), name="circle")
write_curve_json(c, out / "circle.json")
back = read_curve_json(out / "circle.json")
print("max |mu1 change| after round trip:", np.max(np.abs(back.mu_array(s)[0] - c.mu_array(s)[0])))
