"""
Flat surfaces from null curves
==============================

Each ruling ``f(s, .)`` is the geodesic ``alpha(s)``.  Sampling the surface,
differentiating its normal and comparing the two fundamental forms shows
that the extrinsic curvature vanishes, so the intrinsic curvature is -1.
The mean curvature along each ruling then solves ``u'' = u`` with
``u = 1/H``.
"""
import numpy as np

from hypflat.curves import builtin_curve
from hypflat.developable import analyze_surface

for name in ("nomizu1", "nomizu2", "nomizu3", "nra"):
    grid, forms, curv, massey, _ = analyze_surface(builtin_curve(name), ns=128, nt=64)
    ode = np.array([r.ode_residual for r in massey.rulings])
    print(f"{name:8s} max|Kext| {np.nanmax(np.abs(curv.Kext_numeric)):.1e}"
          f"  max|K + 1| {np.nanmax(np.abs(curv.K + 1)[curv.interior]):.1e}"
          f"  Massey residual median {np.nanmedian(ode):.1e} max {np.nanmax(ode):.1e}  {massey.verdict}")

#########################################################################
# The residual of u'' = u is a second difference of 1/H.  On the helix the
# outer rulings reach x0 ~ 1e3 and the normal loses digits there, which is
# why its maximum is much larger than its median.

#########################################################################
# On the cone over the unit-speed circle of radius 1/2 the mean curvature
# grows exactly like e^t.
cone = builtin_curve("nomizu2", speed=2.0, domain=[0, np.pi])
grid, forms, curv, massey, structural = analyze_surface(cone, ns=128, nt=64)
print("max ||H| e^-t - 1| =", np.max(np.abs(np.abs(curv.H) * np.exp(-grid.t) - 1)))

#########################################################################
# For exponential-type surfaces the curve at t = 0 has curvature
# sqrt(1 + delta^2) and the rulings leave it along (n - delta b)/sqrt(1 + delta^2).
print("delta:", structural.delta[len(grid.s) // 2])
print("curvature residual", structural.kappa_residual, "direction residual", structural.direction_residual)
