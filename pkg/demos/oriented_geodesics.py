"""
The space of oriented geodesics
===============================

An oriented geodesic is fixed by its two ideal endpoints.  The chart
``(mu1, mu2) = (-gamma_-, 1/conj(gamma_+))`` carries a complex metric whose
real and imaginary parts are both neutral, and the structural identities
between them are checked numerically at the end.
"""
import numpy as np

from hypflat.geodesics import (
    INFINITY,
    GeodesicCoord,
    TangentLH,
    apply_J,
    coords_from_endpoints,
    endpoints,
    eval_metric,
    form_values,
    geodesic_point,
    moebius_on_LH,
)
from hypflat.lorentz import hyperbolic_distance, random_sl2
from hypflat.structure import run_all

#########################################################################
# The vertical geodesic from 0 up to infinity passes through the origin.
c = coords_from_endpoints(INFINITY, 0)
print("coordinates", c, "endpoints", endpoints(c))
print("point at t = 0:", geodesic_point(c, 0.0).vector)
print("unit speed:", hyperbolic_distance(geodesic_point(c, 0), geodesic_point(c, 1.5)))

#########################################################################
# The metric on tangent vectors.  Moving only mu1 is null for both parts;
# mixing directions gives a complex value.
at = GeodesicCoord(0.2 + 0.1j, -0.3j)
x = TangentLH(at, 1.0, 0.0)
y = TangentLH(at, 0.5j, 1.0)
print("G(x, x) =", eval_metric(x).g)
print("G(y, y) =", eval_metric(y).g)
print("G(Jy, Jy) =", eval_metric(apply_J(y)).g)
print("(omega_J, omega_P)(x, y) =", form_values(x, y))

#########################################################################
# Moebius maps act isometrically.
a = random_sl2(np.random.Generator(np.random.PCG64(4)), scale=0.3)
print("G(Ay, Ay) =", eval_metric(moebius_on_LH(a, y)).g)

#########################################################################
# The full verification suite, as run by ``hypflat verify``.
for rep in run_all(seed=7):
    print(f"{rep.name:35s} {'ok' if rep.passed else 'FAILED'}  max deviation {rep.max_deviation:.1e}")
