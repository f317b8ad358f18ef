"""
Curves of geodesics and their causal character
==============================================

A curve of oriented geodesics rules a flat surface exactly when its
velocity is null for the imaginary part of the metric and causal for the
real part.  The four bundled examples all qualify; a generic line of
geodesics does not.
"""
import numpy as np

from hypflat.curves import LCurve, builtin_curve, classify_curve

for name in ("nomizu1", "nomizu2", "nomizu3", "nra"):
    rep = classify_curve(builtin_curve(name))
    print(f"{name:8s} {rep.verdict:12s} gr in [{rep.G.real.min():+.4f}, {rep.G.real.max():+.4f}]"
          f"  max|gi| {np.abs(rep.G.imag).max():.1e}")

#########################################################################
# The cone over a circle has a constant endpoint at infinity.
print("nomizu2 vertex:", classify_curve(builtin_curve("nomizu2")).vertex)

#########################################################################
# alpha(s) = (s, i s) is spacelike for the imaginary part: not developable.
line = LCurve(lambda s: (s + 0j, 1j * s), (-0.5, 0.5),
              lambda s: (np.ones_like(s) + 0j, 1j * np.ones_like(s)), name="line")
rep = classify_curve(line)
print("line:", rep.verdict, "G =", rep.G[0])

#########################################################################
# Parameters of the examples can be changed.  A helix of curvature 0.5 and
# torsion 2 still gives a developable curve.
print(classify_curve(builtin_curve("nomizu3", kappa=0.5, tau=2.0)).verdict)
