"""
Hyperbolic space as Hermitian matrices
======================================

Points of H^3 are positive Hermitian 2x2 matrices of determinant one and
SL(2, C) acts by ``X -> A X A^*``.  This script walks through the basic
operations and the two standard pictures of the space.
"""
import numpy as np

from hypflat.lorentz import (
    HPoint,
    MoebiusMap,
    act_isometry,
    geodesic_flow,
    hyperbolic_distance,
    minkowski_inner,
    random_sl2,
    random_unit_tangent,
    to_ball,
    to_upper,
)

rng = np.random.Generator(np.random.PCG64(1))

#########################################################################
# The origin is the identity matrix.  The Minkowski inner product is
# minus the determinant on the diagonal, so points have norm -1.
o = HPoint.from_vector([1, 0, 0, 0])
print("origin matrix\n", o.m.matrix)
print("<o, o> =", minkowski_inner(o, o))

#########################################################################
# Geodesics: start from a random unit tangent and flow for a while.
# Distance along the flow equals elapsed time.
u = random_unit_tangent(rng)
for t in (0.5, 1.0, 2.0):
    q = geodesic_flow(u, t).p
    print(f"t = {t}: distance {hyperbolic_distance(u.p, q):.12f}")

#########################################################################
# Isometries preserve distance.
a = random_sl2(rng)
p, q = random_unit_tangent(rng).p, random_unit_tangent(rng).p
print("d(p, q)     =", hyperbolic_distance(p, q))
print("d(Ap, Aq)   =", hyperbolic_distance(act_isometry(a, p), act_isometry(a, q)))

#########################################################################
# The same map acts on the sphere at infinity as a fractional linear map.
m = MoebiusMap(2, 1, 0, 0.5)
print("z = 1 goes to", m.on_boundary(1), "and infinity stays at", m.on_boundary(None))

#########################################################################
# Upper half-space and Poincare ball coordinates of a point.
print("upper:", to_upper(p))
print("ball: ", to_ball(p))
