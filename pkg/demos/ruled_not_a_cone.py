"""
Exponential type without being a cone
======================================

The ``nra`` curve is glued from three pieces.  For ``s <= -1`` every ruling
starts at 0, for ``s >= 1`` every ruling ends at infinity and in between the
surface is a piece of totally geodesic plane.  All rulings are of
exponential type or umbilic, yet no single point is shared by all of them.
"""
import numpy as np

from hypflat.curves import builtin_curve
from hypflat.developable import analyze_surface, asymptotic_test, detect_ideal_cone

c = builtin_curve("nra")
grid, forms, curv, massey, structural = analyze_surface(c)
print("verdict:", massey.verdict)
print("common vertex:", detect_ideal_cone(c))

types = massey.types()
for lo, hi in ((-3, -1), (-1, 1), (1, 3)):
    sel = [(lo <= r.s <= hi) for r in massey.rulings]
    print(f"s in [{lo}, {hi}]:", dict(zip(*np.unique(types[sel], return_counts=True))))

#########################################################################
# Rays pointing back along rulings with s <= -1 share an endpoint, as do
# forward rays with s >= 1.  Across the two groups they do not.
i, j = np.searchsorted(grid.s, -2), np.searchsorted(grid.s, 2)
k = np.searchsorted(grid.s, -1.5)
print("within left :", asymptotic_test(grid.ruling_ray(i, sign=-1), grid.ruling_ray(k, sign=-1)))
print("between     :", asymptotic_test(grid.ruling_ray(i, sign=-1), grid.ruling_ray(j)))
for w in structural.asymptotic_within:
    print("run", w["s"], "max |test|", w["max_abs"])
