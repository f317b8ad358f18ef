"""Numerical tolerance policy.

A single immutable :class:`Tolerances` object carries every threshold used by
the library.  Functions accept an optional ``tol`` argument; when omitted the
module-level :data:`DEFAULT` policy applies.
"""

from dataclasses import dataclass, replace, asdict


@dataclass(frozen=True)
class Tolerances:
    # structural invariants (det = 1, tangency, unit length), relative
    structural: float = 1e-10
    # |det a - 1| for SL(2, C)
    sl2: float = 1e-12
    # arccosh argument may dip this far below 1 from roundoff
    arccosh_clamp: float = 1e-9
    # |1 + mu1 * conj(mu2)| must exceed this
    chart_eps: float = 1e-8
    # null test, relative to max(1, grid max |G|)
    null_analytic: float = 1e-8
    null_fd: float = 1e-5
    # coordinate norm of alpha' below this is irregular
    regular: float = 1e-10
    # Lambda at or below this is a singular node
    singular: float = 1e-12
    # |h_ij| < umbilic * max(1, |g|) marks an umbilic node
    umbilic: float = 1e-9
    # |P - |Q|| / P below this is an exponential ruling
    massey_fit: float = 1e-4
    # kappa below this leaves torsion undefined
    frenet: float = 1e-6
    # finite-difference step for derivatives of callables
    fd_step: float = 1e-4
    # clip upper-half-space height above this on export
    upper_clip: float = 1e6

    def replace(self, **changes):
        for key, value in changes.items():
            if value is not None and not value > 0:
                raise ValueError(f"tolerance {key} must be positive, got {value}")
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def as_dict(self):
        return asdict(self)


DEFAULT = Tolerances()


def resolve(tol):
    """Return ``tol`` or the default policy."""
    return DEFAULT if tol is None else tol
