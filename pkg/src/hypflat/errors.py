"""Exception hierarchy for hypflat."""


class HypflatError(Exception):
    """Base class for all library errors."""


class ContractViolation(HypflatError, ValueError):
    """An operation was called with arguments violating its precondition."""


class InvalidMapError(ContractViolation):
    """A matrix does not lie in SL(2, C) within tolerance."""


class ChartBoundaryError(HypflatError):
    """A geodesic lies outside (or too close to the edge of) the chart U."""


class DegenerateGeodesicError(HypflatError):
    """Endpoints coincide, so no oriented geodesic joins them."""


class SingularityError(HypflatError):
    """A surface fails to be immersed (Lambda vanishes) at some node."""

    def __init__(self, message, s=None, t=None):
        super().__init__(message)
        self.s = s
        self.t = t


class ModelOverflowError(HypflatError):
    """A model conversion would overflow (point too close to infinity)."""


class InvalidParameterError(HypflatError, ValueError):
    """Invalid parameters for a builtin curve family or configuration."""


class CurveSpecError(HypflatError, ValueError):
    """A curve or report JSON document could not be parsed."""

    def __init__(self, message, field=None, line=None):
        loc = []
        if field is not None:
            loc.append(f"field {field!r}")
        if line is not None:
            loc.append(f"line {line}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.field = field
        self.line = line
