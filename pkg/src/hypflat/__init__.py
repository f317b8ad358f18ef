"""Flat surfaces in hyperbolic 3-space from null-causal curves of oriented geodesics."""

__version__ = "0.1.0"

from .errors import (
    ChartBoundaryError,
    ContractViolation,
    CurveSpecError,
    DegenerateGeodesicError,
    HypflatError,
    InvalidMapError,
    InvalidParameterError,
    ModelOverflowError,
    SingularityError,
)
from .tolerances import DEFAULT as DEFAULT_TOLERANCES, Tolerances
from .lorentz import (
    BallPoint,
    HermMat,
    HPoint,
    HTangent,
    MoebiusMap,
    UnitTangent,
    UpperHalfPoint,
    act_isometry,
    cross,
    from_ball,
    from_upper,
    geodesic_flow,
    hyperbolic_distance,
    minkowski_inner,
    sigma,
    to_ball,
    to_upper,
)
from .geodesics import (
    INFINITY,
    GeodesicCoord,
    HomogeneousTangent,
    MetricValue,
    TangentLH,
    apply_J,
    apply_P,
    coords_from_endpoints,
    coords_of_ray,
    endpoints,
    eval_metric,
    form_values,
    geodesic_point,
    homogeneous_to_coords,
    killing_form,
    moebius_on_LH,
)
from .structure import verify_BG, verify_metric_invariance, verify_standard_embedding, verify_symplectic
from .curves import CausalReport, ExampleParams, LCurve, builtin_curve, classify_curve, curve_derivative, sampled_curve
from .developable import (
    CurvatureField,
    FundamentalForms,
    MasseyReport,
    SurfaceGrid,
    analyze_surface,
    asymptotic_test,
    curvature_fields,
    detect_ideal_cone,
    fundamental_forms,
    generate_surface,
    lambda_field,
    massey_fit,
    structural_checks,
    unit_normal,
)
from .frenet import FrenetData, frenet_apparatus
from .mesh_io import Mesh, project_grid, read_curve_json, read_obj, write_curve_json, write_obj, write_report_json
