"""hopf-atlas: quaternion rotations, Hopf fibers, projections, linked circles."""

__version__ = "0.1.0"

from .config import TOL, Tolerances
from .errors import (
    DomainError,
    FitError,
    ParseError,
    PoleError,
    ProximityError,
    ToolkitError,
)
from .fibration import FiberSamples, fiber, hopf, hopf_original, hopf_quat
from .linkage import (
    LinkReport,
    PairLinkReport,
    axis_link_report,
    carry_to_unit_circle,
    gauss_linking,
    pairwise_link_check,
    unit_yz_circle,
)
from .quat import as_unit, conj, exp_i, inv, mul, norm, quaternion
from .rotation import (
    AxisAngle,
    Identity,
    from_axis_angle,
    rotate,
    rotations_taking_x_to,
    to_axis_angle,
    to_matrix,
)
from .stereo import (
    Circle3,
    Line3,
    fit_circle_or_line,
    proj_s2,
    proj_s3,
    proj_s3_filtered,
    unproj_s2,
    unproj_s3,
)

__all__ = [
    "TOL",
    "Tolerances",
    "ToolkitError",
    "DomainError",
    "PoleError",
    "ProximityError",
    "FitError",
    "ParseError",
    "quaternion",
    "mul",
    "conj",
    "norm",
    "inv",
    "exp_i",
    "as_unit",
    "rotate",
    "to_matrix",
    "to_axis_angle",
    "from_axis_angle",
    "rotations_taking_x_to",
    "Identity",
    "AxisAngle",
    "hopf",
    "hopf_quat",
    "hopf_original",
    "fiber",
    "FiberSamples",
    "proj_s2",
    "unproj_s2",
    "proj_s3",
    "unproj_s3",
    "proj_s3_filtered",
    "fit_circle_or_line",
    "Circle3",
    "Line3",
    "axis_link_report",
    "carry_to_unit_circle",
    "gauss_linking",
    "pairwise_link_check",
    "unit_yz_circle",
    "LinkReport",
    "PairLinkReport",
]
