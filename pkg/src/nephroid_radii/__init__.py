"""Sharp radii of nephroid starlikeness and the numerics that check them.

The target region is the image of the unit disk under ``1 + z - z**3/3``.
:mod:`~nephroid_radii.classes` catalogues the source classes with their
closed-form radii, :mod:`~nephroid_radii.solver` recomputes each radius from
the class's disk bound, and :mod:`~nephroid_radii.verify` checks sharpness
by pushing circles through an extremal function.
"""

from .classes import (
    ClassId,
    ClassSpec,
    DiskBound,
    ExtremalQ,
    Tag,
    Touch,
    class_spec,
    closed_form_radius,
    disk_bound,
    extremal_f,
    extremal_q,
    parse_tag,
)
from .errors import (
    AmbiguousMembership,
    DomainError,
    IoError,
    NephroidError,
    NoRootBracket,
    ParameterError,
    PoleProximity,
)
from .geometry import (
    CUSP_LEFT,
    CUSP_RIGHT,
    DEFAULT_DOMAIN,
    Membership,
    NephroidDomain,
    boundary_distance,
    boundary_point,
    contains,
    critical_x0,
    h_poly,
    implicit_value,
    inscribed_radius,
    phi_ne,
)
from .plot import PlotSpec, render_margin, render_nephroid, render_sharpness
from .solver import RadiusResult, margin, oracle_radius, parameter_grid, reconcile
from .verify import SharpnessReport, check_sharpness, image_sweep

__version__ = "0.1.0"

__all__ = [
    "ClassId",
    "ClassSpec",
    "DiskBound",
    "ExtremalQ",
    "Tag",
    "Touch",
    "class_spec",
    "closed_form_radius",
    "disk_bound",
    "extremal_f",
    "extremal_q",
    "parse_tag",
    "AmbiguousMembership",
    "DomainError",
    "IoError",
    "NephroidError",
    "NoRootBracket",
    "ParameterError",
    "PoleProximity",
    "CUSP_LEFT",
    "CUSP_RIGHT",
    "DEFAULT_DOMAIN",
    "Membership",
    "NephroidDomain",
    "boundary_distance",
    "boundary_point",
    "contains",
    "critical_x0",
    "h_poly",
    "implicit_value",
    "inscribed_radius",
    "phi_ne",
    "PlotSpec",
    "render_margin",
    "render_nephroid",
    "render_sharpness",
    "RadiusResult",
    "margin",
    "oracle_radius",
    "parameter_grid",
    "reconcile",
    "SharpnessReport",
    "check_sharpness",
    "image_sweep",
]
