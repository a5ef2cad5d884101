"""berezin-lab: Berezin transforms and ranges of composition operators on
the Fock and Dirichlet spaces, numerical ranges of matrices, and
unitary-orbit experiments, with convexity detection for sampled ranges."""

__version__ = "0.1.0"

from .berezin import (
    Classification,
    ConvexityVerdict,
    GridKind,
    SamplingGrid,
    berezin_transform,
    blaschke_decomposition,
    blaschke_radial_restriction,
    classify_convexity,
    closed_form_dirichlet_elliptic,
    closed_form_fock_affine,
    closed_form_fock_elliptic,
    conjugate_symmetry_residual,
    sample_range,
)
from .cplane import (
    ConvexityReport,
    PointCloud,
    Verdict,
    collinear,
    convex_hull,
    convexity_report,
    hausdorff,
)
from .kernels import (
    Space,
    dirichlet_kernel,
    dirichlet_norm_sq,
    fock_kernel,
    fock_norm_sq,
)
from .numrange import (
    EllipseParams,
    SchurForm2,
    contains,
    elliptic_params,
    numerical_range_cloud,
    parse_matrix,
    schur_2x2,
    support_boundary_point,
)
from .symbols import (
    Blaschke,
    Boundedness,
    DiscAutomorphism,
    DiscRotation,
    FockAffine,
    FockSpecialAutomorphism,
    classify_fock_boundedness,
    parse_symbol,
)
from .unitorbit import (
    DiscCase,
    GeneralCase,
    SegmentCase,
    build_unitary,
    circle_family_points,
    envelope_of_circle_family,
    haar_orbit_cloud,
    orbit_cloud_2x2,
    orbit_diagonal,
)

__all__ = [
    "__version__",
    "Space",
    "PointCloud",
    "ConvexityReport",
    "Verdict",
    "Classification",
    "ConvexityVerdict",
    "GridKind",
    "SamplingGrid",
    "EllipseParams",
    "SchurForm2",
    "Boundedness",
    "FockAffine",
    "DiscRotation",
    "Blaschke",
    "DiscAutomorphism",
    "FockSpecialAutomorphism",
    "SegmentCase",
    "DiscCase",
    "GeneralCase",
    "fock_kernel",
    "fock_norm_sq",
    "dirichlet_kernel",
    "dirichlet_norm_sq",
    "berezin_transform",
    "closed_form_fock_elliptic",
    "closed_form_fock_affine",
    "closed_form_dirichlet_elliptic",
    "blaschke_decomposition",
    "blaschke_radial_restriction",
    "conjugate_symmetry_residual",
    "sample_range",
    "classify_convexity",
    "convex_hull",
    "convexity_report",
    "collinear",
    "hausdorff",
    "schur_2x2",
    "elliptic_params",
    "support_boundary_point",
    "numerical_range_cloud",
    "contains",
    "parse_matrix",
    "parse_symbol",
    "classify_fock_boundedness",
    "build_unitary",
    "orbit_diagonal",
    "orbit_cloud_2x2",
    "envelope_of_circle_family",
    "circle_family_points",
    "haar_orbit_cloud",
]
