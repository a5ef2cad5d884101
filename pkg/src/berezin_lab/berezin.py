"""Berezin transform evaluation, range sampling, and convexity classification.

The Berezin transform of a composition operator C_phi at z is

    B(z) = <C_phi k^_z, k^_z> = K(phi(z), z) / ||k_z||^2,

evaluated here through the kernel module (the "generic" path).  Closed forms
are provided for the cases where the quotient collapses:

* Fock, phi(z) = zeta z:          B(z) = exp((zeta - 1) |z|^2)
* Fock, phi(z) = zeta z + a:      B(z) = exp((zeta - 1) |z|^2 + a conj(z))
* Dirichlet, phi(z) = zeta z:     B(z) = log(1 - zeta |z|^2) / (zeta log(1 - |z|^2))

and the Blaschke factor on the Dirichlet space admits the explicit
real/imaginary decomposition implemented in :func:`blaschke_decomposition`.
Every closed form is cross-checked against the generic path by the test
suite; the two routes stay independent on purpose.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels, symbols
from .cplane import PointCloud
from .errors import (
    BerezinLabError,
    DegenerateError,
    DomainError,
    InvalidParameterError,
    UnboundedSymbolError,
)
from .kernels import Space, abs_sq, clog1p
from .symbols import Boundedness, Symbol

# Strict sampling gate on the disc: callers wanting near-boundary studies
# must stay at |z| <= 1 - 1e-12; the kernels genuinely diverge at |z| = 1.
DISC_EDGE = 1.0 - 1e-12


class GridKind(enum.Enum):
    POLAR_DISC = "polar_disc"
    POLAR_PLANE = "polar_plane"


@dataclass(frozen=True)
class SamplingGrid:
    """Polar sampling grid; radii are r-major, angles theta = 2 pi k / n_theta.

    ``tanh`` spacing clusters radii toward r_max, which is where the
    Dirichlet transforms develop their logarithmic behaviour.
    """

    kind: GridKind
    n_r: int = 200
    n_theta: int = 128
    r_max: float = 4.0
    r_spacing: str = "uniform"  # "uniform" | "tanh"

    _TANH_STRETCH = 5.0

    def __post_init__(self) -> None:
        if self.n_r < 1 or self.n_theta < 1:
            raise InvalidParameterError("grid needs n_r >= 1 and n_theta >= 1")
        if not math.isfinite(self.r_max) or self.r_max <= 0.0:
            raise InvalidParameterError("grid needs finite r_max > 0")
        if self.kind is GridKind.POLAR_DISC and self.r_max > DISC_EDGE:
            raise InvalidParameterError(f"disc grid needs r_max <= {DISC_EDGE!r}")
        if self.r_spacing not in ("uniform", "tanh"):
            raise InvalidParameterError("r_spacing must be 'uniform' or 'tanh'")

    def radii(self) -> np.ndarray:
        if self.n_r == 1:
            return np.array([0.0])
        x = np.linspace(0.0, 1.0, self.n_r)
        if self.r_spacing == "tanh":
            x = np.tanh(self._TANH_STRETCH * x) / math.tanh(self._TANH_STRETCH)
        return self.r_max * x

    def angles(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.n_theta) / self.n_theta

    @classmethod
    def fock_default(cls) -> "SamplingGrid":
        # For Re(zeta) well below 1 the transform is negligible beyond r = 4;
        # widen r_max explicitly for slowly decaying symbols.
        return cls(GridKind.POLAR_PLANE, 200, 128, 4.0, "uniform")

    @classmethod
    def dirichlet_default(cls) -> "SamplingGrid":
        return cls(GridKind.POLAR_DISC, 200, 128, 1.0 - 1e-6, "tanh")

    @classmethod
    def default_for(cls, space: Space) -> "SamplingGrid":
        return cls.fock_default() if space is Space.FOCK else cls.dirichlet_default()


def _check_fock_usable(sym: Symbol) -> None:
    bound = symbols.fock_boundedness(sym)
    if bound is Boundedness.UNBOUNDED:
        raise UnboundedSymbolError(
            f"composition operator for {symbols.symbol_text(sym)} is unbounded on the Fock space"
        )
    if bound is Boundedness.NOT_APPLICABLE:
        raise UnboundedSymbolError(
            f"{symbols.symbol_text(sym)} does not define a bounded Fock-space operator (not entire)"
        )


def _transform_unchecked(space: Space, sym: Symbol, z: complex) -> complex:
    if space is Space.FOCK:
        w = symbols.apply(sym, z)
        return kernels.fock_kernel(w, z) / kernels.fock_norm_sq(z)
    if z == 0:
        return complex(1.0, 0.0)  # k_0 is the constant function 1
    w = symbols.apply(sym, z)
    return kernels.dirichlet_kernel(w, z) / kernels.dirichlet_norm_sq(z)


def berezin_transform(space: Space, sym: Symbol, z: complex) -> complex:
    """Berezin transform K(phi(z), z) / ||k_z||^2 of C_phi at z."""
    symbols.validate(sym, space)
    if space is Space.FOCK:
        _check_fock_usable(sym)
    else:
        if abs(z) > DISC_EDGE:
            raise DomainError(f"Dirichlet sampling is gated at |z| <= {DISC_EDGE!r}")
    return _transform_unchecked(space, sym, z)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def closed_form_fock_elliptic(zeta: complex, z: complex) -> complex:
    """exp((zeta - 1) |z|^2), the Fock transform of phi(z) = zeta z, |zeta| <= 1."""
    if abs(zeta) > 1.0 + symbols.PARAM_TOL:
        raise InvalidParameterError("closed form needs |zeta| <= 1")
    t = abs_sq(z)
    if not math.isfinite(t):
        raise OverflowError("|z|^2 overflows")
    return cmath.exp((zeta - 1.0) * t)


def closed_form_fock_affine(zeta: complex, a: complex, z: complex) -> complex:
    """exp((zeta - 1)|z|^2 + a conj(z)) for bounded phi(z) = zeta z + a."""
    if symbols.classify_fock_boundedness(zeta, a) is Boundedness.UNBOUNDED:
        raise UnboundedSymbolError("affine symbol is unbounded on the Fock space")
    t = abs_sq(z)
    e = (zeta - 1.0) * t + a * z.conjugate()
    if not cmath.isfinite(e) or e.real > 709.0:
        raise OverflowError(f"affine transform exponent {e!r} overflows")
    return cmath.exp(e)


def closed_form_dirichlet_elliptic(zeta: complex, z: complex) -> complex:
    """log(1 - zeta |z|^2) / (zeta log(1 - |z|^2)) with principal logs; 1 at z = 0."""
    if abs(abs(zeta) - 1.0) > symbols.PARAM_TOL:
        raise InvalidParameterError("closed form needs |zeta| = 1")
    if abs(z) >= 1.0:
        raise DomainError("closed form needs |z| < 1")
    t = abs_sq(z)
    if t == 0.0:
        return complex(1.0, 0.0)
    den = zeta * math.log1p(-t)
    if zeta.imag == 0.0:
        # Real rotations stay on the real axis; zeta = 1 gives exactly 1.
        num: complex = complex(math.log1p(-zeta.real * t), 0.0)
    else:
        num = clog1p(-zeta * t)
    return num / den


# ---------------------------------------------------------------------------
# Blaschke factor on the Dirichlet space
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlaschkeDecomposition:
    """Explicit decomposition of the Dirichlet Blaschke transform.

    With s = conj(alpha) z, p = Re s, q = Im s and t = |z|^2:

        1/(conj(z) phi_alpha(z)) = a_coeff * [(t - p)(1 - p) - q^2 + i q (2p - t - 1)]
        1/(1 - conj(z) phi_alpha(z)) = b_coeff * [(1 - t)(1 - p) + 2 q^2 + i q (1 + t - 2p)]

    and the transform assembles as first_factor * log(log_argument), where
    first_factor folds in c_coeff = a_coeff / ||k_z||^2.
    """

    a_coeff: float
    b_coeff: float
    c_coeff: float
    first_factor: complex
    log_argument: complex

    def assembled(self) -> complex:
        return self.first_factor * cmath.log(self.log_argument)


def blaschke_decomposition(alpha: complex, z: complex) -> BlaschkeDecomposition:
    """Coefficients and factors of the explicit Blaschke transform at z.

    Requires 0 < |z| < 1 and conj(z) phi_alpha(z) != 0; at z = alpha the
    transform itself is still defined (removable singularity, use the kernel
    path), but the decomposition degenerates.
    """
    sym = symbols.Blaschke(alpha)
    symbols.validate(sym)
    if z == 0 or abs(z) >= 1.0:
        raise DomainError("decomposition needs 0 < |z| < 1")
    phi = symbols.apply(sym, z)
    if z.conjugate() * phi == 0:
        raise DegenerateError(
            "conj(z) phi_alpha(z) = 0: the decomposition degenerates at z = alpha "
            "(the transform itself extends by continuity)"
        )
    s = alpha.conjugate() * z
    p, q = s.real, s.imag
    t = abs_sq(z)
    a_coeff = 1.0 / ((t - p) ** 2 + q * q)
    b_coeff = 1.0 / ((1.0 - t) ** 2 + 4.0 * q * q)
    c_coeff = a_coeff / kernels.dirichlet_norm_sq(z)
    bracket1 = complex((t - p) * (1.0 - p) - q * q, q * (2.0 * p - t - 1.0))
    bracket2 = complex((1.0 - t) * (1.0 - p) + 2.0 * q * q, q * (1.0 + t - 2.0 * p))
    return BlaschkeDecomposition(
        a_coeff=a_coeff,
        b_coeff=b_coeff,
        c_coeff=c_coeff,
        first_factor=c_coeff * bracket1,
        log_argument=b_coeff * bracket2,
    )


def blaschke_radial_restriction(alpha: complex, r: float) -> float:
    """The Blaschke transform restricted to the alpha-ray, w = r alpha.

    Evaluates, with s = |r alpha|^2 and u = r |alpha|^2,

        F(r) = [s (1 - u) / (s - u)] * (1 - log(1 - u)/log(1 - s)),

    which is real for all admissible r in (-1/|alpha|, 1/|alpha|).  The
    removable points r = 0 and r = 1 are returned as their limits (1 and
    1/||k_alpha||^2 respectively); F(r) -> 1 as r -> 1/|alpha|.
    """
    if alpha == 0:
        raise InvalidParameterError("radial restriction needs alpha != 0")
    symbols.validate(symbols.Blaschke(alpha))
    rho = abs(alpha)
    if not math.isfinite(r) or abs(r) * rho >= 1.0:
        raise DomainError("radial restriction needs |r| < 1/|alpha|")
    if r == 0.0:
        return 1.0
    if r == 1.0:
        rho2 = abs_sq(alpha)
        return -rho2 / math.log1p(-rho2)
    s = (r * rho) ** 2
    u = r * rho * rho
    return (s * (1.0 - u) / (s - u)) * (1.0 - math.log1p(-u) / math.log1p(-s))


def conjugate_symmetry_residual(alpha: complex, r: float, theta: float) -> float:
    """|B(r e^{i theta}) - conj(B(r e^{i (2 psi - theta)}))| for the Blaschke
    factor with alpha = rho e^{i psi}; identically zero in exact arithmetic,
    so the Berezin range is symmetric about the real axis."""
    if alpha == 0:
        raise InvalidParameterError("symmetry residual needs alpha != 0")
    if not 0.0 < r < 1.0:
        raise DomainError("symmetry residual needs 0 < r < 1")
    sym = symbols.Blaschke(alpha)
    psi = math.atan2(alpha.imag, alpha.real)
    z1 = r * cmath.exp(1j * theta)
    z2 = r * cmath.exp(1j * (2.0 * psi - theta))
    b1 = berezin_transform(Space.DIRICHLET, sym, z1)
    b2 = berezin_transform(Space.DIRICHLET, sym, z2)
    return abs(b1 - b2.conjugate())


# ---------------------------------------------------------------------------
# Range sampling and theorem-backed classification
# ---------------------------------------------------------------------------


def sample_range(
    space: Space,
    sym: Symbol,
    grid: SamplingGrid | None = None,
    seed: int = 0,
) -> PointCloud:
    """Sample the Berezin range over a polar grid, r-major then theta.

    The returned cloud carries the transform values in ``points``, the grid
    locations in ``domain``, and all parameters in ``meta``.  Evaluation
    errors abort with the offending grid point identified.
    """
    symbols.validate(sym, space)
    if space is Space.FOCK:
        _check_fock_usable(sym)
    if grid is None:
        grid = SamplingGrid.default_for(space)
    if grid.kind is GridKind.POLAR_PLANE and space is not Space.FOCK:
        raise InvalidParameterError("a plane grid only makes sense on the Fock space")

    radii = grid.radii()
    angles = grid.angles()
    zs = np.empty(radii.size * angles.size, dtype=np.complex128)
    values = np.empty_like(zs)
    pos = 0
    for i, r in enumerate(radii):
        for j, th in enumerate(angles):
            z = complex(r * math.cos(th), r * math.sin(th)) if r != 0.0 else 0j
            try:
                values[pos] = _transform_unchecked(space, sym, z)
            except (BerezinLabError, OverflowError, ZeroDivisionError) as exc:
                raise type(exc)(
                    f"evaluation failed at grid point (r_index={i}, theta_index={j}, z={z!r}): {exc}"
                ) from exc
            zs[pos] = z
            pos += 1
    meta = {
        "space": space.value,
        "symbol": symbols.symbol_text(sym),
        "grid_kind": grid.kind.value,
        "n_r": str(grid.n_r),
        "n_theta": str(grid.n_theta),
        "r_max": repr(grid.r_max),
        "r_spacing": grid.r_spacing,
        "seed": str(seed),
    }
    return PointCloud(values, meta, domain=zs)


class Classification(enum.Enum):
    CONVEX = "convex"
    NONCONVEX = "nonconvex"
    OPEN_QUESTION = "open_question"


@dataclass(frozen=True)
class ConvexityVerdict:
    classification: Classification
    reason: str


def _is_real_within(value: complex, tol: float) -> bool:
    return abs(value.imag) <= tol


def classify_convexity(space: Space, sym: Symbol) -> ConvexityVerdict:
    """Exact convexity verdict for the (space, symbol) pairs with a known
    characterization; OPEN_QUESTION where none is known.

    Covered: Fock rotations (convex iff zeta in [-1, 1]), their unimodular
    and b = 0 special-automorphism corollaries, Dirichlet rotations (convex
    iff zeta = +-1), and Dirichlet Blaschke factors (convex iff alpha = 0,
    under the assumption that Im B(z) = 0 only on the alpha-line -- the
    verdict records that hypothesis rather than silently assuming it).
    Affine Fock symbols with a != 0 are the open problem.
    """
    tol = symbols.PARAM_TOL
    symbols.validate(sym, space)

    if space is Space.FOCK:
        _check_fock_usable(sym)
        if isinstance(sym, symbols.FockSpecialAutomorphism):
            rot = symbols.rotation_of_special_automorphism(sym)
            inner = classify_convexity(space, rot)
            return ConvexityVerdict(
                inner.classification,
                f"b = 0 reduces to the rotation zeta = a/conj(a); convex exactly for a in {{1, -1, i, -i}} "
                f"(here {inner.classification.value})",
            )
        if isinstance(sym, symbols.FockAffine) and abs(sym.a) > tol:
            return ConvexityVerdict(
                Classification.OPEN_QUESTION,
                "no characterization is known for phi(z) = zeta z + a with |zeta| < 1, a != 0",
            )
        zeta = sym.zeta  # DiscRotation, or FockAffine with a = 0
        if _is_real_within(zeta, tol):
            return ConvexityVerdict(
                Classification.CONVEX,
                "zeta in [-1, 1]: the range is the point {1} or the real segment (0, 1]",
            )
        return ConvexityVerdict(
            Classification.NONCONVEX,
            "zeta has nonzero imaginary part: the range is a spiral path, which is neither a point nor a segment",
        )

    # Dirichlet space
    if isinstance(sym, symbols.DiscRotation):
        zeta = sym.zeta
        if abs(zeta - 1.0) <= tol or abs(zeta + 1.0) <= tol:
            return ConvexityVerdict(
                Classification.CONVEX,
                "zeta = +-1: the range is the point {1} or the real segment (0, 1]",
            )
        return ConvexityVerdict(
            Classification.NONCONVEX,
            "unimodular zeta off the real axis traces a non-straight path from 1 toward 0",
        )
    if isinstance(sym, symbols.Blaschke):
        if abs(sym.alpha) <= tol:
            return ConvexityVerdict(Classification.CONVEX, "alpha = 0: the range is the point {1}")
        return ConvexityVerdict(
            Classification.NONCONVEX,
            "alpha != 0: boundary values collapse to 0 off the alpha-ray while the radial "
            "limit along it is 1 (assumes Im B(z) = 0 only when Im(conj(alpha) z) = 0)",
        )
    if isinstance(sym, symbols.DiscAutomorphism):
        if abs(sym.alpha) <= tol:
            wrapped = math.remainder(sym.theta, 2.0 * math.pi)
            if abs(wrapped) <= tol:
                return ConvexityVerdict(
                    Classification.CONVEX, "theta = 0, alpha = 0: phi(z) = -z, range (0, 1]"
                )
            if abs(abs(wrapped) - math.pi) <= tol:
                return ConvexityVerdict(
                    Classification.CONVEX, "theta = pi, alpha = 0: phi is the identity, range {1}"
                )
        return ConvexityVerdict(
            Classification.OPEN_QUESTION,
            "general disc automorphisms are only characterized through the rotation and "
            "Blaschke special cases",
        )
    raise InvalidParameterError(f"no convexity rule for {type(sym).__name__} on {space.value}")
