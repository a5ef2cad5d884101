"""Explicit 2x2 unitary families whose conjugation diagonals sweep out the
unitarily equivalent Berezin range, the circle-family envelope they trace,
and Haar-orbit sampling for n x n desk-scale checks.

The three families cover the shapes a 2x2 numerical range can take:

* SegmentCase  (distinct eigenvalues, m = 0): U = [[sqrt(k), sqrt(1-k)],
  [sqrt(1-k), -sqrt(k)]] moves the diagonal to k l1 + (1-k) l2.
* DiscCase     (equal eigenvalues, m != 0): with alpha_half =
  arcsin(2 r / |m|)/2, U = [[e^{-i(theta-delta)} sin a, cos a],
  [cos a, -e^{i(theta-delta)} sin a]] lands the diagonal on lambda + r e^{i theta}.
* GeneralCase  (distinct eigenvalues, m != 0), on the centered rotated form
  A = [[r, m e^{-i mu}], [0, -r]]: U = [[e^{i a} cos t, e^{i b} sin t],
  [e^{i g} sin t, e^{i d} cos t]] with d - g = pi + (b - a); the diagonal is
  r cos 2t + (|m|/2) sin 2t e^{i(net phase)}, a circle family whose envelope
  is the ellipse x^2/(r^2 + |m|^2/4) + y^2/(|m|^2/4) = 1.

A diagonal entry of U^* T U is <T u, u> for a unit column of U, so every
swept point lies inside the numerical range; the sweeps fill it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .cplane import PointCloud
from .errors import InvalidParameterError, ShapeError
from .numrange import EllipseParams, as_matrix, ellipse_from_foci, schur_2x2

_CONSTRAINT_TOL = 1e-12
_HAAR_CHUNK = 16384


@dataclass(frozen=True)
class SegmentCase:
    k: float


@dataclass(frozen=True)
class DiscCase:
    theta: float
    r_target: float
    delta: float       # arg m of the target matrix
    alpha_half: float  # arcsin(2 r_target / |m|) / 2

    @classmethod
    def from_radius(cls, theta: float, r_target: float, m: complex) -> "DiscCase":
        m_abs = abs(m)
        if m_abs == 0.0:
            raise InvalidParameterError("disc family needs m != 0")
        ratio = 2.0 * r_target / m_abs
        if ratio < -_CONSTRAINT_TOL or ratio > 1.0 + _CONSTRAINT_TOL:
            raise InvalidParameterError(f"disc family needs 0 <= 2 r/|m| <= 1, got {ratio}")
        ratio = min(max(ratio, 0.0), 1.0)
        return cls(theta, r_target, math.atan2(m.imag, m.real), 0.5 * math.asin(ratio))


@dataclass(frozen=True)
class GeneralCase:
    theta_mix: float
    phase_alpha: float
    phase_beta: float
    phase_gamma: float
    phase_delta: float

    @classmethod
    def from_net_phase(cls, theta_mix: float, net_phase: float, m_arg: float = 0.0) -> "GeneralCase":
        """Minimal parameterization: alpha = beta = 0, gamma set so the swept
        diagonal phase gamma - alpha + arg(m) equals ``net_phase``."""
        gamma = net_phase - m_arg
        return cls(theta_mix, 0.0, 0.0, gamma, gamma + math.pi)


UnitaryFamily = Union[SegmentCase, DiscCase, GeneralCase]


def build_unitary(fam: UnitaryFamily) -> np.ndarray:
    """The printed 2x2 unitary for the family; exact unitary by construction."""
    if isinstance(fam, SegmentCase):
        if not 0.0 <= fam.k <= 1.0:
            raise InvalidParameterError(f"segment family needs k in [0, 1], got {fam.k}")
        rk, rk1 = math.sqrt(fam.k), math.sqrt(1.0 - fam.k)
        return np.array([[rk, rk1], [rk1, -rk]], dtype=np.complex128)
    if isinstance(fam, DiscCase):
        if not 0.0 <= fam.alpha_half <= math.pi / 4.0 + _CONSTRAINT_TOL:
            raise InvalidParameterError("disc family needs alpha_half in [0, pi/4]")
        phase = cmath.exp(-1j * (fam.theta - fam.delta))
        sa, ca = math.sin(fam.alpha_half), math.cos(fam.alpha_half)
        return np.array([[phase * sa, ca], [ca, -phase.conjugate() * sa]], dtype=np.complex128)
    if isinstance(fam, GeneralCase):
        mismatch = math.remainder(
            fam.phase_delta - fam.phase_gamma - math.pi - (fam.phase_beta - fam.phase_alpha),
            2.0 * math.pi,
        )
        if abs(mismatch) > _CONSTRAINT_TOL:
            raise InvalidParameterError(
                f"general family needs delta - gamma = pi + (beta - alpha), off by {mismatch:.3g}"
            )
        ct, st = math.cos(fam.theta_mix), math.sin(fam.theta_mix)
        return np.array(
            [
                [cmath.exp(1j * fam.phase_alpha) * ct, cmath.exp(1j * fam.phase_beta) * st],
                [cmath.exp(1j * fam.phase_gamma) * st, cmath.exp(1j * fam.phase_delta) * ct],
            ],
            dtype=np.complex128,
        )
    raise InvalidParameterError(f"unknown unitary family {type(fam).__name__}")


def _check_upper_triangular(mat: np.ndarray, tol: float) -> None:
    if abs(mat[1, 0]) > tol:
        raise ShapeError("orbit_diagonal needs an upper-triangular 2x2 matrix")


def orbit_diagonal(T, fam: UnitaryFamily) -> tuple[complex, complex]:
    """Diagonal entries of U^* T U for an upper-triangular T matching the
    family's case (segment: m = 0; disc: equal eigenvalues; general: the
    centered rotated form diag(r, -r) plus the off-diagonal)."""
    mat = as_matrix(T)
    if mat.shape != (2, 2):
        raise ShapeError(f"orbit_diagonal needs a 2x2 matrix, got {mat.shape}")
    tol = _CONSTRAINT_TOL * max(1.0, float(np.linalg.norm(mat)))
    _check_upper_triangular(mat, tol)
    if isinstance(fam, SegmentCase) and abs(mat[0, 1]) > tol:
        raise ShapeError("segment family applies to diagonal matrices (m = 0)")
    if isinstance(fam, DiscCase) and abs(mat[0, 0] - mat[1, 1]) > tol:
        raise ShapeError("disc family applies to equal-eigenvalue matrices")
    if isinstance(fam, GeneralCase):
        lead = complex(mat[0, 0])
        if abs(mat[1, 1] + lead) > tol or abs(lead.imag) > tol or lead.real < -tol:
            raise ShapeError("general family applies to the centered form [[r, m'], [0, -r]]")
    unitary = build_unitary(fam)
    conj = unitary.conj().T @ mat @ unitary
    return complex(conj[0, 0]), complex(conj[1, 1])


def orbit_cloud_2x2(T, n_u: int = 256, n_v: int = 256) -> PointCloud:
    """Diagonal sweep of the applicable family for a 2x2 matrix, mapped back
    to the original frame; fills segment / disc / elliptic disc.

    ``n_u`` grids k (segment), theta (disc) or the mixing angle (general);
    ``n_v`` grids the disc radius or the net phase.  Both conjugation
    diagonals are kept, so the cloud contains each point and its mirror.
    """
    if n_u < 2 or n_v < 2:
        raise InvalidParameterError("orbit_cloud_2x2 needs n_u, n_v >= 2")
    mat = as_matrix(T)
    if mat.shape != (2, 2):
        raise ShapeError(f"orbit_cloud_2x2 needs a 2x2 matrix, got {mat.shape}")
    sf = schur_2x2(mat)
    center = (sf.lambda1 + sf.lambda2) / 2.0
    half = (sf.lambda1 - sf.lambda2) / 2.0
    r = abs(half)
    mu = math.atan2(half.imag, half.real) if r > 0.0 else 0.0
    m_abs = abs(sf.m)
    tol = _CONSTRAINT_TOL * max(1.0, float(np.linalg.norm(mat)))

    if r <= tol and m_abs <= tol:
        case = "point"
        first = np.array([center])
    elif m_abs <= tol:
        case = "segment"
        ks = np.linspace(0.0, 1.0, n_u)
        first = ks * sf.lambda1 + (1.0 - ks) * sf.lambda2
    elif r <= tol:
        case = "disc"
        thetas = 2.0 * math.pi * np.arange(n_u) / n_u
        radii = np.linspace(0.0, m_abs / 2.0, n_v)
        first = (center + radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()
    else:
        case = "general"
        phi = np.linspace(0.0, math.pi, n_u)
        net = 2.0 * math.pi * np.arange(n_v) / n_v
        local = r * np.cos(phi)[:, None] + (m_abs / 2.0) * np.sin(phi)[:, None] * np.exp(1j * net)[None, :]
        first = (center + cmath.exp(1j * mu) * local).ravel()
    mirrored = 2.0 * center - first  # the second diagonal entry of each U^* T U
    points = np.concatenate([first, mirrored])
    meta = {
        "kind": "orbit_2x2",
        "case": case,
        "n_u": str(n_u),
        "n_v": str(n_v),
    }
    return PointCloud(points, meta)


def envelope_of_circle_family(r: float, m_abs: float) -> EllipseParams:
    """Envelope of the circles (x - r cos phi)^2 + y^2 = (|m|^2/4) sin^2 phi:
    the centered axis-aligned ellipse with semi-axes sqrt(r^2 + |m|^2/4) and
    |m|/2 (degenerate when r or |m| vanishes)."""
    if r < 0.0 or m_abs < 0.0 or not (math.isfinite(r) and math.isfinite(m_abs)):
        raise InvalidParameterError("envelope needs finite r >= 0 and |m| >= 0")
    return ellipse_from_foci(complex(r), complex(-r), m_abs, scale=max(r, m_abs, 1.0))


def circle_family_points(r: float, m_abs: float, n_phi: int, n_psi: int) -> PointCloud:
    """Sample the circle family itself: for each phi in [0, pi] the circle
    with center r cos(phi) and radius (|m|/2) sin(phi)."""
    if n_phi < 2 or n_psi < 2:
        raise InvalidParameterError("circle_family_points needs n_phi, n_psi >= 2")
    if r < 0.0 or m_abs <= 0.0:
        raise InvalidParameterError("circle_family_points needs r >= 0 and |m| > 0")
    phi = np.linspace(0.0, math.pi, n_phi)
    psi = 2.0 * math.pi * np.arange(n_psi) / n_psi
    centers = r * np.cos(phi)
    radii = (m_abs / 2.0) * np.sin(phi)
    points = (centers[:, None] + radii[:, None] * np.exp(1j * psi)[None, :]).ravel()
    meta = {
        "kind": "circle_family",
        "r": repr(r),
        "m_abs": repr(m_abs),
        "n_phi": str(n_phi),
        "n_psi": str(n_psi),
    }
    return PointCloud(points, meta)


def haar_unitaries(n: int, n_samples: int, seed: int) -> np.ndarray:
    """n_samples Haar-distributed n x n unitaries, deterministic given seed.

    QR of a complex Gaussian matrix, with the Q columns rephased by the sign
    of the R diagonal so the distribution is exactly Haar.
    """
    if n < 1 or n_samples < 1:
        raise InvalidParameterError("haar_unitaries needs n >= 1 and n_samples >= 1")
    rng = np.random.default_rng(seed)
    out = np.empty((n_samples, n, n), dtype=np.complex128)
    for lo in range(0, n_samples, _HAAR_CHUNK):
        k = min(_HAAR_CHUNK, n_samples - lo)
        ginibre = rng.standard_normal((k, n, n)) + 1j * rng.standard_normal((k, n, n))
        q, r = np.linalg.qr(ginibre / math.sqrt(2.0))
        diag = np.einsum("sii->si", r)
        q *= (diag / np.abs(diag))[:, None, :]
        out[lo : lo + k] = q
    return out


def haar_orbit_cloud(T, n_samples: int, seed: int) -> PointCloud:
    """All n diagonal entries of U^* T U over n_samples Haar unitaries.

    Each entry is <T u_i, u_i> for a Haar-random orthonormal frame, so the
    cloud sits inside W(T) and samples the unitarily equivalent Berezin
    range at matrix scale.
    """
    mat = as_matrix(T)
    n = mat.shape[0]
    if not 2 <= n <= 16:
        raise InvalidParameterError("haar_orbit_cloud is desk-scale: 2 <= n <= 16")
    if n_samples < 1:
        raise InvalidParameterError("haar_orbit_cloud needs n_samples >= 1")
    unitaries = haar_unitaries(n, n_samples, seed)
    points = np.empty((n_samples, n), dtype=np.complex128)
    for lo in range(0, n_samples, _HAAR_CHUNK):
        u = unitaries[lo : lo + _HAAR_CHUNK]
        points[lo : lo + u.shape[0]] = np.einsum("sji,sji->si", u.conj(), mat @ u)
    meta = {
        "kind": "haar_orbit",
        "n": str(n),
        "n_samples": str(n_samples),
        "seed": str(seed),
    }
    return PointCloud(points.ravel(), meta)
