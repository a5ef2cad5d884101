"""Numerical range of complex matrices via the support-function method,
plus the 2x2 Schur form and the elliptic-range parameters it induces.

For a direction theta, the Hermitian part H(theta) of e^{-i theta} T has top
eigenvalue equal to the support function of W(T); the top eigenvector v
gives the boundary point <T v, v>.  For 2x2 matrices W(T) is an elliptic
disc with foci at the eigenvalues, minor axis |m| (the Schur off-diagonal)
and major axis sqrt(4 r^2 + |m|^2) where (lambda1 - lambda2)/2 = r e^{i mu}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .cplane import PointCloud
from .errors import EigenFailureError, InvalidParameterError, NonFinitePointError, ShapeError
from .symbols import parse_complex

MAX_SUPPORT_DIM = 64
# Relative gap below which the top eigenspace of H(theta) counts as
# degenerate (flat boundary face) and the tie-break kicks in.
_DEGENERATE_GAP = 1e-12


def as_matrix(obj) -> np.ndarray:
    """Coerce to a square complex matrix, rejecting non-finite entries."""
    mat = np.asarray(obj, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise ShapeError(f"expected a square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat.view(np.float64))):
        raise NonFinitePointError("matrix contains NaN/Inf entries")
    return mat


def parse_matrix(text: str) -> np.ndarray:
    """Parse the plain-text matrix format: one row per line (or ';'),
    re+imi entries separated by whitespace."""
    rows = []
    for line in text.replace(";", "\n").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([parse_complex(tok) for tok in line.split()])
    if not rows:
        raise InvalidParameterError("empty matrix text")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InvalidParameterError("ragged matrix text")
    return as_matrix(rows)


@dataclass(frozen=True)
class SchurForm2:
    """Unitary triangularization U^H T U = [[lambda1, m], [0, lambda2]]."""

    lambda1: complex
    lambda2: complex
    m: complex
    unitary: np.ndarray


def schur_2x2(T) -> SchurForm2:
    """2x2 Schur form from the quadratic formula and an orthonormal completion.

    lambda1 is the root (tr + sqrt(tr^2 - 4 det))/2 with the principal square
    root; defective matrices triangularize too (m carries the nilpotent part).
    """
    mat = as_matrix(T)
    if mat.shape != (2, 2):
        raise ShapeError(f"schur_2x2 needs a 2x2 matrix, got {mat.shape}")
    a, b = complex(mat[0, 0]), complex(mat[0, 1])
    c, d = complex(mat[1, 0]), complex(mat[1, 1])
    tr = a + d
    disc = tr * tr - 4.0 * (a * d - b * c)
    s = cmath.sqrt(disc)
    lam1 = (tr + s) / 2.0
    lam2 = (tr - s) / 2.0
    # Null vector of (T - lam1 I): either column-style candidate annihilates it.
    cand1 = (b, lam1 - a)
    cand2 = (lam1 - d, c)
    n1 = abs(cand1[0]) ** 2 + abs(cand1[1]) ** 2
    n2 = abs(cand2[0]) ** 2 + abs(cand2[1]) ** 2
    vx, vy = cand1 if n1 >= n2 else cand2
    norm = math.sqrt(abs(vx) ** 2 + abs(vy) ** 2)
    if norm == 0.0:
        vx, vy, norm = 1.0, 0.0, 1.0  # T is lam1 * I
    v = np.array([vx / norm, vy / norm], dtype=np.complex128)
    w = np.array([-v[1].conjugate(), v[0].conjugate()], dtype=np.complex128)
    unitary = np.column_stack([v, w])
    form = unitary.conj().T @ mat @ unitary
    return SchurForm2(lam1, lam2, complex(form[0, 1]), unitary)


@dataclass(frozen=True)
class EllipseParams:
    """Numerical-range ellipse of a 2x2 matrix (axes are full lengths).

    major_axis^2 = 4 r^2 + minor_axis^2 with r = |focus1 - focus2| / 2.
    kind records the degenerations: equal foci give a circle, minor = 0 a
    segment, both a point.
    """

    center: complex
    focus1: complex
    focus2: complex
    major_axis: float
    minor_axis: float
    tilt_mu: float
    kind: str

    def semi_axes(self) -> tuple[float, float]:
        return self.major_axis / 2.0, self.minor_axis / 2.0

    def boundary_points(self, n: int) -> np.ndarray:
        """n boundary samples center + e^{i mu} (A cos t + i B sin t)."""
        if n < 1:
            raise InvalidParameterError("boundary_points needs n >= 1")
        t = 2.0 * math.pi * np.arange(n) / n
        big_a, big_b = self.semi_axes()
        frame = big_a * np.cos(t) + 1j * big_b * np.sin(t)
        return self.center + cmath.exp(1j * self.tilt_mu) * frame

    def quad_form(self, points) -> np.ndarray:
        """x^2/(r^2 + |m|^2/4) + y^2/(|m|^2/4) in the centered, tilted frame
        (1 on the boundary, < 1 inside).  Degenerate axes raise."""
        big_a, big_b = self.semi_axes()
        if big_a <= 0.0 or big_b <= 0.0:
            raise InvalidParameterError("quadratic form undefined for degenerate ellipse")
        pts = np.asarray(points, dtype=np.complex128)
        local = (pts - self.center) * cmath.exp(-1j * self.tilt_mu)
        return (local.real / big_a) ** 2 + (local.imag / big_b) ** 2


def ellipse_from_foci(focus1: complex, focus2: complex, minor_axis: float, scale: float = 1.0) -> EllipseParams:
    """EllipseParams from foci and the minor axis (the |m| of a Schur form)."""
    if minor_axis < 0.0:
        raise InvalidParameterError("minor_axis must be >= 0")
    center = (focus1 + focus2) / 2.0
    half = (focus1 - focus2) / 2.0
    r = abs(half)
    tilt = math.atan2(half.imag, half.real) if r > 0.0 else 0.0
    major = math.sqrt(4.0 * r * r + minor_axis * minor_axis)
    tol = _DEGENERATE_GAP * max(1.0, scale)
    if r <= tol and minor_axis <= tol:
        kind = "point"
    elif r <= tol:
        kind = "circle"
    elif minor_axis <= tol:
        kind = "segment"
    else:
        kind = "ellipse"
    return EllipseParams(center, focus1, focus2, major, minor_axis, tilt, kind)


def elliptic_params(T) -> EllipseParams:
    """Numerical-range parameters of a 2x2 matrix via its Schur form."""
    mat = as_matrix(T)
    if mat.shape != (2, 2):
        raise ShapeError(f"elliptic_params needs a 2x2 matrix, got {mat.shape}")
    sf = schur_2x2(mat)
    scale = float(np.linalg.norm(mat))
    return ellipse_from_foci(sf.lambda1, sf.lambda2, abs(sf.m), scale=scale)


def _hermitian_part(T: np.ndarray, theta: float) -> np.ndarray:
    rotated = cmath.exp(-1j * theta) * T
    return (rotated + rotated.conj().T) / 2.0


def _top_eigenpair(T: np.ndarray, theta: float) -> tuple[float, np.ndarray]:
    herm = _hermitian_part(T, theta)
    try:
        vals, vecs = np.linalg.eigh(herm)
    except np.linalg.LinAlgError as exc:
        raise EigenFailureError(f"Hermitian eigensolve failed at theta={theta}: {exc}") from exc
    mu_max = float(vals[-1])
    gap_tol = _DEGENERATE_GAP * max(1.0, float(np.abs(vals).max()))
    top = np.flatnonzero(vals >= mu_max - gap_tol)
    if top.size == 1:
        return mu_max, vecs[:, -1]
    # Flat face: inside the top eigenspace, pick the vector maximizing
    # Im(e^{-i theta} <T v, v>), i.e. the consistent face endpoint.
    basis = vecs[:, top]
    small = basis.conj().T @ (cmath.exp(-1j * theta) * T) @ basis
    imag_part = (small - small.conj().T) / 2j
    _, cvecs = np.linalg.eigh(imag_part)
    return mu_max, basis @ cvecs[:, -1]


def support_value(T, theta: float) -> float:
    """max Re(e^{-i theta} W(T)), the support function of the numerical range."""
    mat = as_matrix(T)
    herm = _hermitian_part(mat, theta)
    try:
        vals = np.linalg.eigvalsh(herm)
    except np.linalg.LinAlgError as exc:
        raise EigenFailureError(f"Hermitian eigensolve failed at theta={theta}: {exc}") from exc
    return float(vals[-1])


def support_boundary_point(T, theta: float) -> complex:
    """Boundary point of W(T) in direction theta: <T v, v> for the top
    eigenvector v of the Hermitian part of e^{-i theta} T."""
    mat = as_matrix(T)
    if mat.shape[0] > MAX_SUPPORT_DIM:
        raise InvalidParameterError(f"support method capped at n <= {MAX_SUPPORT_DIM}")
    _, vec = _top_eigenpair(mat, theta)
    return complex(np.vdot(vec, mat @ vec))


def numerical_range_cloud(T, n_theta: int) -> PointCloud:
    """Boundary polygon of W(T): support points at theta = 2 pi k / n_theta."""
    if n_theta < 8:
        raise InvalidParameterError("numerical_range_cloud needs n_theta >= 8")
    mat = as_matrix(T)
    points = np.empty(n_theta, dtype=np.complex128)
    for k in range(n_theta):
        points[k] = support_boundary_point(mat, 2.0 * math.pi * k / n_theta)
    meta = {
        "kind": "numerical_range_boundary",
        "n": str(mat.shape[0]),
        "n_theta": str(n_theta),
    }
    return PointCloud(points, meta)


def default_contains_tol(T) -> float:
    """Scale-invariant inclusion tolerance 1e-10 (1 + ||T||_F)."""
    return 1e-10 * (1.0 + float(np.linalg.norm(as_matrix(T))))


def inclusion_violation(T, points, n_dirs: int = 720) -> float:
    """max over points of max_theta [Re(e^{-i theta} p) - support(theta)];
    <= 0 means every point passed the half-plane test in all directions."""
    mat = as_matrix(T)
    pts = np.asarray(points, dtype=np.complex128).ravel()
    thetas = 2.0 * math.pi * np.arange(n_dirs) / n_dirs
    supports = np.array([support_value(mat, th) for th in thetas])
    phases = np.exp(-1j * thetas)
    worst = -math.inf
    for lo in range(0, pts.size, 8192):  # chunked outer product
        block = pts[lo : lo + 8192]
        proj = (block[:, None] * phases[None, :]).real - supports[None, :]
        worst = max(worst, float(proj.max()))
    return worst


def contains(T, p: complex, tol: float | None = None, n_dirs: int = 720) -> bool:
    """Half-plane test: p is in W(T) iff Re(e^{-i theta} p) <= support(theta)
    + tol over the direction sweep."""
    if tol is None:
        tol = default_contains_tol(T)
    if tol < 0.0:
        raise InvalidParameterError("tol must be >= 0")
    return inclusion_violation(T, [p], n_dirs=n_dirs) <= tol
