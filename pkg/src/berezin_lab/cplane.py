"""Planar geometry on sampled subsets of the complex plane.

Point clouds are 1-D arrays of complex128 plus a string-valued metadata map.
The convexity detector is a sampling heuristic: it interpolates between
sampled pairs and measures how far the interpolants stray from the cloud.
Exact statements about convexity come from the theorem-backed classifier in
:mod:`berezin_lab.berezin`; this detector corroborates them numerically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .errors import EmptyCloudError, NonFinitePointError

DEFAULT_T_GRID = (0.25, 0.5, 0.75)
DEFAULT_MAX_PAIRS = 200_000
# Relative tolerance (times cloud diameter) used when none is supplied.
DEFAULT_REL_TOL = 1e-3


@dataclass
class PointCloud:
    """Ordered complex point set with provenance metadata.

    ``domain`` optionally carries the sample locations z that produced the
    values in ``points`` (used by Berezin-range clouds; matrix clouds leave
    it None).
    """

    points: np.ndarray
    meta: dict[str, str] = field(default_factory=dict)
    domain: np.ndarray | None = None

    def __post_init__(self) -> None:
        self.points = np.asarray(self.points, dtype=np.complex128).ravel()
        if self.points.size and not np.all(np.isfinite(self.points.view(np.float64))):
            raise NonFinitePointError("point cloud contains NaN/Inf entries")
        if self.domain is not None:
            self.domain = np.asarray(self.domain, dtype=np.complex128).ravel()
            if self.domain.shape != self.points.shape:
                raise NonFinitePointError("domain and points must have equal length")

    def __len__(self) -> int:
        return int(self.points.size)


class Verdict(enum.Enum):
    CONVEX = "convex"
    NONCONVEX = "nonconvex"


@dataclass(frozen=True)
class ConvexityReport:
    """Outcome of the sampling convexity detector.

    verdict is NONCONVEX exactly when ``max_violation > tolerance``; the
    witness (pair endpoints and interpolation parameter t) is present exactly
    in that case.
    """

    verdict: Verdict
    max_violation: float
    tolerance: float
    n_samples: int
    witness: tuple[complex, complex, float] | None = None

    @property
    def is_convex(self) -> bool:
        return self.verdict is Verdict.CONVEX


def _points_of(cloud: PointCloud | np.ndarray) -> np.ndarray:
    if isinstance(cloud, PointCloud):
        return cloud.points
    return np.asarray(cloud, dtype=np.complex128).ravel()


def _as_xy(points: np.ndarray) -> np.ndarray:
    return np.column_stack((points.real, points.imag))


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(cloud: PointCloud | np.ndarray) -> np.ndarray:
    """Convex hull vertices, counterclockwise, by the monotone chain.

    Ties are broken lexicographically on (re, im); collinear edge points are
    dropped, so degenerate clouds yield 1- or 2-point hulls.
    """
    points = _points_of(cloud)
    if points.size == 0:
        raise EmptyCloudError("convex_hull of an empty cloud")
    pts = np.unique(points)  # sorts by (re, im) and removes duplicates
    if pts.size <= 2:
        return pts.copy()
    lower: list[complex] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[complex] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1], dtype=np.complex128)


def cloud_diameter(cloud: PointCloud | np.ndarray) -> tuple[float, complex, complex]:
    """Exact diameter of the cloud and a realizing pair (via hull vertices)."""
    hull = convex_hull(cloud)
    if hull.size == 1:
        return 0.0, complex(hull[0]), complex(hull[0])
    best = -1.0
    best_i = best_j = 0
    for lo in range(0, hull.size, 256):  # chunked to bound memory on big hulls
        block = np.abs(hull[lo : lo + 256, None] - hull[None, :])
        i, j = np.unravel_index(int(np.argmax(block)), block.shape)
        if block[i, j] > best:
            best, best_i, best_j = float(block[i, j]), lo + int(i), int(j)
    return best, complex(hull[best_i]), complex(hull[best_j])


def collinear(p: complex, q: complex, r: complex, tol: float) -> bool:
    """True when p, q, r are collinear within ``tol`` relative to the squared
    scale (largest pairwise distance squared)."""
    if tol < 0.0:
        raise ValueError("tol must be >= 0")
    cross = (q.real - p.real) * (r.imag - p.imag) - (q.imag - p.imag) * (r.real - p.real)
    scale = max(abs(q - p), abs(r - p), abs(r - q)) ** 2
    return abs(cross) <= tol * scale


def _resolve_seed(cloud: PointCloud | np.ndarray, seed: int | None) -> int:
    if seed is not None:
        return int(seed)
    if isinstance(cloud, PointCloud):
        try:
            return int(cloud.meta.get("seed", "0"))
        except ValueError:
            return 0
    return 0


def convexity_report(
    cloud: PointCloud | np.ndarray,
    tol: float | None = None,
    n_pairs: int | None = None,
    t_grid: tuple[float, ...] = DEFAULT_T_GRID,
    seed: int | None = None,
) -> ConvexityReport:
    """Sampling convexity detector.

    For sampled point pairs (p, q) and every t in ``t_grid``, measures the
    distance from t*p + (1-t)*q to the nearest cloud point.  The verdict is
    NONCONVEX when the largest such distance exceeds the tolerance (default
    1e-3 times the cloud diameter).  Clouds that collapse to a point or a
    line segment are convex by definition and short-circuit to CONVEX.
    Pair sampling is deterministic given the seed (from ``meta['seed']``
    unless passed explicitly); the witness is the first maximizer in pair
    order.
    """
    points = _points_of(cloud)
    if points.size == 0:
        raise EmptyCloudError("convexity_report of an empty cloud")
    if not np.all(np.isfinite(points.view(np.float64))):
        raise NonFinitePointError("convexity_report: cloud contains NaN/Inf")

    diameter, d_p, d_q = cloud_diameter(points)
    if tol is None:
        tol = DEFAULT_REL_TOL * diameter
    if tol < 0.0:
        raise ValueError("tol must be > 0")

    # Degenerate clouds: a point or a segment is convex.
    if diameter <= tol or points.size < 3:
        return ConvexityReport(Verdict.CONVEX, 0.0, tol, 0)
    axis = d_q - d_p
    line_dist = np.abs((points.real - d_p.real) * axis.imag - (points.imag - d_p.imag) * axis.real)
    if float(line_dist.max()) <= tol * abs(axis):
        return ConvexityReport(Verdict.CONVEX, 0.0, tol, 0)

    n = points.size
    total_pairs = n * (n - 1) // 2
    if n_pairs is None:
        n_pairs = min(total_pairs, DEFAULT_MAX_PAIRS)
    if total_pairs <= n_pairs:
        ii, jj = np.triu_indices(n, k=1)
    else:
        rng = np.random.default_rng(_resolve_seed(cloud, seed))
        raw = rng.integers(0, n, size=(n_pairs, 2))
        keep = raw[:, 0] != raw[:, 1]
        ii, jj = raw[keep, 0], raw[keep, 1]

    p, q = points[ii], points[jj]
    ts = np.asarray(t_grid, dtype=np.float64)
    # Pair-major layout so the first argmax is the smallest pair index.
    mids = (p[:, None] * ts[None, :] + q[:, None] * (1.0 - ts)[None, :]).ravel()
    tree = cKDTree(_as_xy(points))
    dist, _ = tree.query(_as_xy(mids), workers=1)
    max_violation = float(dist.max())
    if max_violation > tol:
        k = int(np.argmax(dist))
        pair, t_idx = divmod(k, ts.size)
        witness = (complex(p[pair]), complex(q[pair]), float(ts[t_idx]))
        return ConvexityReport(Verdict.NONCONVEX, max_violation, tol, int(dist.size), witness)
    return ConvexityReport(Verdict.CONVEX, max_violation, tol, int(dist.size))


def hausdorff(a: PointCloud | np.ndarray, b: PointCloud | np.ndarray) -> float:
    """Symmetric Hausdorff distance between two discrete point sets."""
    pa, pb = _points_of(a), _points_of(b)
    if pa.size == 0 or pb.size == 0:
        raise EmptyCloudError("hausdorff of an empty cloud")
    tree_a, tree_b = cKDTree(_as_xy(pa)), cKDTree(_as_xy(pb))
    d_ab, _ = tree_b.query(_as_xy(pa), workers=1)
    d_ba, _ = tree_a.query(_as_xy(pb), workers=1)
    return float(max(d_ab.max(), d_ba.max()))


def resample_closed_polyline(vertices: np.ndarray, n: int) -> np.ndarray:
    """n points spaced uniformly by arclength along a closed polygon.

    Degenerate polygons (single vertex) return n copies of it; a 2-vertex
    polygon is walked there and back.
    """
    verts = np.asarray(vertices, dtype=np.complex128).ravel()
    if verts.size == 0:
        raise EmptyCloudError("resample of an empty polygon")
    if n < 1:
        raise ValueError("n must be >= 1")
    if verts.size == 1:
        return np.full(n, verts[0], dtype=np.complex128)
    loop = np.concatenate([verts, verts[:1]])
    seg = np.abs(np.diff(loop))
    total = float(seg.sum())
    if total == 0.0:
        return np.full(n, verts[0], dtype=np.complex128)
    stops = np.concatenate([[0.0], np.cumsum(seg)])
    s = np.linspace(0.0, total, n, endpoint=False)
    idx = np.clip(np.searchsorted(stops, s, side="right") - 1, 0, seg.size - 1)
    frac = np.where(seg[idx] > 0.0, (s - stops[idx]) / np.where(seg[idx] > 0, seg[idx], 1.0), 0.0)
    return loop[idx] + frac * (loop[idx + 1] - loop[idx])
