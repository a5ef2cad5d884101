"""Acceptance checks: every numbered criterion the artifact must satisfy.

Each criterion is a standalone function returning (passed, detail); the CLI
``verify`` command and the acceptance test module both run them through
:func:`run_criteria`.  All randomness is seeded, so reruns are reproducible.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import berezin, cplane, numrange, symbols, unitorbit
from .berezin import Classification, Space
from .cplane import Verdict


@dataclass(frozen=True)
class CriterionResult:
    cid: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _rand_disc(rng: np.random.Generator, n: int, r_max: float = 1.0, r_min: float = 0.0) -> np.ndarray:
    radius = r_min + (r_max - r_min) * np.sqrt(rng.random(n))
    angle = 2.0 * math.pi * rng.random(n)
    return radius * np.exp(1j * angle)


def _rand_circle(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.exp(2j * math.pi * rng.random(n))


def _rand_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


# --------------------------------------------------------------------------
# 1-4: transform formulas
# --------------------------------------------------------------------------


def check_fock_closed_forms() -> tuple[bool, str]:
    """Generic kernel path vs closed forms on the Fock space, abs < 1e-12."""
    rng = np.random.default_rng(101)
    worst_elliptic = 0.0
    zetas = np.concatenate([_rand_disc(rng, 800), _rand_circle(rng, 200)])
    zs = _rand_disc(rng, 1000, r_max=4.0)
    for zeta, z in zip(zetas, zs):
        generic = berezin.berezin_transform(Space.FOCK, symbols.DiscRotation(zeta), complex(z))
        closed = berezin.closed_form_fock_elliptic(complex(zeta), complex(z))
        worst_elliptic = max(worst_elliptic, abs(generic - closed))
    worst_affine = 0.0
    zetas = _rand_disc(rng, 1000, r_max=0.95)
    avals = _rand_disc(rng, 1000)
    zs = _rand_disc(rng, 1000, r_max=4.0)
    for zeta, a, z in zip(zetas, avals, zs):
        sym = symbols.FockAffine(complex(zeta), complex(a))
        generic = berezin.berezin_transform(Space.FOCK, sym, complex(z))
        closed = berezin.closed_form_fock_affine(complex(zeta), complex(a), complex(z))
        worst_affine = max(worst_affine, abs(generic - closed))
    passed = worst_elliptic < 1e-12 and worst_affine < 1e-12
    return passed, f"max |generic-closed|: elliptic {worst_elliptic:.3e}, affine {worst_affine:.3e} (< 1e-12)"


def check_dirichlet_closed_form() -> tuple[bool, str]:
    """Generic vs closed form for unimodular rotations on the disc, rel < 1e-10."""
    rng = np.random.default_rng(102)
    worst = 0.0
    zetas = _rand_circle(rng, 1000)
    zs = _rand_disc(rng, 1000, r_max=0.999)
    for zeta, z in zip(zetas, zs):
        generic = berezin.berezin_transform(Space.DIRICHLET, symbols.DiscRotation(zeta), complex(z))
        closed = berezin.closed_form_dirichlet_elliptic(complex(zeta), complex(z))
        worst = max(worst, abs(generic - closed) / max(abs(closed), 1e-300))
    return worst < 1e-10, f"max relative error {worst:.3e} (< 1e-10)"


def check_blaschke_reconstruction() -> tuple[bool, str]:
    """Assembled explicit decomposition vs the direct kernel path, < 1e-10."""
    rng = np.random.default_rng(103)
    worst = 0.0
    alphas = _rand_disc(rng, 1000, r_max=0.9)
    zs = _rand_disc(rng, 1000, r_max=0.999, r_min=0.01)
    for alpha, z in zip(alphas, zs):
        direct = berezin.berezin_transform(Space.DIRICHLET, symbols.Blaschke(alpha), complex(z))
        assembled = berezin.blaschke_decomposition(complex(alpha), complex(z)).assembled()
        worst = max(worst, abs(direct - assembled))
    return worst < 1e-10, f"max |direct-assembled| {worst:.3e} (< 1e-10)"


def check_conjugate_symmetry() -> tuple[bool, str]:
    """Mirror-symmetry residual of the Blaschke transform, < 1e-12 on 1e4 draws."""
    rng = np.random.default_rng(104)
    worst = 0.0
    alphas = _rand_disc(rng, 10_000, r_max=0.9, r_min=0.05)
    rs = 0.02 + 0.93 * rng.random(10_000)
    thetas = 2.0 * math.pi * rng.random(10_000)
    for alpha, r, theta in zip(alphas, rs, thetas):
        worst = max(worst, berezin.conjugate_symmetry_residual(complex(alpha), float(r), float(theta)))
    return worst < 1e-12, f"max residual {worst:.3e} (< 1e-12)"


# --------------------------------------------------------------------------
# 5-7: convexity concordance (detector vs exact classification)
# --------------------------------------------------------------------------


def _concordance(space: Space, sym_list, expect_convex) -> tuple[bool, list[str]]:
    ok = True
    notes = []
    for sym, convex in zip(sym_list, expect_convex):
        cloud = berezin.sample_range(space, sym)
        report = cplane.convexity_report(cloud)
        verdict = berezin.classify_convexity(space, sym)
        want_detector = Verdict.CONVEX if convex else Verdict.NONCONVEX
        want_class = Classification.CONVEX if convex else Classification.NONCONVEX
        good = report.verdict is want_detector and verdict.classification is want_class
        ok = ok and good
        notes.append(
            f"{symbols.symbol_text(sym)}: detector={report.verdict.value} "
            f"classifier={verdict.classification.value} expected={'convex' if convex else 'nonconvex'}"
        )
    return ok, notes


def check_fock_concordance() -> tuple[bool, str]:
    """Fock rotations: convex exactly for real zeta; detector agrees on all nine."""
    real_zetas = [-1.0, -0.3, 0.0, 0.7, 1.0]
    complex_zetas = [1j, -1j, 0.5 * cmath.exp(1j * math.pi / 3), cmath.exp(3j * math.pi / 4)]
    syms = [symbols.DiscRotation(complex(z)) for z in real_zetas + complex_zetas]
    expect = [True] * len(real_zetas) + [False] * len(complex_zetas)
    ok, notes = _concordance(Space.FOCK, syms, expect)
    return ok, "; ".join(notes)


def check_dirichlet_concordance() -> tuple[bool, str]:
    """Dirichlet rotations: convex exactly for zeta = +-1; detector agrees."""
    zetas = [-1.0, 1.0, -1j, cmath.exp(1j * math.pi / 3), cmath.exp(0.4j)]
    expect = [True, True, False, False, False]
    syms = [symbols.DiscRotation(complex(z)) for z in zetas]
    ok, notes = _concordance(Space.DIRICHLET, syms, expect)
    return ok, "; ".join(notes)


def check_blaschke_convexity() -> tuple[bool, str]:
    """Blaschke: alpha = 0 gives the constant cloud {1}; alpha != 0 non-convex."""
    cloud0 = berezin.sample_range(Space.DIRICHLET, symbols.Blaschke(0j))
    const_dev = float(np.abs(cloud0.points - 1.0).max())
    ok = const_dev < 1e-12
    notes = [f"alpha=0 cloud max |B-1| = {const_dev:.3e} (< 1e-12)"]
    for alpha in (0.5 * cmath.exp(1j * math.pi / 3), 0.3 + 0j, 0.7j):
        sym = symbols.Blaschke(alpha)
        report = cplane.convexity_report(berezin.sample_range(Space.DIRICHLET, sym))
        verdict = berezin.classify_convexity(Space.DIRICHLET, sym)
        good = report.verdict is Verdict.NONCONVEX and verdict.classification is Classification.NONCONVEX
        ok = ok and good
        notes.append(
            f"alpha={symbols.format_complex(alpha)}: detector={report.verdict.value} "
            f"(violation {report.max_violation:.3g} > tol {report.tolerance:.3g})"
        )
    return ok, "; ".join(notes)


# --------------------------------------------------------------------------
# 8-9: Blaschke boundary behaviour
# --------------------------------------------------------------------------


def check_radial_limit() -> tuple[bool, str]:
    """Along the alpha-ray the restriction tends to 1: within 0.06 at
    |w|^2 = 1 - 1e-6 and increasing over the last decade."""
    alpha = 0.5
    rho = abs(alpha)

    def restriction_at(gap: float) -> float:
        r = math.sqrt(1.0 - gap) / rho
        return berezin.blaschke_radial_restriction(alpha, r)

    end_value = restriction_at(1e-6)
    ok = abs(end_value - 1.0) < 0.06
    gaps = np.logspace(-5, -6, 11)
    values = [restriction_at(float(g)) for g in gaps]
    monotone = all(b > a for a, b in zip(values, values[1:]))
    ok = ok and monotone
    return ok, (
        f"|F-1| = {abs(end_value - 1.0):.4f} at |w|^2 = 1-1e-6 (< 0.06); "
        f"monotone increasing over gap 1e-5 -> 1e-6: {monotone}"
    )


def check_boundary_decay() -> tuple[bool, str]:
    """Off the alpha-ray the transform decays toward 0 at the boundary."""
    alpha = 0.5 * cmath.exp(1j * math.pi / 3)
    sym = symbols.Blaschke(alpha)
    psi = math.pi / 3
    ok = True
    notes = []
    for offset in (math.pi / 4, math.pi / 2, 3 * math.pi / 4):
        theta = psi + offset
        mags = []
        for gap in (1e-4, 1e-6, 1e-8):
            z = (1.0 - gap) * cmath.exp(1j * theta)
            mags.append(abs(berezin.berezin_transform(Space.DIRICHLET, sym, z)))
        small = mags[-1] < 0.25
        decreasing = mags[0] > mags[1] > mags[2]
        ok = ok and small and decreasing
        notes.append(f"theta-psi={offset:.3f}: |B| = {mags[0]:.3f} > {mags[1]:.3f} > {mags[2]:.3f}")
    return ok, "; ".join(notes)


# --------------------------------------------------------------------------
# 10-15: matrices
# --------------------------------------------------------------------------


def check_elliptic_range() -> tuple[bool, str]:
    """Support boundary points of random 2x2 matrices sit on the ellipse with
    foci at the eigenvalues; degenerate shapes classify correctly."""
    rng = np.random.default_rng(110)
    worst = 0.0
    for _ in range(100):
        mat = _rand_matrix(rng, 2)
        params = numrange.elliptic_params(mat)
        boundary = numrange.numerical_range_cloud(mat, 180).points
        worst = max(worst, float(np.abs(params.quad_form(boundary) - 1.0).max()))
    herm = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=np.complex128)
    jordan = np.array([[0.5j, 2.0], [0.0, 0.5j]], dtype=np.complex128)
    seg_kind = numrange.elliptic_params(herm).kind
    circ_kind = numrange.elliptic_params(jordan).kind
    ok = worst < 1e-9 and seg_kind == "segment" and circ_kind == "circle"
    return ok, (
        f"max quadratic-form residual {worst:.3e} (< 1e-9); "
        f"hermitian -> {seg_kind}, equal-eigenvalue -> {circ_kind}"
    )


def _coverage_distance(mat: np.ndarray, n_u: int, n_v: int) -> float:
    cloud = unitorbit.orbit_cloud_2x2(mat, n_u, n_v)
    hull = cplane.convex_hull(cloud)
    hull_samples = cplane.resample_closed_polyline(hull, 8192)
    ellipse = numrange.elliptic_params(mat).boundary_points(8192)
    return cplane.hausdorff(hull_samples, ellipse)


def check_orbit_coverage() -> tuple[bool, str]:
    """Orbit sweeps fill the numerical range: hull boundary matches the
    ellipse (general), circle (disc) and segment cases."""
    general = _coverage_distance(np.array([[1.0, 1.0], [0.0, -1.0]]), 256, 256)
    segment = _coverage_distance(np.diag([0.0, 1.0]).astype(complex), 1000, 2)
    disc = _coverage_distance(np.array([[0.0, 2.0], [0.0, 0.0]]), 256, 256)
    ok = general < 1e-2 and segment < 1e-3 and disc < 1e-3
    return ok, (
        f"hull-vs-boundary hausdorff: general {general:.3e} (< 1e-2), "
        f"segment {segment:.3e} (< 1e-3), disc {disc:.3e} (< 1e-3)"
    )


def check_unitarity() -> tuple[bool, str]:
    """1000 draws per family, max-norm of U*U - I below 1e-14."""
    rng = np.random.default_rng(112)
    worst = {"segment": 0.0, "disc": 0.0, "general": 0.0}
    eye = np.eye(2)
    for _ in range(1000):
        m = complex(_rand_disc(rng, 1, r_max=3.0, r_min=0.1)[0])
        pa, pb, pg = (2.0 * math.pi * float(rng.random()) for _ in range(3))
        fams = {
            "segment": unitorbit.SegmentCase(float(rng.random())),
            "disc": unitorbit.DiscCase.from_radius(
                theta=2.0 * math.pi * float(rng.random()),
                r_target=float(rng.random()) * abs(m) / 2.0,
                m=m,
            ),
            "general": unitorbit.GeneralCase(
                theta_mix=2.0 * math.pi * float(rng.random()),
                phase_alpha=pa,
                phase_beta=pb,
                phase_gamma=pg,
                phase_delta=pg + math.pi + pb - pa,
            ),
        }
        for name, fam in fams.items():
            u = unitorbit.build_unitary(fam)
            resid = float(np.abs(u.conj().T @ u - eye).max())
            worst[name] = max(worst[name], resid)
    ok = all(v < 1e-14 for v in worst.values())
    detail = ", ".join(f"{k} {v:.3e}" for k, v in worst.items())
    return ok, f"max ||U*U - I||_max per family: {detail} (< 1e-14)"


def check_circle_envelope() -> tuple[bool, str]:
    """The swept circle family stays inside its envelope ellipse and touches it."""
    cloud = unitorbit.circle_family_points(1.0, 2.0, 512, 512)
    ellipse = unitorbit.envelope_of_circle_family(1.0, 2.0)
    q = ellipse.quad_form(cloud.points)
    q_max = float(q.max())
    ok = q_max <= 1.0 + 1e-12 and q_max >= 1.0 - 1e-6
    return ok, f"quadratic form max {q_max:.12f} (<= 1+1e-12, >= 1-1e-6)"


def _suite_clouds(haar_samples: int = 10_000):
    yield np.diag([0.0, 1.0]).astype(complex), unitorbit.orbit_cloud_2x2(np.diag([0.0, 1.0]).astype(complex), 1000, 2)
    disc_mat = np.array([[0.0, 2.0], [0.0, 0.0]])
    yield disc_mat, unitorbit.orbit_cloud_2x2(disc_mat, 256, 256)
    gen_mat = np.array([[1.0, 1.0], [0.0, -1.0]])
    yield gen_mat, unitorbit.orbit_cloud_2x2(gen_mat, 256, 256)
    rng = np.random.default_rng(114)
    for n in (3, 4):
        mat = _rand_matrix(rng, n)
        yield mat, unitorbit.haar_orbit_cloud(mat, haar_samples, seed=114 + n)


def check_orbit_inclusion() -> tuple[bool, str]:
    """Every orbit / Haar point passes the numerical-range half-plane test."""
    ok = True
    worst_ratio = -math.inf
    for mat, cloud in _suite_clouds():
        tol = numrange.default_contains_tol(mat)
        violation = numrange.inclusion_violation(mat, cloud.points)
        ok = ok and violation <= tol
        worst_ratio = max(worst_ratio, violation / tol)
    return ok, f"worst violation/tolerance ratio {worst_ratio:.3g} (<= 1 means zero violations)"


def _w_sample_cloud(mat: np.ndarray, n_boundary: int = 1440, n_radial: int = 64) -> np.ndarray:
    boundary = numrange.numerical_range_cloud(mat, n_boundary).points
    center = complex(np.trace(mat)) / mat.shape[0]
    scales = np.linspace(0.0, 1.0, n_radial + 1)[1:]
    fan = center + scales[:, None] * (boundary[None, :] - center)
    return np.concatenate([[center], fan.ravel()])


def check_haar_fills_numerical_range() -> tuple[bool, str]:
    """Haar-orbit diagonals fill W(T) for 3x3 and 4x4 (hausdorff < 5e-2, < 60 s)."""
    start = time.perf_counter()
    rng = np.random.default_rng(115)
    worst = 0.0
    for n in (3, 4):
        mat = _rand_matrix(rng, n)
        mat /= np.linalg.norm(mat)  # unit Frobenius scale
        n_samples = 100_000 // n + (1 if 100_000 % n else 0)
        cloud = unitorbit.haar_orbit_cloud(mat, n_samples, seed=115 + n)
        w_cloud = _w_sample_cloud(mat)
        worst = max(worst, cplane.hausdorff(cloud.points, w_cloud))
    elapsed = time.perf_counter() - start
    ok = worst < 5e-2 and elapsed < 60.0
    return ok, f"max hausdorff(haar cloud, W samples) {worst:.4f} (< 0.05); runtime {elapsed:.1f}s (< 60s)"


def check_spiral_collinearity() -> tuple[bool, str]:
    """The three spiral points at r in {0, 1, sqrt(pi/b)} are never collinear
    for a != 0; for a = 0 the spiral stays on the unit circle."""
    ok = True
    notes = []
    for a, b in ((0.3, 1.0), (-0.5, 2.0), (1.0, 0.5)):
        p0 = complex(1.0, 0.0)
        p1 = cmath.exp(complex(a, b))
        rho_sq = math.pi / b
        p2 = cmath.exp(complex(a * rho_sq, b * rho_sq))
        col = cplane.collinear(p0, p1, p2, 1e-9)
        ok = ok and not col
        notes.append(f"(a={a}, b={b}): collinear={col}")
    rs = np.linspace(0.0, 3.0, 100)
    worst = max(abs(abs(cmath.exp(complex(0.0, 1.0 * r * r))) - 1.0) for r in rs)
    ok = ok and worst < 1e-13
    notes.append(f"a=0 max ||B|-1| = {worst:.3e} (< 1e-13)")
    return ok, "; ".join(notes)


_REGISTRY: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "fock-closed-forms", check_fock_closed_forms),
    (2, "dirichlet-closed-form", check_dirichlet_closed_form),
    (3, "blaschke-reconstruction", check_blaschke_reconstruction),
    (4, "conjugate-symmetry", check_conjugate_symmetry),
    (5, "fock-convexity-concordance", check_fock_concordance),
    (6, "dirichlet-convexity-concordance", check_dirichlet_concordance),
    (7, "blaschke-convexity", check_blaschke_convexity),
    (8, "radial-limit", check_radial_limit),
    (9, "boundary-decay", check_boundary_decay),
    (10, "elliptic-range", check_elliptic_range),
    (11, "orbit-coverage", check_orbit_coverage),
    (12, "unitarity", check_unitarity),
    (13, "circle-envelope", check_circle_envelope),
    (14, "orbit-inclusion", check_orbit_inclusion),
    (15, "haar-fills-numerical-range", check_haar_fills_numerical_range),
    (16, "spiral-collinearity", check_spiral_collinearity),
]


def criterion_ids() -> list[int]:
    return [cid for cid, _, _ in _REGISTRY]


def criterion_name(cid: int) -> str:
    for num, name, _ in _REGISTRY:
        if num == cid:
            return name
    raise KeyError(f"no criterion {cid}")


def run_criterion(cid: int) -> CriterionResult:
    for num, name, func in _REGISTRY:
        if num == cid:
            start = time.perf_counter()
            passed, detail = func()
            return CriterionResult(num, name, passed, detail, time.perf_counter() - start)
    raise KeyError(f"no criterion {cid}")


def run_criteria(ids: list[int] | None = None) -> list[CriterionResult]:
    if ids is None:
        ids = criterion_ids()
    return [run_criterion(cid) for cid in ids]
