"""Reproducing kernels and squared kernel norms for the Fock space F2(C)
and the Dirichlet space of the unit disc.

Fock:      K(z, w) = exp(z * conj(w)),            ||k_z||^2 = exp(|z|^2)
Dirichlet: K(z, w) = -log(1 - conj(w) z) / (conj(w) z),  K(z, 0) = K(0, w) = 1
           ||k_z||^2 = -log(1 - |z|^2) / |z|^2,   ||k_0||^2 = 1

The Dirichlet closed form loses roughly |u|^-1 digits of accuracy as
u = conj(w) z -> 0, so below SERIES_SWITCH the power series
1 + u/2 + u^2/3 + ... is used instead.
"""

from __future__ import annotations

import cmath
import enum
import math

from .errors import DomainError

# |u| below which dirichlet_kernel switches to the power series.
SERIES_SWITCH = 1e-4

# Largest exponent math.exp accepts without overflowing a double.
_EXP_MAX = 709.782712893384


class Space(enum.Enum):
    """The two reproducing kernel Hilbert spaces handled by the library."""

    FOCK = "fock"
    DIRICHLET = "dirichlet"


def abs_sq(z: complex) -> float:
    """|z|^2 without the intermediate square root.

    Matches (conj(z) * z).real bit for bit, which keeps quotients like
    K(z, z) / ||k_z||^2 exactly 1 for identity-like symbols.
    """
    return z.real * z.real + z.imag * z.imag


def clog1p(w: complex) -> complex:
    """Principal-branch log(1 + w), accurate for small |w|.

    Uses |1 + w|^2 - 1 = 2 Re w + |w|^2 in a real log1p, so no precision is
    lost forming 1 + w.  Only valid while 1 + w stays away from the branch
    cut, which holds throughout this library (Re(1 + w) > 0).
    """
    x, y = w.real, w.imag
    return complex(0.5 * math.log1p(2.0 * x + x * x + y * y), math.atan2(y, 1.0 + x))


def fock_kernel(z: complex, w: complex) -> complex:
    """Fock-space kernel K(z, w) = exp(z * conj(w))."""
    if not (cmath.isfinite(z) and cmath.isfinite(w)):
        raise DomainError("fock_kernel requires finite arguments")
    e = z * w.conjugate()
    if e.real > _EXP_MAX:
        raise OverflowError(
            f"fock_kernel exponent Re(z*conj(w)) = {e.real:.6g} exceeds the double range"
        )
    return cmath.exp(e)


def fock_norm_sq(z: complex) -> float:
    """Squared kernel norm ||k_z||^2 = exp(|z|^2) on the Fock space."""
    if not cmath.isfinite(z):
        raise DomainError("fock_norm_sq requires a finite argument")
    t = abs_sq(z)
    if t > _EXP_MAX:
        raise OverflowError(f"fock_norm_sq exponent |z|^2 = {t:.6g} exceeds the double range")
    return math.exp(t)


def _dirichlet_series(u: complex) -> complex:
    # 1 + u/2 + u^2/3 + ...; converges in <= 6 terms for |u| <= SERIES_SWITCH.
    total = complex(1.0, 0.0)
    term = complex(1.0, 0.0)
    n = 1
    while True:
        term *= u
        delta = term / (n + 1)
        total += delta
        if abs(delta) <= 1e-16 * abs(total):
            return total
        n += 1


def dirichlet_kernel(z: complex, w: complex) -> complex:
    """Dirichlet-space kernel K(z, w) for z, w strictly inside the unit disc.

    With u = conj(w) * z the value is -log(1 - u)/u, continued by the power
    series across the removable singularity at u = 0.
    """
    if not (cmath.isfinite(z) and cmath.isfinite(w)):
        raise DomainError("dirichlet_kernel requires finite arguments")
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise DomainError("dirichlet_kernel requires |z| < 1 and |w| < 1")
    u = w.conjugate() * z
    if abs(u) < SERIES_SWITCH:
        return _dirichlet_series(u)
    if u.imag == 0.0:
        # Real axis: use the real log1p so K(z, z) is bitwise consistent
        # with dirichlet_norm_sq.
        return complex(-math.log1p(-u.real) / u.real, 0.0)
    return -clog1p(-u) / u


def dirichlet_norm_sq(z: complex) -> float:
    """Squared kernel norm ||k_z||^2 = -log(1 - |z|^2)/|z|^2, with value 1 at 0."""
    if not cmath.isfinite(z):
        raise DomainError("dirichlet_norm_sq requires a finite argument")
    if abs(z) >= 1.0:
        raise DomainError("dirichlet_norm_sq requires |z| < 1")
    t = abs_sq(z)
    if t == 0.0:
        return 1.0
    return -math.log1p(-t) / t


def kernel(space: Space, z: complex, w: complex) -> complex:
    """Kernel of the requested space."""
    if space is Space.FOCK:
        return fock_kernel(z, w)
    return dirichlet_kernel(z, w)


def norm_sq(space: Space, z: complex) -> float:
    """Squared kernel norm of the requested space."""
    if space is Space.FOCK:
        return fock_norm_sq(z)
    return dirichlet_norm_sq(z)
