"""Composition symbols, their validation, and Fock boundedness classification.

Five parameter families are supported:

* ``FockAffine``             phi(z) = zeta z + a            (entire plane)
* ``DiscRotation``           phi(z) = zeta z                (disc, also Fock)
* ``Blaschke``               phi(z) = (z - alpha)/(1 - conj(alpha) z)
* ``DiscAutomorphism``       phi(z) = e^{i theta} (alpha - z)/(1 - conj(alpha) z)
* ``FockSpecialAutomorphism`` phi(z) = (a z + b)/(conj(b) z + conj(a)),
  |a|^2 - |b|^2 = 1; only its b = 0 specialization is entire, so only that
  case is admitted for Fock Berezin sampling.

On the Fock space, C_phi is bounded only for phi(z) = zeta z + a with
|zeta| <= 1, and for |zeta| = 1 only when a = 0 (compact when |zeta| < 1).
Every disc automorphism induces a bounded composition operator on the
Dirichlet space, so disc symbols are accepted there without further checks.
"""

from __future__ import annotations

import cmath
import enum
import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, InvalidParameterError, PoleError
from .kernels import Space

# Tolerance for floating-point parameter entry in equality tests
# (|a| == 0, ||zeta| - 1| == 0, unitarity constraints).
PARAM_TOL = 1e-12


@dataclass(frozen=True)
class FockAffine:
    zeta: complex
    a: complex


@dataclass(frozen=True)
class DiscRotation:
    zeta: complex


@dataclass(frozen=True)
class Blaschke:
    alpha: complex


@dataclass(frozen=True)
class DiscAutomorphism:
    theta: float
    alpha: complex


@dataclass(frozen=True)
class FockSpecialAutomorphism:
    a: complex
    b: complex


Symbol = Union[FockAffine, DiscRotation, Blaschke, DiscAutomorphism, FockSpecialAutomorphism]

_DISC_VARIANTS = (DiscRotation, Blaschke, DiscAutomorphism)


class Boundedness(enum.Enum):
    BOUNDED_COMPACT = "bounded_compact"
    BOUNDED_NONCOMPACT = "bounded_noncompact"
    UNBOUNDED = "unbounded"
    NOT_APPLICABLE = "not_applicable"


def _require_finite(name: str, value: complex) -> None:
    if not cmath.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")


def validate(sym: Symbol, space: Space | None = None) -> None:
    """Check the variant parameter constraints; raise InvalidParameterError.

    With ``space`` given, additionally checks applicability there: a
    DiscRotation must be unimodular on the Dirichlet space (|zeta| <= 1
    suffices on Fock), and a FockSpecialAutomorphism with b != 0 is rejected
    for Fock Berezin use because the map is not entire.
    """
    if isinstance(sym, FockAffine):
        _require_finite("zeta", sym.zeta)
        _require_finite("a", sym.a)
        if space is Space.DIRICHLET:
            raise InvalidParameterError("affine plane symbols are not disc self-maps")
    elif isinstance(sym, DiscRotation):
        _require_finite("zeta", sym.zeta)
        if space is Space.DIRICHLET:
            if abs(abs(sym.zeta) - 1.0) > PARAM_TOL:
                raise InvalidParameterError(
                    f"disc rotation on the Dirichlet space needs |zeta| = 1, got |zeta| = {abs(sym.zeta)}"
                )
        elif abs(sym.zeta) > 1.0 + PARAM_TOL:
            raise InvalidParameterError(f"rotation needs |zeta| <= 1, got |zeta| = {abs(sym.zeta)}")
    elif isinstance(sym, Blaschke):
        _require_finite("alpha", sym.alpha)
        if abs(sym.alpha) >= 1.0:
            raise InvalidParameterError(f"Blaschke factor needs |alpha| < 1, got |alpha| = {abs(sym.alpha)}")
        if space is Space.FOCK:
            raise InvalidParameterError("Blaschke factors are disc symbols, not entire maps")
    elif isinstance(sym, DiscAutomorphism):
        if not math.isfinite(sym.theta):
            raise InvalidParameterError("theta must be finite")
        _require_finite("alpha", sym.alpha)
        if abs(sym.alpha) >= 1.0:
            raise InvalidParameterError(f"disc automorphism needs |alpha| < 1, got |alpha| = {abs(sym.alpha)}")
        if space is Space.FOCK:
            raise InvalidParameterError("disc automorphisms are disc symbols, not entire maps")
    elif isinstance(sym, FockSpecialAutomorphism):
        _require_finite("a", sym.a)
        _require_finite("b", sym.b)
        resid = abs(abs(sym.a) ** 2 - abs(sym.b) ** 2 - 1.0)
        if resid > PARAM_TOL:
            raise InvalidParameterError(
                f"special automorphism needs |a|^2 - |b|^2 = 1, off by {resid:.3g}"
            )
        if space is Space.FOCK and abs(sym.b) > PARAM_TOL:
            raise InvalidParameterError(
                "special automorphism with b != 0 has a pole, so it is not usable on the Fock space"
            )
        if space is Space.DIRICHLET:
            raise InvalidParameterError(
                "use the disc automorphism form e^{i theta}(alpha - z)/(1 - conj(alpha) z) on the disc"
            )
    else:
        raise InvalidParameterError(f"unknown symbol type {type(sym).__name__}")


def apply(sym: Symbol, z: complex) -> complex:
    """Evaluate phi(z) for the given symbol."""
    if not cmath.isfinite(z):
        raise DomainError(f"symbol evaluation needs finite z, got {z!r}")
    if isinstance(sym, FockAffine):
        return sym.zeta * z + sym.a
    if isinstance(sym, DiscRotation):
        # Entire map; disc membership is the caller's concern on the disc.
        return sym.zeta * z
    if isinstance(sym, Blaschke):
        if abs(z) >= 1.0:
            raise DomainError(f"Blaschke factor needs |z| < 1, got |z| = {abs(z)}")
        return (z - sym.alpha) / (1.0 - sym.alpha.conjugate() * z)
    if isinstance(sym, DiscAutomorphism):
        if abs(z) >= 1.0:
            raise DomainError(f"disc automorphism needs |z| < 1, got |z| = {abs(z)}")
        return cmath.exp(1j * sym.theta) * (sym.alpha - z) / (1.0 - sym.alpha.conjugate() * z)
    if isinstance(sym, FockSpecialAutomorphism):
        den = sym.b.conjugate() * z + sym.a.conjugate()
        if den == 0:
            raise PoleError(f"special automorphism has a pole at z = {z!r}")
        return (sym.a * z + sym.b) / den
    raise InvalidParameterError(f"unknown symbol type {type(sym).__name__}")


def classify_fock_boundedness(zeta: complex, a: complex) -> Boundedness:
    """Boundedness of C_phi on the Fock space for phi(z) = zeta z + a.

    |zeta| < 1 gives a compact operator for any a; |zeta| = 1 is bounded
    exactly when a = 0; everything else is unbounded.  Equality tests use
    PARAM_TOL to absorb floating-point parameter entry.
    """
    mod = abs(zeta)
    if mod < 1.0 - PARAM_TOL:
        return Boundedness.BOUNDED_COMPACT
    if mod <= 1.0 + PARAM_TOL:
        if abs(a) <= PARAM_TOL:
            return Boundedness.BOUNDED_NONCOMPACT
        return Boundedness.UNBOUNDED
    return Boundedness.UNBOUNDED


def fock_boundedness(sym: Symbol) -> Boundedness:
    """Boundedness classification of the symbol's composition operator on Fock."""
    if isinstance(sym, FockAffine):
        return classify_fock_boundedness(sym.zeta, sym.a)
    if isinstance(sym, DiscRotation):
        return classify_fock_boundedness(sym.zeta, 0.0)
    if isinstance(sym, FockSpecialAutomorphism):
        if abs(sym.b) <= PARAM_TOL:
            return classify_fock_boundedness(sym.a / sym.a.conjugate(), 0.0)
        return Boundedness.NOT_APPLICABLE
    return Boundedness.NOT_APPLICABLE


def rotation_of_special_automorphism(sym: FockSpecialAutomorphism) -> DiscRotation:
    """The b = 0 specialization (a z + 0)/(0 + conj(a)) = (a/conj(a)) z."""
    if abs(sym.b) > PARAM_TOL:
        raise InvalidParameterError("only b = 0 special automorphisms reduce to rotations")
    return DiscRotation(sym.a / sym.a.conjugate())


# ---------------------------------------------------------------------------
# Textual symbol syntax, e.g. "elliptic:zeta=0.5+0.866i" or
# "affine:zeta=0.5,a=10".  Complex literals are re+imi; angles accept plain
# radians or pi fractions like "pi/3", "-3pi/4".
# ---------------------------------------------------------------------------

_ANGLE_RE = re.compile(r"^([+-]?\d*\.?\d*)\s*pi\s*(?:/\s*(\d+\.?\d*))?$")


def parse_complex(text: str) -> complex:
    """Parse a re+imi literal ('0.5+0.866i', '-1', '0.7i', 'i') exactly."""
    s = text.strip().replace(" ", "")
    if not s:
        raise InvalidParameterError("empty complex literal")
    s = s.replace("i", "j")
    s = re.sub(r"(^|[+-])j", r"\g<1>1j", s)
    try:
        value = complex(s)
    except ValueError as exc:
        raise InvalidParameterError(f"cannot parse complex literal {text!r}") from exc
    if not cmath.isfinite(value):
        raise InvalidParameterError(f"non-finite complex literal {text!r}")
    return value


def parse_angle(text: str) -> float:
    """Parse an angle in radians; 'pi/3'-style fraction literals are accepted."""
    s = text.strip().replace(" ", "")
    mat = _ANGLE_RE.match(s)
    if mat:
        coef_text, den_text = mat.groups()
        if coef_text in ("", "+"):
            coef = 1.0
        elif coef_text == "-":
            coef = -1.0
        else:
            coef = float(coef_text)
        den = float(den_text) if den_text else 1.0
        if den == 0.0:
            raise InvalidParameterError(f"zero denominator in angle {text!r}")
        return coef * math.pi / den
    try:
        return float(s)
    except ValueError as exc:
        raise InvalidParameterError(f"cannot parse angle {text!r}") from exc


def _split_params(body: str, spec_text: str) -> dict[str, str]:
    params: dict[str, str] = {}
    if not body:
        return params
    for item in body.split(","):
        if "=" not in item:
            raise InvalidParameterError(f"bad symbol parameter {item!r} in {spec_text!r}")
        key, _, value = item.partition("=")
        params[key.strip()] = value.strip()
    return params


def parse_symbol(text: str) -> Symbol:
    """Parse the CLI symbol syntax into a Symbol (not yet space-validated)."""
    name, sep, body = text.strip().partition(":")
    if not sep:
        raise InvalidParameterError(f"symbol {text!r} needs the form name:key=value[,...]")
    name = name.strip().lower()
    params = _split_params(body, text)

    def take(key: str) -> str:
        try:
            return params.pop(key)
        except KeyError:
            raise InvalidParameterError(f"symbol {text!r} is missing parameter {key!r}") from None

    if name == "elliptic":
        sym: Symbol = DiscRotation(parse_complex(take("zeta")))
    elif name == "blaschke":
        sym = Blaschke(parse_complex(take("alpha")))
    elif name == "affine":
        sym = FockAffine(parse_complex(take("zeta")), parse_complex(take("a")))
    elif name == "autd":
        sym = DiscAutomorphism(parse_angle(take("theta")), parse_complex(take("alpha")))
    elif name == "autf":
        sym = FockSpecialAutomorphism(parse_complex(take("a")), parse_complex(take("b")))
    else:
        raise InvalidParameterError(f"unknown symbol kind {name!r}")
    if params:
        raise InvalidParameterError(f"unused symbol parameters {sorted(params)} in {text!r}")
    validate(sym)
    return sym


def format_complex(value: complex) -> str:
    """Inverse of parse_complex, shortest round-trip digits."""
    re_part, im_part = value.real, value.imag
    if im_part == 0.0:
        return repr(re_part)
    sign = "+" if im_part >= 0 else "-"
    return f"{re_part!r}{sign}{abs(im_part)!r}i"


def symbol_text(sym: Symbol) -> str:
    """Canonical textual form of a symbol (parse_symbol round-trips it)."""
    if isinstance(sym, FockAffine):
        return f"affine:zeta={format_complex(sym.zeta)},a={format_complex(sym.a)}"
    if isinstance(sym, DiscRotation):
        return f"elliptic:zeta={format_complex(sym.zeta)}"
    if isinstance(sym, Blaschke):
        return f"blaschke:alpha={format_complex(sym.alpha)}"
    if isinstance(sym, DiscAutomorphism):
        return f"autD:theta={sym.theta!r},alpha={format_complex(sym.alpha)}"
    if isinstance(sym, FockSpecialAutomorphism):
        return f"autF:a={format_complex(sym.a)},b={format_complex(sym.b)}"
    raise InvalidParameterError(f"unknown symbol type {type(sym).__name__}")


def is_disc_symbol(sym: Symbol) -> bool:
    return isinstance(sym, _DISC_VARIANTS)
