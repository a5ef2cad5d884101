"""Exception types shared across the library.

Numerical routines never return NaN/Inf silently: anything that would
produce a non-finite value raises instead, so that point clouds stay clean.
"""


class BerezinLabError(Exception):
    """Base class for all library errors."""


class DomainError(BerezinLabError):
    """Argument lies outside the mathematical domain of the operation."""


class InvalidParameterError(BerezinLabError):
    """Symbol / family / grid parameters violate their constraints."""


class UnboundedSymbolError(BerezinLabError):
    """The composition operator for this symbol is unbounded (or not
    applicable) on the requested space."""


class PoleError(BerezinLabError):
    """Evaluation hit a pole of the map."""


class DegenerateError(BerezinLabError):
    """A decomposition is requested at a removable-singularity point."""


class EmptyCloudError(BerezinLabError):
    """A geometric operation received an empty point cloud."""


class NonFinitePointError(BerezinLabError):
    """A NaN/Inf point was offered to a point cloud or detector."""


class ShapeError(BerezinLabError):
    """Matrix does not have the shape/structure required by the operation."""


class EigenFailureError(BerezinLabError):
    """The Hermitian eigensolver did not converge."""
