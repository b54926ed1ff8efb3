"""Exception hierarchy shared across the package."""


class CoulombKitError(Exception):
    """Base class for all library errors."""


class DimensionError(CoulombKitError):
    """Operands have incompatible ranks or lengths."""


class LatticeError(CoulombKitError):
    """A lattice map violates a precondition (e.g. the quotient is not a torus)."""


class CartanError(CoulombKitError):
    """A matrix fails the generalized Cartan matrix axioms."""


class SymmetrizabilityError(CartanError):
    """The Cartan matrix admits no positive symmetrizers."""


class DomainError(CoulombKitError):
    """An argument is outside the operation's domain (e.g. non-dominant weight)."""


class UnsupportedError(CoulombKitError):
    """The operation is not defined for this Cartan type or theory."""


class LiftError(CoulombKitError):
    """Quantized lifts are inconsistent: their commutator is not divisible by hbar."""


class Cancelled(CoulombKitError):
    """A cooperative cancellation token expired during a long enumeration."""
