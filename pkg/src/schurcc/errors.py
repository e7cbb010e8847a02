"""Exception hierarchy shared across the toolkit."""


class SchurError(Exception):
    """Base class for all domain errors raised by this package."""


class NotPrime(SchurError, ValueError):
    """Field modulus is not a prime number."""


class FieldMismatch(SchurError, ValueError):
    """Operands belong to different prime fields."""


class DivisionByZero(SchurError, ZeroDivisionError):
    """Inversion or division by the zero element."""


class ZeroElement(SchurError, ValueError):
    """Operation requires a nonzero field element."""


class NotCoprime(SchurError, ValueError):
    """Block length shares a factor with the field characteristic."""


class NotADivisor(SchurError, ValueError):
    """Candidate generator does not divide the ring modulus."""


class ZeroGenerator(SchurError, ValueError):
    """The zero polynomial cannot generate a code."""


class DimensionMismatch(SchurError, ValueError):
    """Vector or matrix dimensions are incompatible."""


class RingMismatch(SchurError, ValueError):
    """Operands live in different quotient rings."""


class ZeroCode(SchurError, ValueError):
    """Operation is undefined for the zero code."""


class NotConstacyclic(SchurError, ValueError):
    """A span is not closed under the constacyclic shift."""


class BelowRegularity(SchurError, ValueError):
    """Requested power index precedes the equilibrium regime."""


class UnstabilizedError(SchurError, RuntimeError):
    """Dimension sequence did not stabilize within the power budget.

    Carries the partial data computed so far in ``dims``.
    """

    def __init__(self, message, dims):
        super().__init__(message)
        self.dims = tuple(dims)


class ProjectionNotConstacyclic(SchurError, RuntimeError):
    """Internal consistency failure: a block projection broke shift closure."""


class ConfigError(SchurError, ValueError):
    """Malformed experiment configuration."""
