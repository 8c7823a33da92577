"""Exception types shared across the package."""


class FramingsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FramingsError, ValueError):
    """Malformed textual input (ring grammar, word grammar, phi expression, JSON payload)."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvalidModulus(FramingsError, ValueError):
    """Z/m requested with m < 2."""


class RingMismatch(FramingsError, ValueError):
    """Operands live over different coefficient rings."""


class NotInvertible(FramingsError, ArithmeticError):
    """Division requested by a non-unit of the ring."""


class IndexOutOfRange(FramingsError, IndexError):
    """Generator index outside the range allowed by the surface signature."""


class SignatureMismatch(FramingsError, ValueError):
    """Operands live over different surface signatures."""


class TruncationMismatch(FramingsError, ValueError):
    """Tensor operands truncated at different degrees."""


class NotUnitNormalized(FramingsError, ValueError):
    """Tensor inverse requested for an element whose constant term is not 1."""


class UnsupportedSignature(FramingsError, ValueError):
    """Operation restricted to a subfamily of signatures (usually n = 0)."""


class NotInverse(FramingsError, ValueError):
    """The supplied forward/backward generator maps do not compose to the identity."""


class BoundaryNotFixed(FramingsError, ValueError):
    """The automorphism moves the boundary word."""


class NotSymplectic(FramingsError, ValueError):
    """The induced homology matrix does not preserve the intersection form."""


class EmptyCurveList(FramingsError, ValueError):
    """Certificate requested with no constraint curves."""


class ConfigError(FramingsError, ValueError):
    """Invalid verification-suite configuration."""
