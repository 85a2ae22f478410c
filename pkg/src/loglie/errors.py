"""Exception hierarchy shared across the library.

Three families matter to callers: bad input (parse errors and the like),
mathematically valid input that falls outside the supported class (non-split
Lie algebras, irrational weights, ...), and violated internal invariants,
which always indicate a bug.
"""


class LoglieError(Exception):
    """Base class for every error raised by this library."""


class InputError(LoglieError):
    """Malformed user input: bad syntax, unknown variables, bad files."""


class UnsupportedError(LoglieError):
    """Valid input outside the class this implementation handles."""


class InternalError(LoglieError):
    """An internal invariant failed; indicates a bug, not a user error."""


class ParseError(InputError):
    """Syntax error in an expression, with a character offset."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


class RingMismatchError(InputError):
    """Operands live over different polynomial rings."""


class NotReducedError(UnsupportedError):
    """The defining polynomial has a repeated factor."""


class NotGradedError(UnsupportedError):
    """No positive weight vector makes the given generators homogeneous."""


class NotIsolatedError(UnsupportedError):
    """The singular locus is positive dimensional where a point was required."""


class SmoothFactorError(UnsupportedError):
    """The hypersurface splits off a smooth factor; analysis is refused."""


class NonSplitError(UnsupportedError):
    """A rational computation needs eigenvalues that are not rational."""


class IrrationalWeightError(UnsupportedError):
    """A weight-space decomposition met an irrational eigenvalue."""


class NotSemisimpleError(UnsupportedError):
    """A matrix expected to be semisimple has a repeated-root minimal polynomial."""


class NotCommutingError(UnsupportedError):
    """Matrices expected to commute do not."""
