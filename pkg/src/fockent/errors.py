"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`FockError`.
The CLI maps :class:`StateSyntaxError` to exit code 2 and every other
:class:`FockError` to exit code 3.
"""


class FockError(ValueError):
    """Base class for domain errors."""


class LengthMismatch(FockError):
    pass


class FermionOccupancyViolation(FockError):
    pass


class OccupationOverflow(FockError):
    """A mode holds more than the representable maximum of particles."""


class NonFiniteAmplitude(FockError):
    pass


class MixedParticleNumber(FockError):
    pass


class ShapeMismatch(FockError):
    pass


class IndexOutOfRange(FockError, IndexError):
    pass


class StatsMismatch(FockError):
    pass


class EmptyState(FockError):
    pass


class EmptySector(FockError):
    pass


class WrongParticleNumber(FockError):
    pass


class WrongStatistics(FockError):
    pass


class NotDensityMatrix(FockError):
    pass


class DegeneracyViolation(FockError):
    pass


class TooLarge(FockError):
    pass


class StateSyntaxError(FockError):
    """Malformed state expression. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at offset {position}")


class ArityMismatch(StateSyntaxError):
    pass
