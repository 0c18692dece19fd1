class PencilPointsError(Exception):
    """Base of every error raised deliberately by pencil_points."""

    exit_code = 70


class DegeneratePencilError(PencilPointsError, ValueError):
    """The two coefficient rows are proportional (every minor vanishes)."""

    exit_code = 1


class SingularCurveError(PencilPointsError, ValueError):
    """Some minor vanishes, so the intersection is not a smooth curve."""

    exit_code = 2


class BadPrimeError(PencilPointsError, ValueError):
    exit_code = 3


class ResourceError(PencilPointsError):
    exit_code = 4


class TheoremViolationError(PencilPointsError):
    """
    An identity that holds for every valid input has failed. This is always
    a bug (or an input that skipped validation).
    """

    exit_code = 5


class DomainError(PencilPointsError, ValueError):
    """A parameter lies outside the domain on which a formula is stated."""

    exit_code = 64


class ConfigurationError(PencilPointsError, ValueError):
    exit_code = 64


class ParameterWarning(UserWarning):
    pass
