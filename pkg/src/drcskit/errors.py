"""Exception hierarchy shared by every drcskit module.

Each family carries the CLI exit code it maps to: validation failures
exit with 2, parse errors with 3, parameter/precondition errors with 4.
"""


class DrcsError(Exception):
    exit_code = 1


class ValidationError(DrcsError):
    """A constructed object failed its own validator."""

    exit_code = 2


class ParseError(DrcsError, ValueError):
    """Malformed input file. Carries the 1-based line and field position."""

    exit_code = 3

    def __init__(self, message, line=None, field=None, path=None):
        self.line = line
        self.field = field
        self.path = path
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class ParameterError(DrcsError, ValueError):
    exit_code = 4


class NotPrime(ParameterError):
    pass


class NotIrreducible(ParameterError):
    pass


class NotPrimitive(ParameterError):
    pass


class AlphabetMismatch(ParameterError):
    pass


class DimensionMismatch(ParameterError):
    pass


class UnknownSeed(ParameterError, KeyError):
    def __str__(self):
        return ParameterError.__str__(self)


class LengthMismatch(ParameterError):
    pass


class ShapeMismatch(ParameterError):
    pass


class GammaDomain(ParameterError):
    pass


class BadM(ParameterError):
    pass


class WeightSupport(ParameterError):
    pass


class VacuousBound(ParameterError):
    pass


class IndexOutOfRange(ParameterError, IndexError):
    pass
