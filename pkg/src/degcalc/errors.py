"""Exception hierarchy.

Everything a caller can reasonably recover from derives from
:class:`DegreeError`.  The CLI maps :class:`ParseError` to exit code 2 and
every other :class:`DegreeError` to exit code 1.
"""


class DegreeError(Exception):
    """Base class for domain errors."""


class ParseError(DegreeError, ValueError):
    """Malformed term, name or node reference."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class NotALimit(DegreeError, ValueError):
    pass


class Exhausted(DegreeError):
    """Fewer admissible terms exist than were requested."""


class NotNameable(DegreeError):
    def __init__(self, exponent):
        self.exponent = exponent
        super().__init__(f"no adjective for W-exponent {exponent}")


class OutOfFragment(DegreeError):
    """Meta-ordinal at or above W^2, outside the canonical model."""


class NotInBase(DegreeError):
    """Ordinal is 0 or a successor, so it has no degree."""


class OutOfRange(DegreeError):
    pass


class SchemaError(DegreeError):
    def __init__(self, where, message):
        self.where = where
        super().__init__(f"{where}: {message}")


class CycleError(DegreeError):
    pass


class DanglingRef(DegreeError):
    pass


class UnknownNode(DegreeError):
    pass


class BadParameter(DegreeError):
    pass
