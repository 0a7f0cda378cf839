"""Exception hierarchy.

Everything raised on bad input derives from :class:`MusicBoxError`, which is
itself a :class:`ValueError` so callers that only care about "bad value" can
catch that.
"""

from __future__ import annotations


class MusicBoxError(ValueError):
    pass


class ArgumentError(MusicBoxError):
    pass


class FormatError(MusicBoxError):
    """Malformed text input. ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class CarrierError(MusicBoxError):
    pass


class PositionError(MusicBoxError):
    pass


class MultiplicityError(MusicBoxError):
    pass


class ArityMismatchError(MusicBoxError):
    pass


class MonoidError(MusicBoxError):
    pass


class MonotonicityError(MusicBoxError):
    pass


class ColorMismatchError(MusicBoxError):
    def __init__(self, message: str, slot: int | None = None):
        self.slot = slot
        super().__init__(message)


class InvalidSystemError(MusicBoxError):
    def __init__(self, message: str, diagnostics=()):
        self.diagnostics = list(diagnostics)
        super().__init__(message)


class EmptyRuleSetError(MusicBoxError):
    pass


class ReplayError(MusicBoxError):
    def __init__(self, message: str, step: int | None = None):
        self.step = step
        super().__init__(f"step {step}: {message}" if step is not None else message)


class NotFlatError(MusicBoxError):
    pass


class NotAChordError(MusicBoxError):
    pass


class NotAnArpeggioError(MusicBoxError):
    pass


class NotHomogeneousError(MusicBoxError):
    pass


class EtaError(MusicBoxError):
    pass
