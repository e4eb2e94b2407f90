"""
Exception types for the q-congruence toolkit.

Every error subclasses ValueError so callers that only know about bad input
keep working. Verification mismatches are never raised; they are reported.
"""


class QSeriesError(ValueError):
    """Base class for engine errors."""


class RingMismatchError(QSeriesError):
    """Operands live in different coefficient rings."""


class NonUnitError(QSeriesError):
    """A constant term that must be invertible is not."""


class ZeroFactorError(QSeriesError):
    """A product contains the factor (1 - 1)."""


class ConvergenceError(QSeriesError):
    """A theta specification whose terms do not tend to infinite order."""


class ConsistencyError(QSeriesError):
    """Two constructions of the same series disagree. Signals an engine bug."""


class OffsetError(QSeriesError):
    """A congruence offset formula did not produce an integer."""


class SpecParseError(QSeriesError):
    """An eta-quotient spec string could not be parsed."""


class UnknownSeriesError(QSeriesError):
    """A series name is not registered."""
