"""Exception hierarchy. Every error carries a short machine-readable ``code``."""

from __future__ import annotations


class MdrecipError(Exception):
    code = "error"


class SizeGuardError(MdrecipError):
    code = "size_guard"

    def __init__(self, message: str, guard: str):
        super().__init__(message)
        self.guard = guard


class DomainError(MdrecipError):
    code = "domain"


class ShapeError(MdrecipError):
    code = "shape"


class PreconditionError(MdrecipError):
    code = "precondition"


class SubstitutionError(MdrecipError):
    code = "substitution"


class NotPowerSeriesError(MdrecipError):
    code = "not_power_series"


class ZeroWeightError(MdrecipError):
    code = "zero_weight"


class DegenerateSequenceError(MdrecipError):
    code = "degenerate_sequence"


class InconsistentRecurrenceError(MdrecipError):
    code = "inconsistent_recurrence"


class InsufficientDataError(MdrecipError):
    code = "insufficient_data"
