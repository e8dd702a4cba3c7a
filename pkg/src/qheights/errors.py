"""Exception hierarchy shared by all qheights modules."""


class QHeightsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(QHeightsError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class RankError(InputError):
    """A matrix is rank-deficient where full rank is required."""


class UnsupportedFieldError(InputError):
    """Exact arithmetic requested for a symbolic field descriptor."""


class BudgetExceededError(QHeightsError):
    """Enumeration exceeded its node budget (CLI exit code 3)."""


class PointsCapExceeded(QHeightsError):
    """Internal signal: point list grew past the configured cap."""


class TheoremViolationError(QHeightsError):
    """A guaranteed bound failed; indicates an implementation defect
    (CLI exit code 4)."""
