"""Exception types shared across the toolkit."""


class XiposError(Exception):
    """Base class for all toolkit errors."""


class PoleError(XiposError, ValueError):
    """Argument sits on a pole of the function being evaluated."""


class DomainError(XiposError, ValueError):
    """Argument violates a stated precondition."""


class AccuracyDomainError(DomainError):
    """Argument lies outside the region where accuracy is validated."""


class NearZeroError(XiposError, ArithmeticError):
    """A quantity that must be divided by is below its floor."""


class ProximityError(DomainError):
    """Evaluation point is too close to a zero of the sum being formed."""


class HeightError(DomainError):
    """Evaluation height is too close to (or above) the zero table limit."""


class TableError(XiposError, ValueError):
    """Malformed zero table: parse failure, wrong order, or empty input."""


class ConvergenceError(XiposError, RuntimeError):
    """Adaptive quadrature could not reach the requested accuracy."""
