"""Exception types raised across the package."""


class NephroidError(Exception):
    """Base class for all errors raised by :mod:`nephroid_radii`."""


class DomainError(NephroidError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class ParameterError(NephroidError, ValueError):
    """Class parameters violate the constraints of the class definition."""


class AmbiguousMembership(NephroidError):
    """A point sits on the boundary and the winding sum is not an integer."""


class NoRootBracket(NephroidError):
    """The containment margin is already negative at the first scan point."""


class PoleProximity(NephroidError, ArithmeticError):
    """An extremal Q-function was evaluated too close to one of its poles."""


class IoError(NephroidError, OSError):
    """An output file could not be written."""
