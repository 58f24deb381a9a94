"""
Custom exceptions for the application
"""

from typing import Optional


class GroupComputationError(Exception):
    """Base class for every failure raised by the engine"""
    pass


class DegreeMismatchError(GroupComputationError):
    """Raised when permutations of different degrees are combined"""
    pass


class TooLargeError(GroupComputationError):
    """Raised when a closure or lattice walk exceeds its configured cap"""
    pass


class ElementNotInGroupError(GroupComputationError):
    """Raised when a seed element is not a member of the parent group"""
    pass


class ParentMismatchError(GroupComputationError):
    """Raised when subgroups of different parent groups are combined"""
    pass


class NotPrimeError(GroupComputationError):
    """Raised when an operation expecting a prime receives a composite"""
    pass


class InvalidActionError(GroupComputationError):
    """Raised when a semidirect action is not a homomorphism into Aut(N)"""
    pass


class HypothesisNotMetError(GroupComputationError):
    """Raised when an operation's group-theoretic hypothesis fails"""
    pass


class ConfigurationError(GroupComputationError):
    """Raised when configuration is invalid"""
    pass


class ParseError(GroupComputationError):
    """Raised when a group file or cycle string cannot be parsed"""

    def __init__(self, message: str, field: str = "", line: Optional[int] = None):
        location = field
        if line is not None:
            location = f"{field} (line {line})" if field else f"line {line}"
        super().__init__(f"{location}: {message}" if location else message)
        self.field = field
        self.line = line
