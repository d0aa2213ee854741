"""Exceptions raised by thetaring.

Preconditions raise DomainError (a ValueError), exceeded size caps raise
ResourceCapExceeded, failed identities raise VerificationFailure.
"""


class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class ResourceCapExceeded(RuntimeError):
    """A symbolic computation grew beyond the configured cap."""


class InternalConsistencyError(ArithmeticError):
    """A division that must be exact left a remainder."""


class VerificationFailure(AssertionError):
    """An identity that should hold exactly did not.

    The offending difference (a polynomial, ring element or number) is kept
    in .difference so reports can print it.
    """

    def __init__(self, description: str, difference=None):
        super().__init__(description)
        self.description = description
        self.difference = difference
