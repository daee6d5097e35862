class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """The inputs are valid, but the requested construction does not apply to them."""


class AxiomError(DomainError):
    """A nearring law failed during construction.

    ``witness`` holds the first violating tuple in lexicographic order.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
