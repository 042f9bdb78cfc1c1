"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class CompositionDomainError(DomainError):
    """Series composition was attempted with an inner series whose constant term is nonzero."""


class ReciprocityError(DomainError):
    def __init__(self, i, j, left, right):
        self.pair = (i, j)
        super().__init__(
            f"polynomial is not reciprocal: coefficient {i} is {left} but coefficient {j} is {right}"
        )


class HypothesisError(DomainError):
    """A hypothesis of a sign lemma or classifier fails for the supplied data."""

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)
