"""Exception types shared across the package."""


class SphomotopyError(Exception):
    pass


class NotInImage(SphomotopyError):
    """Requested preimage of a vector outside the column space."""


class ValidationFailure(SphomotopyError):
    """An internal cross-check failed; signals a bug, not a user error."""


class NotACharacter(SphomotopyError):
    """Weight-multiplicity data is not the character of a representation."""


class TargetNotOneConnected(SphomotopyError):
    """Minimal-model target has nonzero degree-1 part or A^0 != <1>."""


class InternalInconsistency(SphomotopyError):
    """A construction postcondition failed after a stage was assembled."""


class BudgetExceeded(SphomotopyError):
    """Estimated monomial count above the configured budget."""

    def __init__(self, degree, estimate, budget):
        self.degree = degree
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"monomial budget exceeded at degree {degree}: "
            f"estimated {estimate} monomials > budget {budget}"
        )
