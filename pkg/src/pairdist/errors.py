from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .models import RingElement


class InvalidParametersError(ValueError):
    """Raised when an operation is called outside its documented domain."""


class FormulaBranchError(RuntimeError):
    """Raised when a closed form has no branch for an input or overlapping branches disagree."""


class BudgetExhaustedError(Exception):
    """Raised when a codeword enumeration reaches its budget before completing.

    The best weights seen so far are attached for diagnostics only; they are
    not certified minima.
    """

    def __init__(
        self,
        enumerated: int,
        best_pair: "tuple[int, RingElement] | None" = None,
        best_hamming: "tuple[int, RingElement] | None" = None,
    ) -> None:
        self.enumerated = enumerated
        self.best_pair = best_pair
        self.best_hamming = best_hamming
        super().__init__(
            f"Enumeration budget exhausted after {enumerated} codeword(s); "
            "result is not a certified minimum."
        )

    @property
    def best_so_far(self) -> "tuple[int, RingElement] | None":
        """Smallest pair weight seen before the budget ran out, with its witness."""
        return self.best_pair
