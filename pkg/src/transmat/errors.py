"""Exception hierarchy shared by all modules."""


class MatroidError(ValueError):
    """Base class for invalid inputs and failed axiom checks."""


class AxiomError(MatroidError):
    """Input does not describe a matroid."""


class GroundSetCapError(MatroidError):
    """Ground set larger than the configured cap."""


class EnumerationLimitError(MatroidError):
    """A family enumeration hit its configured limit."""

    def __init__(self, limit, what="families"):
        super().__init__(f"enumeration of {what} exceeded limit={limit}")
        self.limit = limit


class FamilySizeError(MatroidError):
    """An inclusion-exclusion family is larger than the size cap."""

    def __init__(self, size, cap):
        super().__init__(f"family of {size} sets exceeds inclusion-exclusion cap={cap}")
        self.size = size
        self.cap = cap


class NotCyclicFlatError(MatroidError):
    """Argument is required to be a cyclic flat but is not."""


class NotTransversalError(MatroidError):
    """Raised where a presentation is required but beta is negative somewhere."""

    def __init__(self, witness, value):
        super().__init__(f"matroid is not transversal: beta({witness:#b}) = {value}")
        self.witness = witness
        self.value = value


class PresentationError(MatroidError):
    """A set system does not present the matroid it is paired with."""


class InternalConsistencyError(RuntimeError):
    """Two independent evaluations of the same quantity disagree."""
