"""
Error hierarchy for pentad and graded Lie algebra computations

Every error names the invariant it guards so the command line can report it verbatim.
"""


class PentadLieError(ValueError):
    """Base class for all validation errors raised by the processing layer"""

    invariant = "unspecified"

    def __init__(self, message: str, invariant: str = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant


# exactq
class NotSquare(PentadLieError):
    invariant = "exactq: matrix must be square"


class ShapeMismatch(PentadLieError):
    invariant = "exactq: operand shapes must agree"


class SingularMatrix(PentadLieError):
    invariant = "exactq: matrix must be invertible (rank = order)"


class NotSymmetric(PentadLieError):
    invariant = "exactq: matrix must equal its transpose"


# pentad_core
class InvalidPentad(PentadLieError):
    invariant = "pentad_core: A invertible, Gamma entries nonzero, shapes r x r / r x n / n"


# graded_engine
class InvalidLocal(PentadLieError):
    invariant = "graded_engine: local part must satisfy antisymmetry and Jacobi"


class OutOfRange(PentadLieError):
    invariant = "graded_engine: bracket degrees must lie within the expansion cutoff"


class DimensionMismatch(PentadLieError):
    invariant = "graded_engine: map matrices must match the local part dimensions"


class ExpansionLimitExceeded(PentadLieError):
    invariant = "graded_engine: total basis size must stay below PENTAD_MAX_DIM"


# km_realize
class NotSymmetrizable(PentadLieError):
    invariant = "km_realize: C = Gamma * S with Gamma invertible diagonal and S symmetric"


class CompletionFailed(PentadLieError):
    invariant = "km_realize: bordered completion of C must be invertible"


# sl2fd
class InvalidIndex(PentadLieError):
    invariant = "sl2fd: indices are -1 or pairs (i, j) with 0 <= i, j <= MAX_INDEX_ENTRY"


class DegenerateIndexSet(PentadLieError):
    invariant = "sl2fd: M must contain -1 or a pair (i, j) with i >= 1"


# backend
class InputFormatError(PentadLieError):
    invariant = "input: file must exist and follow the documented JSON / index syntax"
