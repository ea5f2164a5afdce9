from typing import Optional


class ChainCalcError(Exception):
    """
    Base class for all chaincalc errors.
    """

    pass


class DimensionMismatchError(ChainCalcError, ValueError):
    """
    Exception raised when two objects live in different ambient dimensions.
    """

    pass


class GradeMismatchError(ChainCalcError, ValueError):
    """
    Exception raised when the grades of chains, forms or multivectors do not match.
    """

    pass


class InvalidMultiIndexError(ChainCalcError, ValueError):
    """
    Exception raised when a multi-index is not strictly increasing or is out of range.
    """

    pass


class DerivativeBudgetError(ChainCalcError, RuntimeError):
    """
    Raised when a derivative oracle is asked for more derivatives than it supports.
    """

    def __init__(self, required: int, available: int, what: str = "oracle") -> None:
        super().__init__(
            f"{what} needs derivatives of total order {required}, "
            f"but its depth budget is {available}"
        )
        self.required = required
        self.available = available


class UnsupportedOrderError(ChainCalcError, NotImplementedError):
    """
    Raised when an operation is not defined for chains of dipole order >= 1.
    """

    pass


class DecompositionMismatchError(ChainCalcError, ValueError):
    """
    Raised when a difference-chain decomposition does not reconstruct its chain.
    """

    def __init__(self, residual, message: str = "decomposition does not match") -> None:
        super().__init__(f"{message}: residual has {len(residual)} term(s)")
        self.residual = residual


class CertificateViolationError(ChainCalcError, ValueError):
    """
    Raised when a certified lower bound exceeds a certified upper bound,
    which means one of the supplied form norm bounds is too small.
    """

    def __init__(self, lower: float, upper: float, witness: Optional[str] = None) -> None:
        source = "" if witness is None else f" (witness {witness})"
        super().__init__(f"lower bound {lower} exceeds upper bound {upper}{source}")
        self.lower = lower
        self.upper = upper
        self.witness = witness


class FlowEscapeError(ChainCalcError, RuntimeError):
    """Raised when a flow trajectory leaves the configured bounding region."""


class ExpressionParseError(ChainCalcError, ValueError):
    """Raised when a mini-language expression cannot be parsed."""

    def __init__(self, message: str, line: int = 1, col: int = 1) -> None:
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class ChainFormatError(ChainCalcError, ValueError):
    """Raised when the text form of a chain is malformed."""


class UnknownSuiteError(ChainCalcError, KeyError):
    """Raised when a verification suite name is not registered."""


class UnknownDemoError(ChainCalcError, KeyError):
    """Raised when a demo name is not registered."""


class UnknownTheoremError(ChainCalcError, KeyError):
    """Raised when a convergence theorem name is not registered."""
