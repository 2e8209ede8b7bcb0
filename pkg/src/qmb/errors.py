class QMBError(Exception):
    """Base class for errors raised by the package."""


class CarrierMismatch(QMBError, TypeError):
    """A point is not a member of the carrier of the space it was used with."""


class EmptySetError(QMBError, ValueError):
    """A set distance was requested for the empty set."""


class ContractViolation(QMBError, ArithmeticError):
    """A distance or characteristic function returned NaN, inf or a negative value.

    This signals a bug in the function, not a mathematical counterexample.
    """


class MaximalSetOrBudget(QMBError):
    """Base refinement found no strictly larger base set within the index budget."""


class NoUniformDelta(QMBError):
    """No delta from the grid satisfied the neighbourhood criterion."""


class BandAssignmentError(QMBError):
    """A point lies in no band of the base within the index budget."""


class ZeroDenominator(QMBError, ZeroDivisionError):
    """Both set distances defining a partition-of-unity coefficient vanish."""


class AsymmetricInput(QMBError, ValueError):
    """A construction requiring a symmetric distance received an asymmetric one."""


class ConfigError(QMBError, ValueError):
    """Malformed suite configuration or space expression."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class CriterionViolation(QMBError):
    """A sampled point breaks ``[B_n]^delta ⊆ B_{n+1}``."""

    def __init__(self, n: int, point, delta: float):
        self.n, self.point, self.delta = n, point, delta
        super().__init__(f"[B_{n}]^{delta:g} is not inside B_{n + 1}: witness {point!r}")
