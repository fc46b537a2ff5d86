"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CVNNError(Exception):
    """Base class for toolkit errors.

    ``layer`` and ``unit`` are filled in by the network when an error
    escapes an activation during a forward pass.
    """

    layer: int | None = None
    unit: int | None = None

    def locate(self, layer: int, unit: int) -> "CVNNError":
        self.layer = layer
        self.unit = unit
        return self

    def __str__(self) -> str:
        msg = super().__str__()
        if self.layer is not None:
            msg = f"{msg} (layer {self.layer}, unit {self.unit})"
        return msg


class OracleError(CVNNError):
    """Finite-difference oracle met a non-finite value."""

    def __init__(self, message: str, point: complex):
        super().__init__(message)
        self.point = point


class SingularityError(CVNNError):
    """Evaluation or differentiation too close to a declared singularity."""

    def __init__(self, message: str, locus=None):
        super().__init__(message)
        self.locus = locus


class KinkError(CVNNError):
    """Differentiation requested on a non-differentiable kink."""

    def __init__(self, message: str, locus=None):
        super().__init__(message)
        self.locus = locus


class NonDifferentiableError(CVNNError):
    pass


class ActivationOverflowError(CVNNError):
    pass


class AlgorithmMismatchError(CVNNError):
    pass


class AssumptionViolationError(CVNNError):
    pass


class NumericFailure(CVNNError):
    pass
