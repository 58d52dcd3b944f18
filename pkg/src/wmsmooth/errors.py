"""Exception hierarchy.  Every error raised on bad input derives from InputError."""

from .exactla.intmat import EmptyInput


class InputError(ValueError):
    """Invalid or unsupported input."""


class InvalidComponent(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotInRootLattice(InputError):
    pass


class NotSimpleRoot(InputError):
    pass


class NotDominant(InputError):
    pass


class NotNormal(InputError):
    pass


class NotGSaturated(InputError):
    pass


class AlphaNotInLattice(InputError):
    pass


class NotTorus(InputError):
    pass


class WrongGroup(InputError):
    pass


class InvalidParams(InputError):
    pass


class NotAVertex(InputError):
    pass


class DegenerateDimension(InputError):
    pass


class VertexOutsideChamber(InputError):
    pass


class InvalidLocalModel(InputError):
    pass


class TooLarge(InputError):
    pass


class InternalInconsistency(RuntimeError):
    """A result contradicts a property that must hold for valid input."""


class UniquenessViolated(InternalInconsistency):
    """A maximal or unique object turned out not to be unique."""


__all__ = [
    "AlphaNotInLattice",
    "DegenerateDimension",
    "DimensionMismatch",
    "EmptyInput",
    "InputError",
    "InternalInconsistency",
    "InvalidComponent",
    "InvalidLocalModel",
    "InvalidParams",
    "NotAVertex",
    "NotDominant",
    "NotGSaturated",
    "NotInRootLattice",
    "NotNormal",
    "NotSimpleRoot",
    "NotTorus",
    "TooLarge",
    "UniquenessViolated",
    "VertexOutsideChamber",
    "WrongGroup",
]
