"""Exception hierarchy shared by every module in the package."""


class PetshareError(Exception):
    """Base class for all errors raised by petshare."""


class FieldMismatchError(PetshareError, ValueError):
    """Operands live in different fields."""


class EvaluationPointsExhausted(PetshareError, ValueError):
    """More participants were requested than the field has nonzero elements."""


class SpaceTooLarge(PetshareError, ValueError):
    """An exhaustive census was asked to enumerate an infeasible space."""


class ReconstructionFailure(PetshareError):
    """The failure symbol: reconstruction cannot produce the secret."""


class InsufficientShares(ReconstructionFailure):
    def __init__(self, required: int, supplied: int) -> None:
        super().__init__(f"need at least {required} shares, got {supplied}")
        self.required = required
        self.supplied = supplied


class DuplicateIndexError(ReconstructionFailure, ValueError):
    """Two shares or points claim the same evaluation index."""


class IncompatibleShares(ReconstructionFailure):
    """Shares disagree on header parameters and cannot belong to one sharing."""


class DecryptionFailure(ReconstructionFailure):
    """Reserved for authenticated suites; stream suites never raise it."""


class ShareFormatError(PetshareError, ValueError):
    """A share file has a bad magic, version, or truncated body."""
