"""Exception hierarchy.

Precondition and regime failures derive from :class:`PreconditionError`
(CLI exit code 2); bugs surfaced by exact self-checks derive from
:class:`InternalConsistencyError` (CLI exit code 1).
"""


class TorusqError(Exception):
    pass


class PreconditionError(TorusqError, ValueError):
    pass


class InvalidLieType(PreconditionError):
    pass


class NotDominantIntegral(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class CosetMismatch(PreconditionError):
    pass


class OutOfValidityWindow(PreconditionError):
    pass


class NoTheoremApplies(PreconditionError):
    pass


class ShortRootBoundViolated(NoTheoremApplies):
    pass


class UnsupportedType(PreconditionError):
    pass


class InsufficientData(PreconditionError):
    pass


class InternalConsistencyError(TorusqError, RuntimeError):
    pass


class InexactDivision(InternalConsistencyError):
    pass


class PropositionViolated(InternalConsistencyError):
    pass
