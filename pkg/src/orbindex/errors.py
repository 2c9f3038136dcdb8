"""Exception hierarchy shared by every module of the package."""


class OrbIndexError(Exception):
    """Base class for all errors raised by orbindex."""


class NotRational(OrbIndexError):
    pass


class NonIntegral(OrbIndexError):
    pass


class OrderCapExceeded(OrbIndexError):
    pass


class InvalidGroup(OrbIndexError):
    pass


class InvalidRepresentation(OrbIndexError):
    pass


class BasisMismatch(OrbIndexError):
    pass


class UnsupportedModel(OrbIndexError):
    pass


class UnsupportedParams(UnsupportedModel):
    pass


class UnsupportedTwist(OrbIndexError):
    pass


class UnsupportedOperator(OrbIndexError):
    pass


class ValidationFailure(OrbIndexError):
    """A model violates one of the fixed-point data invariants.

    ``invariant`` names the violated rule so callers can report it.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


class SingularSeries(OrbIndexError):
    pass


class GroupingMismatch(OrbIndexError):
    pass


class TwistMismatch(OrbIndexError):
    pass


class ReconstructionFailure(OrbIndexError):
    pass
