"""Exception hierarchy.

Every error carries an optional ``witness`` so callers (and the CLI) can
report exactly which element, triple or tuple broke a precondition.
"""


class ActkitError(Exception):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class IndexOutOfRange(ActkitError):
    pass


class NotAssociative(ActkitError):
    pass


class NotIdentity(ActkitError):
    pass


class UnknownBuilder(ActkitError):
    pass


class ParamTooLarge(ActkitError):
    pass


class NotInverse(ActkitError):
    pass


class BoundTooSmall(ActkitError):
    pass


class IdentityAxiomFails(ActkitError):
    pass


class AssociativityAxiomFails(ActkitError):
    pass


class MixedMonoids(ActkitError):
    pass


class NotASubact(ActkitError):
    pass


class NotAnEmbedding(ActkitError):
    pass


class NotEquivariant(ActkitError):
    pass


class TooLarge(ActkitError):
    pass


class NotAChain(ActkitError):
    pass


class SearchBudgetExceeded(ActkitError):
    pass


class NotEpi(ActkitError):
    pass


class NotMono(ActkitError):
    pass


class PreconditionViolated(ActkitError):
    pass


class InvalidSystem(ActkitError):
    pass


class NotDirected(ActkitError):
    pass


class SquaresDoNotCommute(ActkitError):
    pass


class DomainNotInClass(ActkitError):
    pass


class DomainNotProjective(ActkitError):
    pass


class NoSkeleton(ActkitError):
    pass


class CoverNotFound(ActkitError):
    """Raised only if the cover search contradicts the existence theorem."""


class CapExceeded(ActkitError):
    pass


class UnknownSuite(ActkitError):
    pass
