"""Exception hierarchy.

Every error carries the witness that made the check fail, so that callers
(and the command line) can print exactly which elements broke which axiom.
"""


class SkewBraceError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SkewBraceError, ValueError):
    """Input tables do not describe the claimed structure."""

    kind = "ValidationError"

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


# group tables

class EntryOutOfRange(ValidationError):
    kind = "EntryOutOfRange"


class NotAssociative(ValidationError):
    kind = "NotAssociative"


class IdentityNotZero(ValidationError):
    kind = "IdentityNotZero"


class NotLatin(ValidationError):
    kind = "NotLatin"


# braces

class AddNotGroup(ValidationError):
    kind = "AddNotGroup"

    def __init__(self, cause):
        super().__init__(f"additive table is not a group: {cause}", cause.witness)
        self.cause = cause


class MulNotGroup(ValidationError):
    kind = "MulNotGroup"

    def __init__(self, cause):
        super().__init__(f"multiplicative table is not a group: {cause}", cause.witness)
        self.cause = cause


class AxiomViolation(ValidationError):
    kind = "AxiomViolation"


# structural preconditions

class NotASubgroup(SkewBraceError, ValueError):
    pass


class NotNormal(SkewBraceError, ValueError):
    pass


class NotAnIdeal(SkewBraceError, ValueError):
    pass


class CosetMismatch(SkewBraceError):
    pass


class ActionNotHomomorphism(SkewBraceError, ValueError):
    pass


class ActionNotAutomorphism(SkewBraceError, ValueError):
    pass


class NotInternalSemidirect(SkewBraceError, ValueError):
    pass


class ThetaDoesNotPreserveM(SkewBraceError, ValueError):
    pass


class NotACocycle(SkewBraceError, ValueError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class HypothesisFailed(SkewBraceError, ValueError):
    def __init__(self, which, message=""):
        super().__init__(f"hypothesis failed: {which}" + (f" ({message})" if message else ""))
        self.which = which


class GammaNotQGroup(SkewBraceError, ValueError):
    pass


class NotSupersoluble(SkewBraceError, ValueError):
    pass


class UnsupportedOrder(SkewBraceError, ValueError):
    pass


class TooLarge(SkewBraceError, ValueError):
    pass


# theorem falsification: never caught inside the package

class ProofInvariantViolated(SkewBraceError, AssertionError):
    def __init__(self, step, message=""):
        super().__init__(f"proof step '{step}' failed" + (f": {message}" if message else ""))
        self.step = step


class SigmaOutOfRange(ProofInvariantViolated):
    def __init__(self, sigma, p):
        super().__init__("duality", f"sigma = {sigma} (mod {p}) is neither 0 nor 1")
        self.sigma = sigma
