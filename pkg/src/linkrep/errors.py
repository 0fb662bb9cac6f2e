"""Exception hierarchy shared by all modules."""


class LinkRepError(Exception):
    """Base class for every error raised by linkrep."""


class InvalidInput(LinkRepError):
    """The caller handed us something that violates a precondition."""


class InternalInvariantViolation(LinkRepError):
    """A check that must hold on valid input failed; this is a bug."""


# diagram
class MalformedPd(InvalidInput):
    pass


class InvalidEdgeMultiplicity(InvalidInput):
    pass


class BrokenComponentChain(InvalidInput):
    pass


class SameComponent(InvalidInput):
    pass


# exactmath
class InexactDivision(LinkRepError):
    pass


# alexander
class SingleComponent(InvalidInput):
    pass


# presentation / reps
class BasepointNotI(InvalidInput):
    pass


class InvalidColoring(InvalidInput):
    pass


class PropagationInconsistent(InternalInvariantViolation):
    pass


class NoSamplesForFreeDirection(InvalidInput):
    pass


# graphs
class InternalExhaustion(InternalInvariantViolation):
    pass


# modp
class NotOddPrime(InvalidInput):
    pass


class NoCertificate(LinkRepError):
    """Base for the two ways a certificate search can come back empty."""


class BudgetExhausted(NoCertificate):
    """The node budget ran out; says nothing about existence."""


class ExhaustedSearchSpace(NoCertificate):
    """The whole normalized search space was explored without a hit."""


# families
class UnknownName(InvalidInput):
    pass


class UTooSmall(InvalidInput):
    pass


class NotAForest(InvalidInput):
    pass
