"""Exception hierarchy shared by all cswhit modules."""


class CswhitError(Exception):
    """Base class for every error raised by the library."""


class InvalidCartan(CswhitError, ValueError):
    pass


class RankCap(CswhitError, ValueError):
    pass


class WeylCap(CswhitError, RuntimeError):
    pass


class UnknownFixture(CswhitError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown fixture"


class NotSemisimple(CswhitError, ValueError):
    pass


class NotDominant(CswhitError, ValueError):
    pass


class NotQuasiMinuscule(CswhitError, ValueError):
    pass


class NotMinimal(CswhitError, ValueError):
    pass


class SearchExhausted(CswhitError, RuntimeError):
    pass


class StepNotInOmega(CswhitError, ValueError):
    pass


class MissingRootChoice(CswhitError, ValueError):
    pass


class RootNotConjugate(CswhitError, ValueError):
    pass


class EmptyMV(CswhitError, ValueError):
    pass


class NonIntegralDimension(CswhitError, ArithmeticError):
    pass


class PreconditionViolated(CswhitError, ValueError):
    pass


class TwistClash(CswhitError, ValueError):
    pass


class ParityViolation(CswhitError, ValueError):
    pass


class ConsistencyFailure(CswhitError, AssertionError):
    """An internal cross-check disagreed; indicates a bug, not a math outcome."""
