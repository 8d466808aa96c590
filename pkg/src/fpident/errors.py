"""Exception types shared across the package."""


class FpidentError(Exception):
    """Base class for all errors raised by this package."""


class ConstantInput(FpidentError, ValueError):
    pass


class ZeroInput(FpidentError, ValueError):
    pass


class NotMonic(FpidentError, ValueError):
    pass


class NotSquare(FpidentError, ValueError):
    pass


class EmptyGenerators(FpidentError, ValueError):
    pass


class ZeroConstantTerm(FpidentError, ValueError):
    pass


class NotAutomorphism(FpidentError, ValueError):
    pass


class NotHomomorphism(FpidentError, ValueError):
    pass


class SeriesNotInvariant(FpidentError, ValueError):
    pass


class FactorNotElementaryAbelian(FpidentError, ValueError):
    pass


class ConstantTermNotUnit(FpidentError, ValueError):
    pass


class HypothesisViolated(FpidentError, ValueError):
    """A theorem verifier was handed an instance outside its hypotheses."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class BoundExceeded(FpidentError, ValueError):
    pass


class DimensionCap(FpidentError, ValueError):
    pass


class SupportNotAF(FpidentError, ValueError):
    pass


class DoesNotSplit(FpidentError, ValueError):
    pass


class IdentityFails(FpidentError, ValueError):
    pass


class NotPGroup(FpidentError, ValueError):
    pass


class ClassTooHigh(FpidentError, ValueError):
    pass


class EvenModulus(FpidentError, ValueError):
    pass


class JacobiFails(FpidentError, ValueError):
    pass


class ParseError(FpidentError, ValueError):
    """Raised by the polynomial parser; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}")
