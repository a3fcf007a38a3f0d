"""Exception hierarchy for orelab."""


class OrelabError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(OrelabError, ValueError):
    pass


class UnitAxiomViolation(OrelabError, ValueError):
    pass


class OrbitBoundExceeded(OrelabError, RuntimeError):
    pass


class SubtractionUnderflow(OrelabError, ValueError):
    pass


class ArityMismatch(OrelabError, ValueError):
    pass


class NotPrime(OrelabError, ValueError):
    pass


class OutOfRange(OrelabError, ValueError):
    pass


class InvalidMonoid(OrelabError, ValueError):
    pass


class WrongMonoidKind(OrelabError, TypeError):
    pass


class RingMismatch(OrelabError, ValueError):
    pass


class ZeroElement(OrelabError, ValueError):
    pass


class WrongPiKind(OrelabError, TypeError):
    pass


class NotInvariantCoefficient(OrelabError, ValueError):
    """A coefficient expected to lie in R_Delta does not."""


class UnsupportedBase(OrelabError, TypeError):
    pass


class WrongCharacteristic(OrelabError, ValueError):
    pass


class TooLarge(OrelabError, RuntimeError):
    pass


class HypothesesNotMet(OrelabError):
    def __init__(self, missing):
        self.missing = list(missing)
        super().__init__("hypotheses not met: " + ", ".join(self.missing))


class ParseError(OrelabError, ValueError):
    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
