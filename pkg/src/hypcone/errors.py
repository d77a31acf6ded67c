"""Exception hierarchy.  Every error carries a stable ``code`` for the CLI."""


class HypError(Exception):
    code = "E_HYP"


class PolySyntaxError(HypError, ValueError):
    code = "E_SYNTAX"

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class DimensionMismatch(HypError, ValueError):
    code = "E_DIMENSION"


class ZeroPolynomial(HypError, ValueError):
    code = "E_ZERO_POLY"


class NotHomogeneous(HypError, ValueError):
    code = "E_NOT_HOMOGENEOUS"

    def __init__(self, first, second):
        self.exponents = (first, second)
        super().__init__(f"terms {first} and {second} have different total degree")


class DependentVectors(HypError, ValueError):
    code = "E_DEPENDENT"


class DegenerateRestriction(HypError, ValueError):
    code = "E_DEGENERATE_RESTRICTION"


class NotRealRooted(HypError, ValueError):
    code = "E_NOT_REAL_ROOTED"


class NotApplicable(HypError, ValueError):
    """The polynomial vanishes at the proposed direction."""

    code = "E_NOT_APPLICABLE"


class InvalidDirection(HypError):
    """A line through the direction is not real-rooted; ``witness`` certifies it."""

    code = "E_INVALID_DIRECTION"

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class InconsistentMembership(HypError):
    code = "E_INTERNAL_INCONSISTENCY"


class NotFoundAtThisResolution(HypError):
    code = "E_NOT_FOUND"


class SingularPoint(HypError):
    code = "E_SINGULAR_POINT"


class RamifiedConfiguration(HypError):
    code = "E_RAMIFIED"


class UnresolvableSign(HypError):
    code = "E_UNRESOLVABLE_SIGN"


class InsufficientSamples(HypError):
    code = "E_INSUFFICIENT_SAMPLES"


class ConstructionFailure(HypError):
    code = "E_CONSTRUCTION_FAILED"


class DegenerateSectionFamily(HypError):
    code = "E_DEGENERATE_SECTIONS"


class CorpusError(HypError, ValueError):
    code = "E_CORPUS"
