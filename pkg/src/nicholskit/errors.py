"""Exception types shared across the package.

Errors that carry a witness (an index, a pair, an element) keep it in
``args`` so callers and tests can inspect what failed.
"""


class NicholsError(Exception):
    """Base class for all package-specific errors."""


class ZeroInputError(NicholsError):
    """An operation that requires a nonzero input received zero."""


class NotRootOfUnityError(NicholsError):
    """A braiding entry has infinite multiplicative order."""

    def __init__(self, i, j):
        super().__init__(f"q[{i}][{j}] is not a root of unity")
        self.position = (i, j)


class PositionOutOfRangeError(NicholsError):
    pass


class CapTooSmallError(NicholsError):
    pass


class NotHomogeneousError(NicholsError):
    def __init__(self, index):
        super().__init__(f"generator #{index} is not Z^theta-homogeneous")
        self.index = index


class NotCoidealError(NicholsError):
    def __init__(self, witness, degree):
        super().__init__(f"ideal element {witness} of degree {degree} is not a coideal element")
        self.witness = witness
        self.degree = degree


class CounitNonzeroError(NicholsError):
    def __init__(self, witness):
        super().__init__(f"counit does not vanish on ideal element {witness}")
        self.witness = witness


class NotYDMorphismError(NicholsError):
    def __init__(self, index):
        super().__init__(f"map #{index} does not preserve the isotypic components")
        self.index = index


class NotClosedError(NicholsError):
    def __init__(self, pair):
        super().__init__(f"commutator of maps {pair} escapes the span")
        self.pair = pair


class RealizationMismatchError(NicholsError):
    pass


class NoAntipodeError(NicholsError):
    def __init__(self, degree, detail=""):
        super().__init__(f"no antipode solution at filtration degree {degree}" + (f": {detail}" if detail else ""))
        self.degree = degree


class NotGrouplikeError(NicholsError):
    pass


class NotInBdVError(NicholsError):
    def __init__(self, index):
        super().__init__(f"Lie basis map #{index} is not a Yetter-Drinfeld endomorphism of V")
        self.index = index


class StabilityFailedError(NicholsError):
    pass


class PreconditionFailedError(NicholsError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MismatchedLieAlgebrasError(NicholsError):
    pass


class MissingDegreeTagsError(NicholsError):
    pass


class HypothesisFailedError(NicholsError):
    pass


class InternalInconsistencyError(NicholsError):
    """Two verdicts that a proven equivalence forces to agree came out different."""


class NotAProductError(NicholsError):
    pass


class MissingSectionError(NicholsError):
    def __init__(self, section, why=""):
        super().__init__(f"spec file is missing required section [{section}]" + (f" ({why})" if why else ""))
        self.section = section


class NotFiniteWithinCapError(NicholsError):
    pass


class SpecParseError(NicholsError):
    """Raised on malformed spec files; carries a location when known."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
