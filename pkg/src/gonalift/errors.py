"""Error taxonomy for the lifting library.

``UnsupportedInput`` marks inputs the algorithms legitimately cannot
handle (reported, not a failure); everything else signals a violated
precondition or an internal inconsistency.
"""


class GonaliftError(Exception):
    """Base class for all library errors."""


class InputError(GonaliftError):
    """Malformed or inconsistent input data."""


class UnsupportedInput(GonaliftError):
    """Structurally valid input outside the supported range (CLI exit 2)."""


class SingularMatrix(GonaliftError):
    """A linear change of variables must be invertible."""


class DegreeTooSmall(GonaliftError):
    """Homogenization degree below the total degree."""


class ZeroInput(GonaliftError):
    """Resultant of a zero polynomial."""


class AllZero(GonaliftError):
    """gcd of an all-zero family."""


class NotPolynomial(GonaliftError):
    """A torus-level exponent change produced negative exponents."""


class ResultantDegenerate(GonaliftError):
    """Elimination stayed degenerate through all shear retries."""


class NotSquarefree(GonaliftError):
    """Hyperelliptic data with a squarefree-ness violation."""


class DivisionObstruction(GonaliftError):
    """A required exact polynomial division has no solution."""


class ConeVertexOnCurve(GonaliftError):
    """The cubic of a genus-4 input passes through the cone vertex."""


class QuadricsDoNotVanish(GonaliftError):
    """Trigonal input quadrics do not cut out the expected scroll."""


class SingularPoint(GonaliftError):
    """Tangent data requested at a point with vanishing gradient."""


class WrongRank(GonaliftError):
    """Quadratic form has the wrong rank for the requested normal form."""


class NotHyperbolic(GonaliftError):
    """Rank-4 form is not equivalent to XY - ZW over the base field."""


class ScrollStandardizationFailed(GonaliftError):
    """Brute-force scroll standardization exhausted its budget."""


class NoSecondRationalPoint(GonaliftError):
    """No tried tangent line meets the curve in a second rational point."""


class VerticalTangent(GonaliftError):
    """A transformed plane model missed its promised y-degree or support."""


class WrongGammaDegree(GonaliftError):
    """Monicization asked for a y-degree the polynomial does not have."""


class DegenerateModel(GonaliftError):
    """Toric point counting requires a nondegenerate plane model."""


class NoSamplePoints(GonaliftError):
    """The sampling pool of the original model came back empty."""


class VerificationFailed(GonaliftError):
    """A produced lift failed its own certificate checks."""
