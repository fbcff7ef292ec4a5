"""Exact lifting of low-genus curves from finite fields to number rings.

The package lifts a curve over F_q (odd characteristic) to a curve over
the order Z[t]/(m) of a number field in which p stays prime, preserving
both the genus and the F_q-gonality, and certifies the result through
Newton-polygon combinatorics and sampling.
"""

__version__ = "0.1.0"

from .ff import FqField, FqExtField, FqElement, chi2, sqrt, frobenius

__all__ = [
    "FqField",
    "FqExtField",
    "FqElement",
    "chi2",
    "sqrt",
    "frobenius",
    "__version__",
]
