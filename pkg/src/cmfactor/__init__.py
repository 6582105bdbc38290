"""Factorization of CM values of differences of modular functions.

Two genus-zero cases are implemented end to end: differences of j-invariants
at CM points of two imaginary quadratic fields (the singular moduli
factorization), and differences of the level-2 Hauptmodul
omega2 = 2^12 Delta(2z)/Delta(z) for discriminants congruent to 1 mod 8.
Both the analytic side (arbitrary-precision CM values) and the arithmetic
side (prime-by-prime counting in a biquadratic field) are computed
independently and compared; the Borcherds product identities underlying the
formulas are verified as exact identities of bivariate q-series.
"""

from .verify import gz_verify, yz_verify, borcherds_verify
from .arithside import gz_rhs, yz_rhs
from .quadarith import PrimeLog

__all__ = ["gz_verify", "yz_verify", "borcherds_verify",
           "gz_rhs", "yz_rhs", "PrimeLog"]

__version__ = "0.1.0"
