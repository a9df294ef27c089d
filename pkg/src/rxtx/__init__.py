"""Recursive block schemes for the symmetric product X X^t.

The package centers on a 4x4-block scheme with 26 general products and 8
recursive symmetric products per level, alongside a 2x2 recursive baseline
and Strassen-Winograd general multiplication.  Everything that can be
checked exactly is: schemes verify symbolically over free non-commuting
blocks, operation counts come from exact rational recurrences and closed
forms, and the discovery toy certifies minimal covers with rational
arithmetic.
"""

from .backends import (BackendUnavailableError, ExternalBackend,
                       NaiveBackend, StrassenWinogradBackend, make_backend)
from .executor import rxtx_gram, scheme_gram, strassen_xxt_gram
from .kernels import KERNEL_IMPL
from .matrix import (DenseMatrix, DimensionMismatchError, Domain, OpCounter,
                     naive_gram, naive_multiply)
from .plan import count_scheme_additions, naive_plan, optimized_rxtx_plan
from .scheme import (BilinearScheme, rxtx_scheme, scheme_from_text,
                     scheme_to_text, strassen_xxt_scheme, verify_scheme)

__version__ = "0.1.0"

__all__ = [
    "BackendUnavailableError", "BilinearScheme", "DenseMatrix",
    "DimensionMismatchError", "Domain", "ExternalBackend", "KERNEL_IMPL",
    "NaiveBackend", "OpCounter", "StrassenWinogradBackend",
    "count_scheme_additions", "make_backend", "naive_gram", "naive_multiply",
    "naive_plan", "optimized_rxtx_plan", "rxtx_gram", "rxtx_scheme",
    "scheme_from_text", "scheme_gram", "scheme_to_text", "strassen_xxt_gram",
    "strassen_xxt_scheme", "verify_scheme",
]
