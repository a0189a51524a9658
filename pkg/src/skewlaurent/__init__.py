"""Exact arithmetic in twisted Laurent series rings D = L((t, sigma)).

The coefficient field L is Q, Q(u) or a finite field F_{p^k}; sigma is an
automorphism of L.  Elements of D are truncated series with absolute
precision, multiplied by the twisted rule ``t*a = sigma(a)*t``.
"""

from .errors import DomainError, FieldMismatchError, UsageError
from .exactfield import (
    F4, QQ, QU, Frobenius, GaloisField, Identity, Scale, Shift, SkewContext,
)
from .series import (
    DEFAULT_PRECISION, ZERO, SkewLaurentSeries, constant, equals_to_precision,
    from_terms, inverse, leading_coeff, monomial, mul, mul_incremental, one,
    power, truncate, valuation,
)

__version__ = "0.1.0"
