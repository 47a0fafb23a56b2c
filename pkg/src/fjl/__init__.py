"""Exact and numeric checks for Fermat-type functional equations f^n + g^m + h^l = 1."""

__version__ = "1.0.0"

from .scalars import Scalar, I, Q, S, SQRT2, SQRT3, SQRT6, ZETA8  # noqa: E402,F401
from .exponents import Assumptions, Exponent  # noqa: E402,F401
from .jets import JetExpr, JetFraction, JetSymbol, derive, total_derivative, valuation  # noqa: E402,F401
from .parsing import ParseError, parse  # noqa: E402,F401
