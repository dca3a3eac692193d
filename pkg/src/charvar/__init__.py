"""Exact computations around twisted GL_n character varieties of Riemann surfaces."""

from .exact import HalfIntegerResidue, LaurentPoly, RationalFn, UsageError, exact_divide
from .partitions import Partition, enumerate_partitions
from .plethys import TruncSeries, exp_pleth, log_pleth

__all__ = [
    "HalfIntegerResidue",
    "LaurentPoly",
    "Partition",
    "RationalFn",
    "TruncSeries",
    "UsageError",
    "enumerate_partitions",
    "exact_divide",
    "exp_pleth",
    "log_pleth",
]

__version__ = "0.1.0"
