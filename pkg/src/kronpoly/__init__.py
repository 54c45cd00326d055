"""Exact Kronecker coefficients, additive tableaux and stability tools."""
from .errors import InputError, IntegralityError, KronError, NotAdditiveError, SizeLimitError
from .kronecker import kron, kron_nonzero_scan
from .partitions import Partition, Tableau, enumerate_syt, parse_partition, parse_tableau

__version__ = "0.1.0"

__all__ = [
    "KronError",
    "InputError",
    "IntegralityError",
    "NotAdditiveError",
    "SizeLimitError",
    "Partition",
    "Tableau",
    "enumerate_syt",
    "parse_partition",
    "parse_tableau",
    "kron",
    "kron_nonzero_scan",
]
