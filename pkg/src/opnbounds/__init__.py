"""Exact verification toolkit for counting bounds on odd perfect numbers:
factorization lemma sweeps, contributed-prime classification and linking,
cyclotomic divisibility checks, and rational-arithmetic bound certificates."""

from .arith import FactoredInteger, factor, is_prime
from .contribution import ContributionProfile, classify, linked_prime, profile
from .errors import BudgetExceeded, InvalidInput
from .lp import (
    BoundResult,
    Certificate,
    ConstraintSystem,
    InvalidCertificate,
    build_system,
    check_certificate,
    expand,
    optimize,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "BudgetExceeded",
    "Certificate",
    "ConstraintSystem",
    "ContributionProfile",
    "FactoredInteger",
    "InvalidCertificate",
    "InvalidInput",
    "build_system",
    "check_certificate",
    "classify",
    "expand",
    "factor",
    "is_prime",
    "linked_prime",
    "optimize",
    "profile",
    "__version__",
]
