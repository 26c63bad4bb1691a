from .budget import EXHAUSTED, FOUND, PROVED_NONE, SearchBudget, SearchOutcome
from .factorize import enumerate_two_factors, solve_exhaustive

__all__ = [
    "EXHAUSTED",
    "FOUND",
    "PROVED_NONE",
    "SearchBudget",
    "SearchOutcome",
    "enumerate_two_factors",
    "solve_exhaustive",
]
