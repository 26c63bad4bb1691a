"""Existence, construction and verification of 2-factorizations of small graphs."""

from .advisor import ProblemInstance, Verdict, advise
from .groups import FiniteAbelianGroup
from .model import (
    BlownCycle,
    Circulant,
    CompleteMinusI,
    CompleteOdd,
    CompletePlusJ,
    CycleType,
    Equipartite,
    FactorizationCert,
    LambdaComplete,
    TwoFactor,
    parse_cycle_type,
    parse_host,
)
from .verify import VerifyReport, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "BlownCycle",
    "Circulant",
    "CompleteMinusI",
    "CompleteOdd",
    "CompletePlusJ",
    "CycleType",
    "Equipartite",
    "FactorizationCert",
    "FiniteAbelianGroup",
    "LambdaComplete",
    "ProblemInstance",
    "TwoFactor",
    "Verdict",
    "VerifyReport",
    "advise",
    "parse_cycle_type",
    "parse_host",
    "verify_certificate",
]
