"""Generalized Reed-Solomon codes over small finite fields: construction,
Euclidean hulls by three independent routes, code classification, and a
search for self-dual instances."""

from .errors import (
    BadFormat,
    BadParameters,
    BudgetExceeded,
    ConditionUnmet,
    ExponentRange,
    GrsHullError,
    NegativeGamma,
    NotPrime,
    OracleDisagreement,
    RootOfSOnAlpha,
    SpecFileError,
    TheoremViolation,
    UnsupportedSize,
)
from .gf import Field, FieldElement, field_create, field_of_order

__version__ = "0.1.0"

__all__ = [
    "BadFormat",
    "BadParameters",
    "BudgetExceeded",
    "ConditionUnmet",
    "ExponentRange",
    "Field",
    "FieldElement",
    "GrsHullError",
    "NegativeGamma",
    "NotPrime",
    "OracleDisagreement",
    "RootOfSOnAlpha",
    "SpecFileError",
    "TheoremViolation",
    "UnsupportedSize",
    "field_create",
    "field_of_order",
    "__version__",
]
