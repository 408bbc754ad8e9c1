"""Presentation by conjugation for A1-type root systems extended by Z^n.

The map from the initial reflection group U onto the Weyl group W is an
isomorphism exactly when the nonzero classes of T in G/2G are 2-independent.
This package decides that with bit-packed GF(2) elimination and produces
certificates in both directions.
"""

from .decision import (
    Verdict,
    Witness,
    decide,
    enumerate_data,
    extract_witness,
    find_identity_word,
    verify_word,
)
from .errors import (
    A1WeylError,
    BadLength,
    BudgetExhausted,
    InvalidWitness,
    IsIndependent,
    MissingZero,
    NotARoot,
    NotGenerating,
    ParseError,
    RankTooLarge,
)
from .f2_linalg import F2Matrix, F2Vector, dependency_certificate, rank
from .symmetric_space import RootDatum, contains, smul, validate
from .weyl import WeylElement, eval_word_W, eval_word_Uab, eval_word_Wab, reflect_W

__all__ = [
    "A1WeylError",
    "BadLength",
    "BudgetExhausted",
    "F2Matrix",
    "F2Vector",
    "InvalidWitness",
    "IsIndependent",
    "MissingZero",
    "NotARoot",
    "NotGenerating",
    "ParseError",
    "RankTooLarge",
    "RootDatum",
    "Verdict",
    "WeylElement",
    "Witness",
    "contains",
    "decide",
    "dependency_certificate",
    "enumerate_data",
    "eval_word_W",
    "eval_word_Uab",
    "eval_word_Wab",
    "extract_witness",
    "find_identity_word",
    "rank",
    "reflect_W",
    "smul",
    "validate",
    "verify_word",
]
