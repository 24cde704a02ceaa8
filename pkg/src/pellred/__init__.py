"""Exact polynomial Pell equation toolkit built on Redei polynomials."""

from .polyring import (
    DomainError,
    NEG_INF,
    NotIntegral,
    ONE,
    ParseError,
    Poly,
    X,
    ZERO,
    format_poly,
    parse_poly,
)
from .polymat import DimensionMismatch, PolyMatrix, build_circulant
from .redei import (
    RedeiPair,
    norm_identity_holds,
    redei_closed_form,
    redei_matrix,
    redei_recurrence,
    redei_sequence,
)
from .pell2 import (
    IntegralityClass,
    NotASolution,
    OddIndexUndefined,
    PellProblem,
    PellSolution,
    PreconditionViolated,
    UnsupportedD,
    ZeroD,
    classify,
    descend,
    identify_solution,
    nathanson,
    solve,
    solve_sequence,
    solve_square_shift,
    verify,
)
from .pellm import (
    DivisibilityReport,
    GenRedeiVec,
    IrrationalNormalizer,
    NotPrime,
    PellMSolution,
    ZeroR,
    classify_m,
    divisibility_probe,
    gen_redei,
    gen_redei_oracle,
    gen_redei_sequence,
    solve_m,
    step_matrix,
    verify_m,
)

__all__ = [
    "DomainError",
    "NEG_INF",
    "NotIntegral",
    "ONE",
    "ParseError",
    "Poly",
    "X",
    "ZERO",
    "format_poly",
    "parse_poly",
    "DimensionMismatch",
    "PolyMatrix",
    "build_circulant",
    "RedeiPair",
    "norm_identity_holds",
    "redei_closed_form",
    "redei_matrix",
    "redei_recurrence",
    "redei_sequence",
    "IntegralityClass",
    "NotASolution",
    "OddIndexUndefined",
    "PellProblem",
    "PellSolution",
    "PreconditionViolated",
    "UnsupportedD",
    "ZeroD",
    "classify",
    "descend",
    "identify_solution",
    "nathanson",
    "solve",
    "solve_sequence",
    "solve_square_shift",
    "verify",
    "DivisibilityReport",
    "GenRedeiVec",
    "IrrationalNormalizer",
    "NotPrime",
    "PellMSolution",
    "ZeroR",
    "classify_m",
    "divisibility_probe",
    "gen_redei",
    "gen_redei_oracle",
    "gen_redei_sequence",
    "solve_m",
    "step_matrix",
    "verify_m",
]

__version__ = "0.1.0"
