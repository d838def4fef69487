"""Exact Groebner kernel and verifier for 2xn minor links and residual intersections."""

from .rings import (
    ELIM_BLOCK,
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    Term,
    VarSpace,
    add,
    compare,
    leading_term,
    mul,
    multidegree,
    negate,
    power,
    scale,
    substitute,
)
from .groebner import (
    Budget,
    BudgetExceeded,
    DivisionResult,
    GBCertificate,
    GBStats,
    Ideal,
    buchberger,
    divide,
    ideal_equal,
    initial_ideal,
    interreduce,
    is_groebner_basis,
    is_squarefree_monomial_ideal,
    member,
    minimal_generators,
    normal_form,
    reduced_groebner_basis,
    s_polynomial,
)
from .idealops import (
    dimension,
    height,
    intersect,
    minimal_primes_squarefree,
    product_ideals,
    quotient,
    quotient_by_poly,
    sum_ideals,
)

__all__ = [
    "ELIM_BLOCK",
    "GREVLEX",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "Term",
    "VarSpace",
    "add",
    "compare",
    "leading_term",
    "mul",
    "multidegree",
    "negate",
    "power",
    "scale",
    "substitute",
    "Budget",
    "BudgetExceeded",
    "DivisionResult",
    "GBCertificate",
    "GBStats",
    "Ideal",
    "buchberger",
    "divide",
    "ideal_equal",
    "initial_ideal",
    "interreduce",
    "is_groebner_basis",
    "is_squarefree_monomial_ideal",
    "member",
    "minimal_generators",
    "normal_form",
    "reduced_groebner_basis",
    "s_polynomial",
    "dimension",
    "height",
    "intersect",
    "minimal_primes_squarefree",
    "product_ideals",
    "quotient",
    "quotient_by_poly",
    "sum_ideals",
]
