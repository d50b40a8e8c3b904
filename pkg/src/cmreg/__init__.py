"""Exact computation of Castelnuovo-Mumford regularity, the a*-invariant
and their partial versions for homogeneous ideals in k[x_1, ..., x_n].
"""

__version__ = "0.1.0"

from .betti import BettiTable, betti_table, invariants_from_betti, lcm_multidegrees
from .fields import QQ, PrimeField, RationalField
from .groebner import (
    Ideal,
    initial_ideal,
    normal_form,
    reduced_groebner_basis,
    s_polynomial,
)
from .monomial_ideals import (
    NEG_INF,
    POS_INF,
    MonomialIdeal,
    hilbert_numerator,
    is_borel_fixed,
    krull_dimension,
    m_index,
    minimalize,
    quotient_top_degree,
)
from .orders import DEGLEX, DEGREVLEX, LEX, compare, m_index as monomial_top_index
from .parser import InputDocument, ParseError, parse_input
from .regularity import (
    CharacteristicError,
    FilterRegularityFailure,
    GinAgreementError,
    GinResult,
    RegularityReport,
    c_invariants,
    full_invariants,
    generic_initial_ideal,
    invariants_via_gin,
    partial_invariants,
)
from .rings import Polynomial, PolynomialRing, apply_linear_change

__all__ = [
    "QQ",
    "PrimeField",
    "RationalField",
    "PolynomialRing",
    "Polynomial",
    "apply_linear_change",
    "compare",
    "DEGREVLEX",
    "DEGLEX",
    "LEX",
    "Ideal",
    "normal_form",
    "s_polynomial",
    "reduced_groebner_basis",
    "initial_ideal",
    "MonomialIdeal",
    "minimalize",
    "hilbert_numerator",
    "quotient_top_degree",
    "krull_dimension",
    "is_borel_fixed",
    "m_index",
    "monomial_top_index",
    "NEG_INF",
    "POS_INF",
    "BettiTable",
    "betti_table",
    "invariants_from_betti",
    "lcm_multidegrees",
    "c_invariants",
    "partial_invariants",
    "full_invariants",
    "generic_initial_ideal",
    "invariants_via_gin",
    "FilterRegularityFailure",
    "CharacteristicError",
    "GinAgreementError",
    "GinResult",
    "RegularityReport",
    "parse_input",
    "ParseError",
    "InputDocument",
]
