"""Exact SO(3) quantum invariants of surgered 3-manifolds, Ohtsuki
lambda-series, Casson-Walker invariants, and the prime-power congruences
connecting them."""

from .cyclotomic import (
    CycInt,
    GaussElement,
    NotDivisibleError,
    congruent_to_order,
    divide_by_gauss,
    divide_by_h,
    divide_exact,
    from_h_basis,
    gauss_element,
    h_element,
    qpow,
    qpow_half,
)
from .gauss import (
    ZBinomialRow,
    binom_row,
    check_Y_correspondence,
    gauss_integral_X,
    gauss_integral_Y,
    gauss_sum_X,
    gauss_sum_X_closed,
    gauss_sum_Y,
    gauss_sum_Y_direct,
)
from .hseries import (
    DEFAULT_TRUNC,
    HSeries,
    QPowExpr,
    default_trunc,
    qpow_series,
    quantum_integer_series,
    wedge,
    wedge_rational,
)
from .invariants import (
    HypothesisError,
    SurgeryPresentation,
    color_measure,
    extract_a_n,
    jones_framed_unknot,
    jones_split_union,
    lens_zprime_closed,
    quantum_integer,
    so3_Zprime,
    su2_bridge_gap,
    symmetry_principle_check,
    wrt_Z_numeric,
)
from .numtheory import (
    NotCoprimeError,
    is_odd_prime,
    kappa,
    legendre,
    mod_inverse,
    padic_valuation,
    remainder_mod,
    require_odd_prime,
)
from .tcc import (
    AlexanderData,
    DTable,
    OhtsukiSeries,
    alexander_second_derivative,
    casson_walker_lens,
    casson_walker_surgery,
    connected_sum,
    dtable_unknot,
    presentation_lambda_series,
    sphere_series,
    tcc_lens,
    tcc_surgery,
)
from .verify import (
    VerificationReport,
    check_lawrence,
    check_ohtsuki,
    default_depth,
    verify_presentation,
)

__version__ = "0.1.0"
