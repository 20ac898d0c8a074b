"""Exact verification toolkit for tame local constants of induced characters.

The package computes gamma and epsilon factors of multiplicative characters
of tamely ramified p-adic fields (and of the representations they induce) in
exact arithmetic -- cyclotomic numbers, a formal sqrt(p), and rational
functions in X = p^(-s) -- and uses them to machine-check a collection of
equivalence and inequivalence statements about parameters of classical
groups, G2, and GL(N).
"""

from .cyclo import CycValue, LocalFactor, SqrtVal, quad_gauss_sum, sqrtp_cyc
from .padic import (
    ConfigError,
    PrecisionError,
    Subfield,
    Tower,
    char_poly,
    compositum,
    make_tower,
    tensor_decompose,
)
from .chars import (
    MultChar,
    base_field,
    det_induced,
    hilbert_char,
    is_admissible,
    is_self_dual,
    kappa,
    pair_equivalent,
    quasi_minimal,
    representative_exact,
    trivial_char,
    unramified_char,
    unramified_quadratic,
    xi_beta_family,
)
from .reps import (
    GParameter,
    InducedSummand,
    WeilRep,
    char_multiset_key,
    gamma_rep_twist,
    is_outer_self_conjugate,
    pair_parity,
    rep_det,
    rep_dim,
    rep_dual,
    rep_equivalent,
    restrict_to,
    std_compose,
    tensor_pairs,
    wedge3_pm,
    wedge_identities_4dim,
)
from .factors import (
    GammaProduct,
    TBetaReport,
    char_value_pairing,
    eps_value,
    gamma_equal,
    gamma_induced,
    gamma_induced_twist,
    gamma_sum_twist,
    gauss_sum,
    least_congruence_r,
    pairing_products,
    t_beta,
    t_beta_lower,
    tate_L,
    tate_eps,
    tate_gamma,
    twist_equality_check,
    twist_equality_conditions,
    u_poly,
    u_value,
)

__all__ = [
    "CycValue",
    "SqrtVal",
    "LocalFactor",
    "quad_gauss_sum",
    "sqrtp_cyc",
    "ConfigError",
    "PrecisionError",
    "Tower",
    "Subfield",
    "make_tower",
    "char_poly",
    "compositum",
    "tensor_decompose",
    "MultChar",
    "base_field",
    "trivial_char",
    "unramified_char",
    "unramified_quadratic",
    "is_admissible",
    "is_self_dual",
    "quasi_minimal",
    "representative_exact",
    "pair_equivalent",
    "xi_beta_family",
    "det_induced",
    "kappa",
    "hilbert_char",
    "GammaProduct",
    "TBetaReport",
    "gauss_sum",
    "eps_value",
    "tate_L",
    "tate_eps",
    "tate_gamma",
    "gamma_equal",
    "gamma_induced",
    "gamma_induced_twist",
    "gamma_sum_twist",
    "char_value_pairing",
    "u_poly",
    "u_value",
    "least_congruence_r",
    "t_beta",
    "t_beta_lower",
    "pairing_products",
    "twist_equality_check",
    "twist_equality_conditions",
    "InducedSummand",
    "WeilRep",
    "GParameter",
    "pair_parity",
    "rep_equivalent",
    "rep_dual",
    "rep_det",
    "rep_dim",
    "tensor_pairs",
    "restrict_to",
    "char_multiset_key",
    "std_compose",
    "wedge3_pm",
    "is_outer_self_conjugate",
    "wedge_identities_4dim",
    "gamma_rep_twist",
]

__version__ = "0.1.0"
