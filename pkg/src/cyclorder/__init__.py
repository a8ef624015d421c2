"""Exact arithmetic over Z[zeta_p] and finite/infinite order decisions for
matrices in GL_d(Z[zeta_p]) and PGL_d(Z[zeta_p])."""

from .cyclopoly import cyclotomic_poly, phi_at_one, totient
from .cycmatrix import (
    CycMatrix,
    NotInvertibleError,
    char_poly,
    companion_matrix,
    congruent_mod_h_power,
    conjugation_embedding,
    det,
    direct_sum,
    identity,
    inverse,
    kron_with_identity,
    mat_pow,
)
from .cycring import (
    CycInt,
    HBasisView,
    NotAUnitError,
    field_norm,
    from_h_basis,
    galois_conjugate,
    h_valuation_at_least,
    invert_unit,
    is_unit,
    minimal_poly,
    normalized_norm,
    to_h_basis,
)
from .factored import (
    FactoredPositive,
    fp_divides,
    fp_mul,
    fp_of_integer,
    fp_pow,
    norm_of_root_of_unity_minus_one,
)
from .orderengine import (
    GroupMode,
    Kind,
    OrderVerdict,
    Rule,
    classify_order,
    divisibility_obstruction,
    exact_order_oracle,
    torsion_exponent_bound,
)

__version__ = "0.1.0"
