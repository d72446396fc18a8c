"""Resultant varieties over finite fields: counts, the addition-law calculus, and cohomology tables."""

from .algebra import (
    FieldSpec,
    Fq,
    MonicPair,
    PointedMap,
    Poly,
    convert_conventions,
    enumerate_monic,
    field_arithmetic,
    make_field,
    multiplicative_order,
    parse_poly,
    poly_divrem,
    poly_extended_gcd,
    roots_of_unity,
)
from .calculus import Decomposition, bezout_normal_form, cf_decompose, epsilon_sign, oplus, recompose, resultant_from_decomposition
from .cohom import betti_table, frobenius_action, isotypic_table, lefschetz_count
from .count import (
    CountQuery,
    brute_force_count,
    count_convolution_form,
    count_divisor_form,
    count_Mn,
    count_value_x,
    count_Xn,
    structured_count,
    unit_solution_count,
)
from .resultant import mu_n_action, resultant, y_split

__version__ = "0.1.0"
