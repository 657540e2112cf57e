"""Quasisymmetric Schur polynomials, pure-and-inverting compositions and
certificates that they index bases of the quasisymmetric coinvariant space."""

from .algebra import (
    K_matrix,
    K_tilde,
    NotQuasisymmetricError,
    monomial_basis_expand,
    oracle_multiply,
    polynomial_to_M,
    qschur_in_M,
    restrict_variable,
    schur_in_monomials,
    to_M_basis,
    to_S_basis,
)
from .bijection import LambdaBetaPair, enumerate_C, enumerate_PB, phi, phi_inverse
from .certify import (
    CertificateReport,
    build_transition_matrix,
    certify_basis,
    check_dominance_vanishing,
    check_pk_counts,
)
from .combinatorics import (
    contains,
    destandardize,
    dominates,
    enumerate_B,
    enumerate_inverting,
    garsia_vector,
    insert_part,
    is_inverting,
    is_pure,
    pure_factorization,
    revlex_compare,
    sort_to_partition,
    standardize,
)
from .hilbert import QPolynomial, hilbert_quotient_P, q_factorial
from .matrices import TransitionMatrix
from .polynomials import MultivariatePolynomial, QSymExpansion
from .tableaux import (
    Filling,
    LRFilling,
    enumerate_composition_tableaux,
    enumerate_LR_shapes,
    is_composition_tableau,
    is_LR_tableau,
    lr_coefficient,
    multiply_schur_qschur,
    qschur_weight_sum,
    super_filling,
)

__version__ = "0.1.0"
