"""Exact-arithmetic toolkit for the algebra underlying Kac-Moody
categorification: nil Hecke and quiver Hecke algebras, their cyclotomic
quotients, normal crystals, and integrable highest/lowest-weight modules,
with verification suites for every identity the library relies on.

All arithmetic is over the rationals via `fractions.Fraction`; there are no
runtime dependencies outside the standard library.
"""

from .cartan import (
    AnchorMismatch,
    CartanDatum,
    NotFiniteType,
    NotGCM,
    NotSymmetrizable,
    Weight,
    dominance_leq,
    pairing,
    validate_gcm,
    weyl_dim,
)
from .crystal import (
    Crystal,
    character,
    connected_components,
    export_dot,
    highest_weight_crystal,
    lowest_weight_crystal,
    tensor,
    verify_normal_axioms,
)
from .cyclo import (
    CapExceeded,
    CycloAlgebra,
    NonSplit,
    NotDominant,
    count_simples,
    cyclo_build,
    cyclo_dims,
    theorem_t_check,
)
from .klr import (
    KLRElement,
    KLRParams,
    klr_degree,
    klr_mul,
    klr_poly_rep,
    klr_relation_suite,
)
from .liealg import (
    IntegrableModule,
    build_highest_weight,
    build_lowest_weight,
    commutator_check,
    divided_power_span_check,
    tensor_character_check,
    verify_serre,
)
from .nilhecke import (
    NHElement,
    decompose_identity,
    nh_act,
    nh_mul,
    nh_to_matrix,
    pi,
    truncation_identity_check,
)
from .polysym import Perm, Poly, act_perm, demazure, schubert_b, sym_decompose

__version__ = "0.1.0"
