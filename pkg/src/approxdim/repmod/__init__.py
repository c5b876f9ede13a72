"""The module category of a bound quiver algebra."""

from .module import (AlgebraMismatch, Morphism, Representation, SubQuotient, base_change,
                     direct_sum, direct_sum_full, dsum, dual_regular_module, from_generators,
                     generated_submodule, hom_basis, hom_dim, identity_morphism, injective,
                     kernel, cokernel, linear_combination, power, projective, quotient,
                     radical_socle_top, regular_module, simple, standard_module, sub_quotient,
                     submodule, validate_module, zero_module, zero_morphism)
from .functors import (Cover, Envelope, LiftFailed, cosyzygy, dual, dual_morphism,
                       injective_envelope, is_injective, is_projective, lift_through,
                       presentation, projective_cover, syzygy, syzygy_with_inclusion, tau,
                       tau_inverse, transpose)
from .decomp import (Decomposition, EndAlgebra, FieldTooSmall, RandomizationExhausted,
                     decompose, end_algebra, indecomposables_isomorphic, is_indecomposable,
                     is_isomorphic, iso_classes, multiset_match)
