"""Gelfand model of the symmetric group, built three equivalent ways.

The involutions of S_n, with a signed permutation action, carry every
irreducible representation exactly once.  This package constructs that
model on three carrier spaces -- standard-form involutions, monomials in
antisymmetric Gaussian variables, and Greenberg-algebra Fock states -- and
verifies completeness, multiplicity-freeness, orthonormality, and the
level-by-level irreducible content with exact arithmetic throughout.
"""

from .fock import (
    FockState,
    ScaledState,
    act_on_state,
    basis_state,
    commutator_product_state,
    state_inner_product,
    word_inner_product,
)
from .involutions import (
    Involution,
    Permutation,
    SignedInvolution,
    act,
    adjacent_transpositions,
    enumerate_all_involutions,
    enumerate_involutions,
    involution_index,
)
from .levels import (
    CrossValidationReport,
    LevelTable,
    closed_form_table,
    cross_validate,
    level_content_closed_form,
    level_table_recipe,
)
from .monomials import (
    Monomial,
    MonomialCombination,
    act_on_combination,
    act_on_monomial,
    inner_product,
    monomial_inner_product,
    normalized_basis,
)
from .partitions import (
    CharacterTable,
    CharacterVector,
    Partition,
    character_table,
    class_size,
    conjugate,
    dimension,
    enumerate_partitions,
    irreducible_character,
    odd_part_count,
)
from .representation import (
    DecompositionReport,
    ModelReport,
    NonIntegralMultiplicityError,
    SignedPermutationMatrix,
    class_representative,
    decompose,
    rep_character,
    rep_matrix,
    verify_model,
)

__version__ = "0.1.0"
