"""Local-unitary invariants of two-qubit density matrices."""
from .errors import ContractError, DomainError, RankInstabilityError
from .group_action import adjoint_action, haar_su, invariance_report, linearized_action, local_unitary
from .hilbert import basis_consistency, dimension_oracle, molien_expand
from .invariants import basis_values, casimir_identities_residual, evaluate_all
from .positivity import (
    casimirs,
    char_poly_coeffs,
    normalized_bounds,
    positivity_check,
    region_check,
    region_sample,
    s_from_bloch,
    s_from_casimirs,
)
from .states import (
    BlochVector,
    DensityMatrix,
    FanoForm,
    bell_state,
    fano_compose,
    fano_decompose,
    from_bloch,
    partial_trace,
    random_state,
    to_bloch,
    werner_state,
)
from .su_basis import gellmann_basis, structure_constants, vee_product

__version__ = "0.1.0"
