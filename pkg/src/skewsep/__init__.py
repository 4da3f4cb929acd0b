"""skewsep: entanglement criteria from skew information, local uncertainty
relations, realignment and partial transposition, plus a deterministic
experiment CLI."""

from .config import DEFAULT_CLIMB, DEFAULT_TOLS, HillClimbConfig, Tolerances
from .criteria import (
    CriterionReport,
    ccn_value,
    evaluate_all,
    joint_skew_sum,
    loo_skew_bound,
    lur_ccn_value,
    mixture_bounds,
    optimize_basis,
    ppt_report,
    skew_ccn_value,
    skew_information,
    skew_loo_sum,
    variance,
)
from .density import DensityMatrix, MixtureSpec, load_density, save_density
from .linalg import (
    HermitianEigenSystem,
    correlation_matrix,
    eig_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    sqrt_psd,
    svd_real,
)
from .loo import (
    LooBasis,
    LooCheck,
    SchmidtDecomposition,
    canonical_loo,
    random_orthogonal,
    rotate_loo,
    schmidt_loos,
    swap_operator,
    verify_loo,
)
from .states import (
    FAMILIES,
    StateFamily,
    bell_state,
    isotropic,
    noisy,
    random_density,
    random_separable,
    tiles_upb,
    werner2,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CLIMB",
    "DEFAULT_TOLS",
    "DensityMatrix",
    "CriterionReport",
    "FAMILIES",
    "HermitianEigenSystem",
    "HillClimbConfig",
    "LooBasis",
    "LooCheck",
    "MixtureSpec",
    "SchmidtDecomposition",
    "StateFamily",
    "Tolerances",
    "bell_state",
    "canonical_loo",
    "ccn_value",
    "correlation_matrix",
    "eig_hermitian",
    "evaluate_all",
    "isotropic",
    "joint_skew_sum",
    "kron",
    "load_density",
    "loo_skew_bound",
    "lur_ccn_value",
    "mixture_bounds",
    "noisy",
    "optimize_basis",
    "partial_trace",
    "partial_transpose",
    "ppt_report",
    "random_density",
    "random_orthogonal",
    "random_separable",
    "rotate_loo",
    "save_density",
    "schmidt_loos",
    "skew_ccn_value",
    "skew_information",
    "skew_loo_sum",
    "sqrt_psd",
    "svd_real",
    "swap_operator",
    "tiles_upb",
    "variance",
    "verify_loo",
    "werner2",
]
