"""Numerical tolerances and search hyperparameters, with package defaults.

Every tolerance used by the numerics is a field here so that tests can pin
the defaults and research use can tighten them without touching code.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermiticity: float = 1e-10      # max-entry defect of H - H^dagger
    negativity: float = 1e-9        # eigenvalues above -negativity are clamped to 0
    trace: float = 1e-10            # |Tr(rho) - 1|
    weights: float = 1e-12          # |sum(p_k) - 1| for mixtures
    loo_orthonormality: float = 1e-10
    loo_completeness: float = 1e-9
    orthogonality: float = 1e-9     # O^T O = 1 for basis rotations
    correlation_imag: float = 1e-10
    value_imag: float = 1e-10       # imaginary residue of scalar traces
    value_clamp: float = 1e-10      # window [-clamp, 0) mapped to 0
    svd_reconstruction: float = 1e-9
    detection_margin: float = 1e-7  # applied toward non-detection
    double_entry: float = 1e-8      # two-route agreement for the skew criterion


DEFAULT_TOLS = Tolerances()


@dataclass(frozen=True)
class HillClimbConfig:
    """Random-restart hill-climb budget for basis optimization."""

    restarts: int = 8
    steps: int = 200
    initial_step: float = 0.3   # radians
    decay: float = 0.99


DEFAULT_CLIMB = HillClimbConfig()

# cmd_independence processes 1e5 samples; it uses a reduced search budget so
# the full run stays within a desk-scale time budget.
INDEPENDENCE_CLIMB = HillClimbConfig(restarts=2, steps=30)
