"""Dense complex-matrix kernels.

Hermitian eigendecomposition, PSD square root, Kronecker products, partial
trace/transpose, LOO correlation matrices and a real SVD. Everything is a
pure function on ndarrays with explicit tolerances; downstream modules build
on these.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS
from .errors import (
    DimensionMismatch,
    NoConvergence,
    NonRealCorrelation,
    NotHermitian,
    NotPSD,
)


def hermiticity_defect(m: np.ndarray) -> float:
    """Max-entry distance between m and its conjugate transpose."""
    return float(np.abs(m - m.conj().T).max())


def _require_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise DimensionMismatch("matrix has non-finite entries")
    return m


@dataclass(frozen=True)
class HermitianEigenSystem:
    """Eigenvalues in ascending order; eigenvectors as unitary columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def eig_hermitian(
    h: np.ndarray, hermiticity_tol: float = DEFAULT_TOLS.hermiticity
) -> HermitianEigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    Raises NotHermitian if the hermiticity defect exceeds the tolerance and
    NoConvergence if the underlying iteration gives up.
    """
    h = _require_square(h)
    defect = hermiticity_defect(h)
    if defect > hermiticity_tol:
        raise NotHermitian(
            f"hermiticity defect {defect:.3e} exceeds tolerance {hermiticity_tol:.3e}"
        )
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathologies only
        raise NoConvergence(str(exc)) from exc
    return HermitianEigenSystem(eigenvalues=w, eigenvectors=v)


def sqrt_psd(
    rho: np.ndarray,
    negativity_tol: float = DEFAULT_TOLS.negativity,
    hermiticity_tol: float = DEFAULT_TOLS.hermiticity,
) -> np.ndarray:
    """Hermitian PSD square root, clamping roundoff-negative eigenvalues.

    Eigenvalues in [-negativity_tol, 0) are set to 0 before rooting; anything
    below -negativity_tol raises NotPSD.
    """
    system = eig_hermitian(rho, hermiticity_tol)
    w = system.eigenvalues
    if w[0] < -negativity_tol:
        raise NotPSD(
            f"minimum eigenvalue {w[0]:.3e} is below -{negativity_tol:.3e}"
        )
    v = system.eigenvectors
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with complex dtype."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def _require_bipartite(rho: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    rho = _require_square(rho)
    if rho.shape[0] != d_a * d_b:
        raise DimensionMismatch(
            f"matrix of dimension {rho.shape[0]} does not factor as {d_a}x{d_b}"
        )
    return rho


def partial_trace(rho: np.ndarray, d_a: int, d_b: int, keep: str = "A") -> np.ndarray:
    """Reduced matrix on the kept factor of a (d_a x d_b) bipartite space."""
    rho = _require_bipartite(rho, d_a, d_b)
    r4 = rho.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("abcb->ac", r4)
    if keep == "B":
        return np.einsum("abad->bd", r4)
    raise DimensionMismatch(f"keep must be 'A' or 'B', got {keep!r}")


def partial_transpose(rho: np.ndarray, d_a: int, d_b: int, side: str = "B") -> np.ndarray:
    """Transpose one tensor factor; involutive and trace-preserving."""
    rho = _require_bipartite(rho, d_a, d_b)
    r4 = rho.reshape(d_a, d_b, d_a, d_b)
    if side == "A":
        out = r4.transpose(2, 1, 0, 3)
    elif side == "B":
        out = r4.transpose(0, 3, 2, 1)
    else:
        raise DimensionMismatch(f"side must be 'A' or 'B', got {side!r}")
    return out.reshape(d_a * d_b, d_a * d_b).copy()


def correlation_matrix(
    rho: np.ndarray,
    obs_a: np.ndarray,
    obs_b: np.ndarray,
    imag_tol: float = DEFAULT_TOLS.correlation_imag,
) -> np.ndarray:
    """Real matrix T[k, l] = Tr(rho (A_k (x) B_l)) for observable stacks.

    obs_a has shape (nA, dA, dA), obs_b has shape (nB, dB, dB). Entries must
    be real within imag_tol (the imaginary residue is discarded after the
    check); a larger residue signals a non-Hermitian input or a broken basis.
    """
    obs_a = np.asarray(obs_a, dtype=np.complex128)
    obs_b = np.asarray(obs_b, dtype=np.complex128)
    d_a, d_b = obs_a.shape[-1], obs_b.shape[-1]
    rho = _require_bipartite(rho, d_a, d_b)
    r4 = rho.reshape(d_a, d_b, d_a, d_b)
    t = np.einsum("aibj,kba,lji->kl", r4, obs_a, obs_b)
    residue = float(np.abs(t.imag).max()) if t.size else 0.0
    if residue > imag_tol:
        raise NonRealCorrelation(
            f"imaginary residue {residue:.3e} exceeds tolerance {imag_tol:.3e}"
        )
    return np.ascontiguousarray(t.real)


def svd_real(t: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """SVD of a real matrix: T = U diag(s) V^T, s nonnegative descending."""
    t = np.asarray(t, dtype=np.float64)
    if t.ndim != 2 or not np.all(np.isfinite(t)):
        raise DimensionMismatch("expected a finite real matrix")
    try:
        u, s, vh = np.linalg.svd(t)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathologies only
        raise NoConvergence(str(exc)) from exc
    return u, s, vh.T
