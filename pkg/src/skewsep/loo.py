"""Local orthogonal observable (LOO) bases.

An LOO basis is an ordered set of d^2 Hermitian d x d matrices orthonormal in
the Hilbert-Schmidt inner product, Tr(G_k G_l) = delta_kl. The canonical
basis is the identity over sqrt(d) followed by the generalized Gell-Mann
matrices scaled to Tr(G^2) = 1; any real orthogonal recombination is again an
LOO basis. The operator Schmidt decomposition of a bipartite state is
obtained from the SVD of its correlation matrix in canonical bases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS
from .density import DensityMatrix
from .errors import DimensionMismatch, NotOrthogonal, RangeError
from .linalg import correlation_matrix, svd_real
from .rng import stream


@dataclass(frozen=True)
class LooBasis:
    """dim and a read-only (dim^2, dim, dim) stack of observables."""

    dim: int
    observables: np.ndarray

    def __post_init__(self):
        obs = np.asarray(self.observables, dtype=np.complex128)
        d = self.dim
        if obs.shape != (d * d, d, d):
            raise DimensionMismatch(
                f"expected {d * d} observables of shape ({d}, {d}), got {obs.shape}"
            )
        obs = obs.copy()
        obs.setflags(write=False)
        object.__setattr__(self, "observables", obs)


def canonical_loo(d: int) -> LooBasis:
    """Identity/sqrt(d) plus the normalized generalized Gell-Mann matrices.

    Fixed ordering: identity first, then symmetric pairs (j, k) with j < k in
    lexicographic order, then the antisymmetric pairs in the same order, then
    the d-1 diagonal matrices. For d = 2 this is {1, sx, sy, sz} / sqrt(2).
    """
    if d < 2:
        raise RangeError(f"local dimension must be >= 2, got {d}")
    mats = [np.eye(d, dtype=np.complex128) / np.sqrt(d)]
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=np.complex128)
            m[j, k] = m[k, j] = 1.0 / np.sqrt(2.0)
            mats.append(m)
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=np.complex128)
            m[j, k] = -1j / np.sqrt(2.0)
            m[k, j] = 1j / np.sqrt(2.0)
            mats.append(m)
    for l in range(1, d):
        diag = np.zeros(d, dtype=np.complex128)
        diag[:l] = 1.0
        diag[l] = -l
        mats.append(np.diag(diag) / np.sqrt(l * (l + 1)))
    return LooBasis(dim=d, observables=np.stack(mats))


@dataclass(frozen=True)
class LooCheck:
    """verify_loo report: worst violations and the verdict."""

    passed: bool
    max_orthonormality_violation: float
    max_hermiticity_violation: float
    completeness_residual: float
    tol: float


def verify_loo(basis: LooBasis, tol: float = 1e-8) -> LooCheck:
    """Check Gram orthonormality, Hermiticity and the completeness identity.

    Completeness means sum_k G_k X G_k = Tr(X) * 1 for arbitrary X; it is
    probed with a fixed set of pseudo-random matrices, so the report is
    deterministic.
    """
    obs = basis.observables
    d = basis.dim
    gram = np.einsum("kij,lji->kl", obs, obs)
    orth = float(np.abs(gram - np.eye(d * d)).max())
    herm = float(np.abs(obs - obs.conj().transpose(0, 2, 1)).max())
    rng = stream(1905, "loo-completeness", d)
    completeness = 0.0
    for _ in range(8):
        x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        lhs = np.einsum("kij,jl,klm->im", obs, x, obs)
        completeness = max(
            completeness, float(np.abs(lhs - np.trace(x) * np.eye(d)).max())
        )
    passed = orth <= tol and herm <= tol and completeness <= max(tol, 1e-9)
    return LooCheck(
        passed=passed,
        max_orthonormality_violation=orth,
        max_hermiticity_violation=herm,
        completeness_residual=completeness,
        tol=tol,
    )


def rotate_loo(
    basis: LooBasis,
    o: np.ndarray,
    orth_tol: float = DEFAULT_TOLS.orthogonality,
) -> LooBasis:
    """Recombine a basis by a real orthogonal matrix: G'_k = sum_l O[k,l] G_l."""
    o = np.asarray(o, dtype=np.float64)
    n = basis.dim ** 2
    if o.shape != (n, n):
        raise DimensionMismatch(f"rotation must be {n}x{n}, got {o.shape}")
    defect = float(np.abs(o.T @ o - np.eye(n)).max())
    if defect > orth_tol:
        raise NotOrthogonal(f"O^T O deviates from identity by {defect:.3e}")
    rotated = np.einsum("kl,lij->kij", o, basis.observables)
    return LooBasis(dim=basis.dim, observables=rotated)


def haar_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed O(n) sample: QR of a Gaussian matrix, R-diagonal > 0."""
    g = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    return q * np.sign(np.diagonal(r))


def random_orthogonal(n: int, seed: int) -> np.ndarray:
    """Deterministic Haar-orthogonal matrix for an explicit seed."""
    if n < 1:
        raise RangeError(f"n must be >= 1, got {n}")
    return haar_orthogonal(n, stream(seed, "orthogonal", n))


@dataclass(frozen=True)
class SchmidtDecomposition:
    """rho = sum_k lambdas[k] A_k (x) B_k with LOO factors and lambdas >= 0."""

    lambdas: np.ndarray
    basis_a: LooBasis
    basis_b: LooBasis


def schmidt_loos(rho: DensityMatrix) -> SchmidtDecomposition:
    """Operator Schmidt decomposition via the correlation-matrix SVD.

    Requires equal local dimensions. The canonical-basis correlation matrix
    T = U diag(s) V^T yields lambdas = s with basis A rotated by U^T and
    basis B rotated by V^T; nonnegativity of the singular values fixes the
    sign convention.
    """
    if not rho.bipartite or rho.dA != rho.dB:
        raise DimensionMismatch(
            f"operator Schmidt decomposition needs dA == dB > 1, got {rho.dA}x{rho.dB}"
        )
    can = canonical_loo(rho.dA)
    t = correlation_matrix(rho.matrix, can.observables, can.observables)
    u, s, v = svd_real(t)
    return SchmidtDecomposition(
        lambdas=s,
        basis_a=rotate_loo(can, u.T),
        basis_b=rotate_loo(can, v.T),
    )


def swap_operator(d: int) -> np.ndarray:
    """The flip operator V |i j> = |j i> on C^d (x) C^d."""
    v = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            v[i * d + j, j * d + i] = 1.0
    return v
