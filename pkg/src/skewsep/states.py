"""Deterministic factories and seeded samplers for benchmark states."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .density import DensityMatrix
from .errors import RangeError
from .linalg import kron
from .rng import stream


def bell_state(d: int) -> DensityMatrix:
    """Maximally entangled pure state sum_i |ii> / sqrt(d)."""
    if d < 2:
        raise RangeError(f"local dimension must be >= 2, got {d}")
    vec = np.zeros(d * d, dtype=np.complex128)
    for i in range(d):
        vec[i * d + i] = 1.0
    return DensityMatrix.from_pure(vec / np.sqrt(d), dA=d, dB=d)


def werner2(p: float) -> DensityMatrix:
    """Two-qubit singlet mixed with white noise: p |psi-><psi-| + (1-p) 1/4.

    Entangled iff p > 1/3 (the partial transpose branch (1 - 3p)/4 changes
    sign there).
    """
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"p must be in [0, 1], got {p}")
    singlet = np.zeros(4, dtype=np.complex128)
    singlet[1] = 1.0 / np.sqrt(2.0)
    singlet[2] = -1.0 / np.sqrt(2.0)
    mat = p * np.outer(singlet, singlet.conj()) + (1.0 - p) * np.eye(4) / 4.0
    return DensityMatrix(mat, 2, 2)


def isotropic(d: int, fidelity: float) -> DensityMatrix:
    """F |Phi_d><Phi_d| + (1 - F) (1 - |Phi_d><Phi_d|) / (d^2 - 1).

    PPT boundary at F = 1/d; F = 1/d^2 is the maximally mixed state.
    """
    if not 0.0 <= fidelity <= 1.0:
        raise RangeError(f"fidelity must be in [0, 1], got {fidelity}")
    proj = bell_state(d).matrix
    rest = (np.eye(d * d) - proj) / (d * d - 1)
    return DensityMatrix(fidelity * proj + (1.0 - fidelity) * rest, d, d)


def tiles_upb() -> DensityMatrix:
    """3x3 bound entangled state from the tiles unextendible product basis.

    rho = (1 - sum_i |psi_i><psi_i|) / 4 over the five tiles vectors; PPT by
    construction yet entangled, so it probes criteria beyond the PPT test.
    """
    e = np.eye(3, dtype=np.complex128)
    s2 = np.sqrt(2.0)
    vectors = [
        np.kron(e[0], (e[0] - e[1]) / s2),
        np.kron(e[2], (e[1] - e[2]) / s2),
        np.kron((e[0] - e[1]) / s2, e[2]),
        np.kron((e[1] - e[2]) / s2, e[0]),
        np.kron(e[0] + e[1] + e[2], e[0] + e[1] + e[2]) / 3.0,
    ]
    acc = np.eye(9, dtype=np.complex128)
    for v in vectors:
        acc -= np.outer(v, v.conj())
    return DensityMatrix(acc / 4.0, 3, 3)


def random_density(d: int, rank: int, seed: int) -> DensityMatrix:
    """Ginibre state G G^dagger / Tr with G of shape (d, rank)."""
    if not 1 <= rank <= d:
        raise RangeError(f"rank must be in [1, {d}], got {rank}")
    rng = stream(seed, "ginibre", d, rank)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    mat = g @ g.conj().T
    return DensityMatrix(mat / np.trace(mat).real)


def random_separable(d_a: int, d_b: int, terms: int, seed: int) -> DensityMatrix:
    """Separable by construction: Dirichlet-weighted sum of Ginibre products."""
    if terms < 1:
        raise RangeError(f"terms must be >= 1, got {terms}")
    rng = stream(seed, "separable", d_a, d_b, terms)
    weights = rng.dirichlet(np.ones(terms))
    acc = np.zeros((d_a * d_b, d_a * d_b), dtype=np.complex128)
    for k in range(terms):
        ga = rng.standard_normal((d_a, d_a)) + 1j * rng.standard_normal((d_a, d_a))
        gb = rng.standard_normal((d_b, d_b)) + 1j * rng.standard_normal((d_b, d_b))
        rho_a = ga @ ga.conj().T
        rho_b = gb @ gb.conj().T
        acc += weights[k] * kron(
            rho_a / np.trace(rho_a).real, rho_b / np.trace(rho_b).real
        )
    return DensityMatrix(acc, d_a, d_b)


def noisy(rho: DensityMatrix, q: float) -> DensityMatrix:
    """White-noise mixture (1 - q) rho + q 1/(dA dB)."""
    if not 0.0 <= q <= 1.0:
        raise RangeError(f"q must be in [0, 1], got {q}")
    dim = rho.dim
    mat = (1.0 - q) * rho.matrix + q * np.eye(dim) / dim
    return DensityMatrix(mat, rho.dA, rho.dB)


@dataclass(frozen=True)
class StateFamily:
    """A named one-parameter family for the CLI registry."""

    name: str
    lo: float
    hi: float
    default_dim: int
    uses_seed: bool
    description: str
    make: Callable[[float, int, int], DensityMatrix]


def _make_bell(param: float, dim: int, seed: int) -> DensityMatrix:
    return bell_state(int(round(param)) if param is not None else dim)


def _make_werner2(param: float, dim: int, seed: int) -> DensityMatrix:
    return werner2(param)


def _make_isotropic(param: float, dim: int, seed: int) -> DensityMatrix:
    return isotropic(dim, param)


def _make_tiles(param: float, dim: int, seed: int) -> DensityMatrix:
    return tiles_upb()


def _make_random(param: float, dim: int, seed: int) -> DensityMatrix:
    full = dim * dim
    rank = int(round(param)) if param is not None and param >= 1 else full
    state = random_density(full, rank, seed)
    return DensityMatrix(state.matrix, dim, dim)


def _make_random_separable(param: float, dim: int, seed: int) -> DensityMatrix:
    terms = int(round(param)) if param is not None and param >= 1 else dim * dim
    return random_separable(dim, dim, terms, seed)


def _make_noisy_bell(param: float, dim: int, seed: int) -> DensityMatrix:
    return noisy(bell_state(dim), param)


FAMILIES: dict[str, StateFamily] = {
    f.name: f
    for f in (
        StateFamily(
            "bell", 2, 4, 2, False, "maximally entangled |Phi_d>; param = d", _make_bell
        ),
        StateFamily(
            "werner2", 0.0, 1.0, 2, False, "singlet + white noise; param = p", _make_werner2
        ),
        StateFamily(
            "isotropic", 0.0, 1.0, 3, False, "|Phi_d> + white noise; param = F", _make_isotropic
        ),
        StateFamily(
            "tiles", 0.0, 0.0, 3, False, "3x3 tiles-UPB bound entangled state", _make_tiles
        ),
        StateFamily(
            "random", 0.0, 16.0, 2, True, "bipartite Ginibre state; param = rank (0: full)", _make_random
        ),
        StateFamily(
            "random-separable",
            0.0,
            64.0,
            2,
            True,
            "mixture of random product states; param = terms (0: dim^2)",
            _make_random_separable,
        ),
        StateFamily(
            "noisy-bell", 0.0, 1.0, 2, False, "|Phi_d> + white noise; param = q", _make_noisy_bell
        ),
    )
}
