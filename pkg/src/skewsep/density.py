"""Validated density matrices, mixtures, and the JSON interchange format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import DEFAULT_TOLS, Tolerances
from .errors import (
    BadWeights,
    DimensionMismatch,
    InvalidState,
    InvalidStateFile,
    NotHermitian,
)
from .linalg import hermiticity_defect, partial_trace


class DensityMatrix:
    """Hermitian, PSD, unit-trace complex matrix with bipartite dimensions.

    dB == 1 marks a unipartite state. Instances are immutable; the stored
    array is a read-only copy, so values can be shared across threads.
    """

    __slots__ = ("matrix", "dA", "dB")

    def __init__(
        self,
        matrix,
        dA: int | None = None,
        dB: int = 1,
        *,
        tols: Tolerances = DEFAULT_TOLS,
    ):
        m = np.array(matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
        if dA is None:
            if dB != 1:
                raise DimensionMismatch("dA is required when dB > 1")
            dA = m.shape[0]
        if dA * dB != m.shape[0]:
            raise DimensionMismatch(
                f"matrix dimension {m.shape[0]} is not dA*dB = {dA}*{dB}"
            )
        if not np.all(np.isfinite(m.view(np.float64))):
            raise InvalidState("matrix has non-finite entries")
        defect = hermiticity_defect(m)
        if defect > tols.hermiticity:
            raise NotHermitian(
                f"hermiticity defect {defect:.3e} exceeds {tols.hermiticity:.3e}"
            )
        trace_err = abs(float(np.trace(m).real) - 1.0)
        if trace_err > tols.trace or abs(float(np.trace(m).imag)) > tols.trace:
            raise InvalidState(f"trace deviates from 1 by {trace_err:.3e}")
        min_eig = float(np.linalg.eigvalsh(m)[0])
        if min_eig < -tols.negativity:
            raise InvalidState(
                f"minimum eigenvalue {min_eig:.3e} is below -{tols.negativity:.3e}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dA", int(dA))
        object.__setattr__(self, "dB", int(dB))

    def __setattr__(self, name, value):
        raise AttributeError("DensityMatrix is immutable")

    @property
    def dim(self) -> int:
        return self.dA * self.dB

    @property
    def bipartite(self) -> bool:
        return self.dB > 1

    def reduced(self, side: str) -> "DensityMatrix":
        """Marginal state on one factor (side 'A' or 'B')."""
        if not self.bipartite:
            raise DimensionMismatch("reduced() needs a bipartite state")
        sub = partial_trace(self.matrix, self.dA, self.dB, keep=side)
        return DensityMatrix(sub)

    @staticmethod
    def from_pure(vec, dA: int | None = None, dB: int = 1) -> "DensityMatrix":
        """Projector onto a (normalized) state vector."""
        v = np.asarray(vec, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise InvalidState("zero vector")
        v = v / norm
        return DensityMatrix(np.outer(v, v.conj()), dA=dA, dB=dB)

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, dA={self.dA}, dB={self.dB})"


@dataclass(frozen=True)
class MixtureSpec:
    """Convex combination sum_k p_k rho_k of equal-dimension states."""

    weights: tuple[float, ...]
    components: tuple[DensityMatrix, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.components) or not self.components:
            raise BadWeights("weights and components must align and be nonempty")
        w = np.asarray(self.weights, dtype=np.float64)
        if np.any(w < 0):
            raise BadWeights("negative weight")
        if abs(float(w.sum()) - 1.0) > DEFAULT_TOLS.weights:
            raise BadWeights(f"weights sum to {w.sum()!r}, not 1")
        dims = {(c.dA, c.dB) for c in self.components}
        if len(dims) != 1:
            raise DimensionMismatch(f"components have mixed dimensions: {dims}")

    def mixed(self) -> DensityMatrix:
        first = self.components[0]
        acc = np.zeros_like(first.matrix)
        for p, comp in zip(self.weights, self.components):
            acc = acc + p * comp.matrix
        return DensityMatrix(acc, first.dA, first.dB)


def save_density(state: DensityMatrix, path) -> None:
    """Write the interchange format {dA, dB, entries: row-major [re, im]}."""
    entries = [
        [float(z.real), float(z.imag)] for z in state.matrix.reshape(-1)
    ]
    payload = {"dA": state.dA, "dB": state.dB, "entries": entries}
    Path(path).write_text(json.dumps(payload, sort_keys=True) + "\n", encoding="utf-8")


def load_density(path, *, tols: Tolerances = DEFAULT_TOLS) -> DensityMatrix:
    """Read and validate a density matrix from the interchange format.

    Any structural or validation failure raises InvalidStateFile.
    """
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        d_a, d_b = int(payload["dA"]), int(payload["dB"])
        entries = payload["entries"]
        dim = d_a * d_b
        if len(entries) != dim * dim:
            raise InvalidStateFile(
                f"expected {dim * dim} entries for dA={d_a}, dB={d_b}, got {len(entries)}"
            )
        flat = np.array(
            [complex(re, im) for re, im in entries], dtype=np.complex128
        )
        return DensityMatrix(flat.reshape(dim, dim), d_a, d_b, tols=tols)
    except InvalidStateFile:
        raise
    except Exception as exc:
        raise InvalidStateFile(f"cannot load density matrix from {path}: {exc}") from exc
