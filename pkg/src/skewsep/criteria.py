"""Entanglement criteria and the uncertainty functionals behind them.

Implemented tests, each returning both sides of its inequality plus a
detection verdict:

* variance and skew information of an observable in a state;
* mixing bounds: summed variances are concave under mixing, summed skew
  informations are convex;
* the skew-information ceiling over a complete LOO basis,
  sum_k I(rho, G_k) = d - (Tr sqrt(rho))^2 <= d - 1;
* the LUR correlation test (lur): separable states satisfy
  1 - sum_k <G^A_k (x) G^B_k> - 1/2 sum_k <M_k>^2 >= 0,
  with M_k = G^A_k (x) 1 - 1 (x) G^B_k;
* the skew correlation test (skew): separable states satisfy
  1 - sum_k <G^A_k (x) G^B_k> - 1/2 sum_k Tr(sqrt(rho) M_k sqrt(rho) M_k) <= 0;
* the realignment/CCN test: separable states have operator Schmidt
  coefficient sum <= 1;
* the PPT test, exact for 2x2 and 2x3 systems.

A detection margin is applied toward non-detection on every criterion so
roundoff never reports entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .config import DEFAULT_CLIMB, DEFAULT_TOLS, HillClimbConfig, Tolerances
from .density import DensityMatrix, MixtureSpec
from .errors import DimensionMismatch, InternalInconsistency, NotHermitian, RangeError
from .linalg import (
    correlation_matrix,
    hermiticity_defect,
    kron,
    partial_trace,
    partial_transpose,
    sqrt_psd,
    svd_real,
)
from .loo import LooBasis, SchmidtDecomposition, canonical_loo, haar_orthogonal, rotate_loo, schmidt_loos
from .rng import stream

#: Observables are plain complex ndarrays, validated where they are consumed.
Observable = np.ndarray

STRATEGIES = ("canonical", "schmidt", "optimized")

DETECT_IF_GREATER = "detect-if-greater"
DETECT_IF_LESS = "detect-if-less"


@dataclass(frozen=True)
class CriterionReport:
    """Witness value, threshold, direction, verdict and diagnostics."""

    criterion: str
    value: float
    threshold: float
    direction: str
    detected: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "value": self.value,
            "threshold": self.threshold,
            "direction": self.direction,
            "detected": self.detected,
            "detail": self.detail,
        }


def make_report(
    criterion: str,
    value: float,
    threshold: float,
    direction: str,
    detail: dict | None = None,
    margin: float = DEFAULT_TOLS.detection_margin,
) -> CriterionReport:
    """Build a report; the margin is applied toward non-detection."""
    if direction == DETECT_IF_GREATER:
        detected = value > threshold + margin
    elif direction == DETECT_IF_LESS:
        detected = value < threshold - margin
    else:
        raise RangeError(f"unknown direction {direction!r}")
    return CriterionReport(
        criterion=criterion,
        value=float(value),
        threshold=float(threshold),
        direction=direction,
        detected=bool(detected),
        detail=detail or {},
    )


def _real(z: complex, tol: float = DEFAULT_TOLS.value_imag) -> float:
    if abs(z.imag) > tol:
        raise InternalInconsistency(
            f"scalar expected real, has imaginary part {z.imag:.3e}"
        )
    return float(z.real)


def _clamp_nonneg(x: float, tol: float = DEFAULT_TOLS.value_clamp) -> float:
    if -tol <= x < 0.0:
        return 0.0
    return x


def _check_observable(m: np.ndarray, dim: int, tols: Tolerances) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (dim, dim):
        raise DimensionMismatch(f"observable shape {m.shape} does not match dim {dim}")
    defect = hermiticity_defect(m)
    if defect > tols.hermiticity:
        raise NotHermitian(f"observable hermiticity defect {defect:.3e}")
    return m


def variance(rho: DensityMatrix, m: Observable, *, tols: Tolerances = DEFAULT_TOLS) -> float:
    """<M^2> - <M>^2; clamped to 0 when roundoff makes it barely negative."""
    m = _check_observable(m, rho.dim, tols)
    rm = rho.matrix @ m
    mean = _real(np.trace(rm), tols.value_imag)
    mean_sq = _real(np.trace(rm @ m), tols.value_imag)
    return _clamp_nonneg(mean_sq - mean * mean, tols.value_clamp)


def skew_information(
    rho: DensityMatrix, m: Observable, *, tols: Tolerances = DEFAULT_TOLS
) -> float:
    """Tr(rho M^2) - Tr(sqrt(rho) M sqrt(rho) M).

    Zero iff state and observable commute; equals the variance on pure
    states; never exceeds the variance.
    """
    m = _check_observable(m, rho.dim, tols)
    root = sqrt_psd(rho.matrix, tols.negativity, tols.hermiticity)
    sm = root @ m
    second_moment = _real(np.trace(rho.matrix @ m @ m), tols.value_imag)
    quantum_part = _real(np.trace(sm @ sm), tols.value_imag)
    return _clamp_nonneg(second_moment - quantum_part, tols.value_clamp)


class MixtureBounds(NamedTuple):
    lhs: float
    rhs: float
    kind: str


def mixture_bounds(
    mix: MixtureSpec,
    ms: list[Observable],
    kind: str = "skew",
    *,
    tols: Tolerances = DEFAULT_TOLS,
) -> MixtureBounds:
    """Both sides of the mixing inequality for a list of observables.

    kind="skew": lhs = sum_i I(rho_mix, M_i), rhs = sum_k p_k sum_i
    I(rho_k, M_i); convexity demands lhs <= rhs. kind="variance": the same
    sums for variances; concavity demands lhs >= rhs.
    """
    if kind not in ("skew", "variance"):
        raise RangeError(f"kind must be 'skew' or 'variance', got {kind!r}")
    func = skew_information if kind == "skew" else variance
    mixed = mix.mixed()
    lhs = sum(func(mixed, m, tols=tols) for m in ms)
    rhs = sum(
        p * sum(func(comp, m, tols=tols) for m in ms)
        for p, comp in zip(mix.weights, mix.components)
    )
    return MixtureBounds(lhs=float(lhs), rhs=float(rhs), kind=kind)


def joint_skew_sum(
    rho: DensityMatrix,
    ops_a: np.ndarray,
    ops_b: np.ndarray,
    sign: int = 1,
    *,
    tols: Tolerances = DEFAULT_TOLS,
) -> float:
    """sum_i I(rho, M_i) for joint observables M_i = A_i (x) 1 + s * 1 (x) B_i.

    For separable states this sum is bounded by the sum of the local
    ceilings; with full LOO lists on both sides the bound is 2(d - 1).
    """
    ops_a = np.asarray(ops_a, dtype=np.complex128)
    ops_b = np.asarray(ops_b, dtype=np.complex128)
    if ops_a.shape[0] != ops_b.shape[0]:
        raise DimensionMismatch("observable lists must have equal length")
    if not rho.bipartite:
        raise DimensionMismatch("joint observables need a bipartite state")
    if ops_a.shape[1:] != (rho.dA, rho.dA) or ops_b.shape[1:] != (rho.dB, rho.dB):
        raise DimensionMismatch("local observable dims do not match the state")
    if sign not in (1, -1):
        raise RangeError(f"sign must be +1 or -1, got {sign!r}")
    eye_a = np.eye(rho.dA)
    eye_b = np.eye(rho.dB)
    root = sqrt_psd(rho.matrix, tols.negativity, tols.hermiticity)
    total = 0.0
    for a_i, b_i in zip(ops_a, ops_b):
        m = kron(a_i, eye_b) + sign * kron(eye_a, b_i)
        second = _real(np.trace(rho.matrix @ m @ m), tols.value_imag)
        sm = root @ m
        quantum = _real(np.trace(sm @ sm), tols.value_imag)
        total += _clamp_nonneg(second - quantum, tols.value_clamp)
    return float(total)


def skew_loo_sum(
    rho: DensityMatrix, basis: LooBasis, *, tols: Tolerances = DEFAULT_TOLS
) -> float:
    """Total skew information over a complete LOO basis.

    Basis-independent: equals d - (Tr sqrt(rho))^2 for every valid basis,
    hence is at most d - 1 with equality exactly on pure states.
    """
    if rho.bipartite or rho.dim != basis.dim:
        raise DimensionMismatch(
            f"need a unipartite state of dim {basis.dim}, got dA={rho.dA}, dB={rho.dB}"
        )
    obs = basis.observables
    root = sqrt_psd(rho.matrix, tols.negativity, tols.hermiticity)
    rg = np.matmul(rho.matrix, obs)
    second = np.einsum("kij,kji->k", rg, obs)
    sg = np.matmul(root, obs)
    quantum = np.einsum("kij,kji->k", sg, sg)
    total = (second - quantum).sum()
    return _clamp_nonneg(_real(total, tols.value_imag * basis.dim ** 2), tols.value_clamp)


def loo_skew_bound(d: int) -> float:
    """Ceiling of skew_loo_sum for local dimension d."""
    return float(d - 1)


def _pair_dims(rho: DensityMatrix, basis_a: LooBasis, basis_b: LooBasis) -> int:
    if not rho.bipartite or rho.dA != rho.dB:
        raise DimensionMismatch(
            f"correlation criteria need dA == dB > 1, got {rho.dA}x{rho.dB}"
        )
    if basis_a.dim != rho.dA or basis_b.dim != rho.dB:
        raise DimensionMismatch("basis dimensions do not match the state")
    return rho.dA


def _corr_diagonal(
    rho: DensityMatrix, basis_a: LooBasis, basis_b: LooBasis, tols: Tolerances
) -> np.ndarray:
    """<G^A_k (x) G^B_k> for the index-aligned basis pairs."""
    d = rho.dA
    r4 = rho.matrix.reshape(d, rho.dB, d, rho.dB)
    diag = np.einsum("aibj,kba,kji->k", r4, basis_a.observables, basis_b.observables)
    residue = float(np.abs(diag.imag).max())
    if residue > tols.correlation_imag:
        raise InternalInconsistency(
            f"correlation diagonal has imaginary residue {residue:.3e}"
        )
    return diag.real


def _kron_stack_left(obs: np.ndarray, d_right: int) -> np.ndarray:
    """Stack of kron(G_k, 1_{d_right}) built in one einsum."""
    n, d, _ = obs.shape
    eye = np.eye(d_right)
    out = np.einsum("kux,vy->kuvxy", obs, eye)
    return out.reshape(n, d * d_right, d * d_right)


def _kron_stack_right(d_left: int, obs: np.ndarray) -> np.ndarray:
    """Stack of kron(1_{d_left}, G_k) built in one einsum."""
    n, d, _ = obs.shape
    eye = np.eye(d_left)
    out = np.einsum("ux,kvy->kuvxy", eye, obs)
    return out.reshape(n, d_left * d, d_left * d)


def _difference_stack(basis_a: LooBasis, basis_b: LooBasis) -> np.ndarray:
    """Stack of M_k = G^A_k (x) 1 - 1 (x) G^B_k."""
    return _kron_stack_left(basis_a.observables, basis_b.dim) - _kron_stack_right(
        basis_a.dim, basis_b.observables
    )


def lur_ccn_value(
    rho: DensityMatrix,
    basis_a: LooBasis,
    basis_b: LooBasis,
    *,
    basis_label: str = "custom",
    margin: float = DEFAULT_TOLS.detection_margin,
    tols: Tolerances = DEFAULT_TOLS,
) -> CriterionReport:
    """Variance-based LOO correlation test.

    value = 1 - sum_k <G^A_k (x) G^B_k> - 1/2 sum_k <M_k>^2 with
    M_k = G^A_k (x) 1 - 1 (x) G^B_k. Separable states give value >= 0, so a
    negative value certifies entanglement.
    """
    _pair_dims(rho, basis_a, basis_b)
    diag = _corr_diagonal(rho, basis_a, basis_b, tols)
    rho_a = partial_trace(rho.matrix, rho.dA, rho.dB, keep="A")
    rho_b = partial_trace(rho.matrix, rho.dA, rho.dB, keep="B")
    mean_a = np.einsum("ij,kji->k", rho_a, basis_a.observables)
    mean_b = np.einsum("ij,kji->k", rho_b, basis_b.observables)
    gaps = mean_a.real - mean_b.real
    value = 1.0 - diag.sum() - 0.5 * float(np.square(gaps).sum())
    detail = {
        "basis": basis_label,
        "correlation_diagonal": [float(x) for x in diag],
        "mean_gaps": [float(x) for x in gaps],
    }
    return make_report("lur", value, 0.0, DETECT_IF_LESS, detail, margin)


def skew_ccn_value(
    rho: DensityMatrix,
    basis_a: LooBasis,
    basis_b: LooBasis,
    *,
    basis_label: str = "custom",
    margin: float = DEFAULT_TOLS.detection_margin,
    tols: Tolerances = DEFAULT_TOLS,
) -> CriterionReport:
    """Skew-information LOO correlation test (the headline criterion).

    value = 1 - sum_k <G^A_k (x) G^B_k>
              - 1/2 sum_k Tr(sqrt(rho) M_k sqrt(rho) M_k)
    with M_k = G^A_k (x) 1 - 1 (x) G^B_k. Separable states give value <= 0,
    so a positive value certifies entanglement.

    The value is double-entry checked against the independently coded joint
    skew sum: sum_k I(rho, M_k) - (2d - 2) must equal 2 * value; any
    disagreement beyond tolerance raises InternalInconsistency.
    """
    d = _pair_dims(rho, basis_a, basis_b)
    diag = _corr_diagonal(rho, basis_a, basis_b, tols)
    m_stack = _difference_stack(basis_a, basis_b)
    root = sqrt_psd(rho.matrix, tols.negativity, tols.hermiticity)
    sm = np.matmul(root, m_stack)
    skew_terms = np.einsum("kij,kji->k", sm, sm)
    residue = float(np.abs(skew_terms.imag).max())
    if residue > tols.value_imag * m_stack.shape[0]:
        raise InternalInconsistency(
            f"skew terms have imaginary residue {residue:.3e}"
        )
    skew_terms = skew_terms.real
    value = 1.0 - diag.sum() - 0.5 * float(skew_terms.sum())

    joint_route = joint_skew_sum(
        rho, basis_a.observables, basis_b.observables, sign=-1, tols=tols
    )
    excess = joint_route - (2.0 * d - 2.0)
    double_entry_residual = abs(2.0 * value - excess)
    if double_entry_residual > tols.double_entry:
        raise InternalInconsistency(
            f"two evaluation routes disagree by {double_entry_residual:.3e}"
        )
    detail = {
        "basis": basis_label,
        "correlation_diagonal": [float(x) for x in diag],
        "skew_terms": [float(x) for x in skew_terms],
        "joint_skew_excess": float(excess),
        "double_entry_residual": float(double_entry_residual),
    }
    return make_report("skew", value, 0.0, DETECT_IF_GREATER, detail, margin)


def ccn_value(
    rho: DensityMatrix,
    *,
    margin: float = DEFAULT_TOLS.detection_margin,
    tols: Tolerances = DEFAULT_TOLS,
) -> CriterionReport:
    """Realignment test: sum of operator Schmidt coefficients.

    Works for unequal local dimensions. Separable states give value <= 1, so
    value > 1 certifies entanglement.
    """
    if not rho.bipartite:
        raise DimensionMismatch("realignment test needs a bipartite state")
    can_a = canonical_loo(rho.dA)
    can_b = canonical_loo(rho.dB)
    t = correlation_matrix(
        rho.matrix, can_a.observables, can_b.observables, tols.correlation_imag
    )
    _, s, _ = svd_real(t)
    detail = {"lambdas": [float(x) for x in s]}
    return make_report("ccn", float(s.sum()), 1.0, DETECT_IF_GREATER, detail, margin)


def ppt_report(
    rho: DensityMatrix,
    *,
    margin: float = DEFAULT_TOLS.detection_margin,
    tols: Tolerances = DEFAULT_TOLS,
) -> CriterionReport:
    """Minimum eigenvalue after partial transposition.

    Negative value certifies entanglement; for dA*dB <= 6 PPT is an exact
    separability oracle, which the detail flags.
    """
    if not rho.bipartite:
        raise DimensionMismatch("partial transposition needs a bipartite state")
    pt = partial_transpose(rho.matrix, rho.dA, rho.dB, side="B")
    min_eig = float(np.linalg.eigvalsh(pt)[0])
    detail = {"exact_separability_oracle": rho.dA * rho.dB <= 6}
    return make_report("ppt", min_eig, 0.0, DETECT_IF_LESS, detail, margin)


# ---------------------------------------------------------------------------
# Basis optimization
# ---------------------------------------------------------------------------
#
# Rotating the Schmidt bases by orthogonal O_A, O_B changes both correlation
# criteria only through the relative rotation R = O_A^T O_B, and affinely:
#
#   lur value  = c_lur  - Tr((T - a b^T) R^T)
#   skew value = c_skew - Tr((T - X_AB) R^T)
#
# where T is the correlation matrix in the Schmidt frame, a/b the local mean
# vectors, and X_AB[l, m] = Tr(sqrt(rho) (G^A_l (x) 1) sqrt(rho) (1 (x) G^B_m)).
# The hill climb evaluates candidates through this reduction (cheap), and the
# returned report is always re-evaluated with the literal criterion code on
# the rotated bases. Since |Tr(W R^T)| <= sum of singular values of W, the
# best reachable value has a closed form that is reported as a diagnostic.


@dataclass(frozen=True)
class _SearchProblem:
    criterion: str
    offset: float          # c in value = c - Tr(W R^T)
    w: np.ndarray
    direction: int         # +1: maximize value (skew); -1: minimize (lur)

    def value(self, o_a: np.ndarray, o_b: np.ndarray) -> float:
        return self.offset - float(np.dot((o_a @ self.w).ravel(), o_b.ravel()))

    def score(self, o_a: np.ndarray, o_b: np.ndarray) -> float:
        return self.direction * self.value(o_a, o_b)

    def best_reachable_value(self) -> float:
        nuclear = float(np.linalg.svd(self.w, compute_uv=False).sum())
        return self.offset + self.direction * nuclear


def _search_problem(
    rho: DensityMatrix, decomposition: SchmidtDecomposition, criterion: str, tols: Tolerances
) -> _SearchProblem:
    basis_a, basis_b = decomposition.basis_a, decomposition.basis_b
    t = correlation_matrix(
        rho.matrix, basis_a.observables, basis_b.observables, tols.correlation_imag
    )
    if criterion == "lur":
        rho_a = partial_trace(rho.matrix, rho.dA, rho.dB, keep="A")
        rho_b = partial_trace(rho.matrix, rho.dA, rho.dB, keep="B")
        mean_a = np.einsum("ij,kji->k", rho_a, basis_a.observables).real
        mean_b = np.einsum("ij,kji->k", rho_b, basis_b.observables).real
        offset = 1.0 - 0.5 * float(np.square(mean_a).sum() + np.square(mean_b).sum())
        return _SearchProblem("lur", offset, t - np.outer(mean_a, mean_b), -1)
    if criterion == "skew":
        root = sqrt_psd(rho.matrix, tols.negativity, tols.hermiticity)
        ka = _kron_stack_left(basis_a.observables, basis_b.dim)
        kb = _kron_stack_right(basis_a.dim, basis_b.observables)
        ska = np.matmul(root, ka)
        skb = np.matmul(root, kb)
        skas = np.matmul(ska, root)
        x_ab = np.einsum("lij,mji->lm", skas, kb).real
        tr_aa = float(np.einsum("lij,lji->", ska, ska).real)
        tr_bb = float(np.einsum("lij,lji->", skb, skb).real)
        offset = 1.0 - 0.5 * (tr_aa + tr_bb)
        return _SearchProblem("skew", offset, t - x_ab, +1)
    raise RangeError(f"criterion must be 'lur' or 'skew', got {criterion!r}")


def _givens_update(o: np.ndarray, i: int, j: int, theta: float) -> None:
    c, s = np.cos(theta), np.sin(theta)
    row_i = o[i].copy()
    o[i] = c * row_i + s * o[j]
    o[j] = -s * row_i + c * o[j]


def _evaluate_pair(
    rho: DensityMatrix,
    criterion: str,
    basis_a: LooBasis,
    basis_b: LooBasis,
    basis_label: str,
    margin: float,
    tols: Tolerances,
) -> CriterionReport:
    if criterion == "lur":
        return lur_ccn_value(
            rho, basis_a, basis_b, basis_label=basis_label, margin=margin, tols=tols
        )
    return skew_ccn_value(
        rho, basis_a, basis_b, basis_label=basis_label, margin=margin, tols=tols
    )


def optimize_basis(
    rho: DensityMatrix,
    criterion: str = "skew",
    restarts: int = DEFAULT_CLIMB.restarts,
    steps: int = DEFAULT_CLIMB.steps,
    seed: int = 0,
    *,
    initial_step: float = DEFAULT_CLIMB.initial_step,
    decay: float = DEFAULT_CLIMB.decay,
    margin: float = DEFAULT_TOLS.detection_margin,
    tols: Tolerances = DEFAULT_TOLS,
    _decomposition: SchmidtDecomposition | None = None,
) -> tuple[LooBasis, LooBasis, CriterionReport]:
    """Random-restart hill climb for the most-violating LOO basis pair.

    Orthogonal rotations of the Schmidt bases are perturbed by small random
    plane rotations with a decaying step; a candidate is kept only when it
    improves the violation, so the result is never worse than the Schmidt
    baseline. Deterministic for a fixed seed. With restarts=0 or steps=0 the
    Schmidt-basis report is returned unchanged.
    """
    decomposition = _decomposition if _decomposition is not None else schmidt_loos(rho)
    problem = _search_problem(rho, decomposition, criterion, tols)
    n = rho.dA ** 2

    eye = np.eye(n)
    best_o_a, best_o_b = eye.copy(), eye.copy()
    best_score = problem.score(best_o_a, best_o_b)
    schmidt_value = problem.value(best_o_a, best_o_b)

    rng = stream(seed, "climb", criterion)
    for _restart in range(restarts):
        o_a = haar_orthogonal(n, rng)
        o_b = haar_orthogonal(n, rng)
        current = problem.score(o_a, o_b)
        if steps:
            sides = rng.integers(2, size=steps)
            rows_i = rng.integers(n, size=steps)
            rows_j = rng.integers(n - 1, size=steps)
            angles = rng.standard_normal(steps)
        step = initial_step
        for k in range(steps):
            target = o_a if sides[k] == 0 else o_b
            i = int(rows_i[k])
            j = int(rows_j[k])
            if j >= i:
                j += 1
            theta = step * float(angles[k])
            saved_i, saved_j = target[i].copy(), target[j].copy()
            _givens_update(target, i, j, theta)
            candidate = problem.score(o_a, o_b)
            if candidate > current:
                current = candidate
            else:
                target[i], target[j] = saved_i, saved_j
            step *= decay
        if current > best_score:
            best_score = current
            best_o_a, best_o_b = o_a.copy(), o_b.copy()

    basis_a = rotate_loo(decomposition.basis_a, best_o_a)
    basis_b = rotate_loo(decomposition.basis_b, best_o_b)
    report = _evaluate_pair(rho, criterion, basis_a, basis_b, "optimized", margin, tols)
    detail = dict(report.detail)
    detail.update(
        {
            "search_value": problem.direction * best_score,
            "search_bound": problem.best_reachable_value(),
            "schmidt_value": schmidt_value,
            "restarts": restarts,
            "steps": steps,
            "seed": int(seed),
        }
    )
    report = CriterionReport(
        criterion=report.criterion,
        value=report.value,
        threshold=report.threshold,
        direction=report.direction,
        detected=report.detected,
        detail=detail,
    )
    return basis_a, basis_b, report


def evaluate_all(
    rho: DensityMatrix,
    strategy: str = "optimized",
    seed: int = 0,
    climb: HillClimbConfig = DEFAULT_CLIMB,
    *,
    margin: float = DEFAULT_TOLS.detection_margin,
    tols: Tolerances = DEFAULT_TOLS,
) -> dict[str, CriterionReport | None]:
    """All criteria for one state under a basis strategy.

    Returns reports keyed ccn/lur/skew/ppt. The correlation criteria require
    equal local dimensions; for dA != dB their slots are None.
    """
    if strategy not in STRATEGIES:
        raise RangeError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    reports: dict[str, CriterionReport | None] = {
        "ccn": ccn_value(rho, margin=margin, tols=tols),
        "ppt": ppt_report(rho, margin=margin, tols=tols),
        "lur": None,
        "skew": None,
    }
    if not rho.bipartite or rho.dA != rho.dB:
        return reports
    if strategy == "canonical":
        can = canonical_loo(rho.dA)
        reports["lur"] = lur_ccn_value(
            rho, can, can, basis_label="canonical", margin=margin, tols=tols
        )
        reports["skew"] = skew_ccn_value(
            rho, can, can, basis_label="canonical", margin=margin, tols=tols
        )
    elif strategy == "schmidt":
        decomposition = schmidt_loos(rho)
        reports["lur"] = lur_ccn_value(
            rho,
            decomposition.basis_a,
            decomposition.basis_b,
            basis_label="schmidt",
            margin=margin,
            tols=tols,
        )
        reports["skew"] = skew_ccn_value(
            rho,
            decomposition.basis_a,
            decomposition.basis_b,
            basis_label="schmidt",
            margin=margin,
            tols=tols,
        )
    else:
        decomposition = schmidt_loos(rho)
        for name in ("lur", "skew"):
            _, _, report = optimize_basis(
                rho,
                name,
                restarts=climb.restarts,
                steps=climb.steps,
                seed=seed,
                initial_step=climb.initial_step,
                decay=climb.decay,
                margin=margin,
                tols=tols,
                _decomposition=decomposition,
            )
            reports[name] = report
    return reports
