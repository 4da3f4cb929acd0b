"""Seeded property suites for the package's mathematical invariants.

Each suite runs a fixed number of pseudo-random instances at small local
dimensions and reports its worst violation; the CLI selftest command prints
one line per suite and fails if any violation exceeds its tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .criteria import (
    joint_skew_sum,
    mixture_bounds,
    skew_ccn_value,
    skew_information,
    skew_loo_sum,
    variance,
)
from .density import DensityMatrix, MixtureSpec
from .linalg import sqrt_psd
from .loo import LooBasis, canonical_loo, random_orthogonal, rotate_loo, swap_operator, verify_loo
from .rng import stream
from .states import random_density

DEFAULT_SELFTEST_SEED = 90817243


@dataclass(frozen=True)
class SuiteResult:
    name: str
    instances: int
    max_violation: float
    tol: float
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: max_violation={self.max_violation:.3e} "
            f"tol={self.tol:.1e} n={self.instances}"
        )


def _result(name: str, instances: int, violation: float, tol: float) -> SuiteResult:
    return SuiteResult(
        name=name,
        instances=instances,
        max_violation=float(violation),
        tol=tol,
        passed=bool(violation <= tol),
    )


def _random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return 0.5 * (g + g.conj().T)


def _seeded_state(seed: int, tag: str, index: int, d: int, rank: int) -> DensityMatrix:
    from .rng import derive_key

    return random_density(d, rank, derive_key(seed, tag, index))


def _corrupted_basis(basis: LooBasis) -> LooBasis:
    obs = basis.observables.copy()
    obs[1] = obs[1] * np.sqrt(2.0)  # breaks Tr(G^2) = 1
    return LooBasis(dim=basis.dim, observables=obs)


def suite_loo_orthonormality(seed: int, corrupt_loo: bool = False) -> SuiteResult:
    """Gram orthonormality, Hermiticity and completeness of LOO bases."""
    worst = 0.0
    count = 0
    for d in (2, 3):
        basis = canonical_loo(d)
        if corrupt_loo:
            basis = _corrupted_basis(basis)
        for candidate in (basis, rotate_loo(basis, random_orthogonal(d * d, seed + d))):
            check = verify_loo(candidate, tol=1e-8)
            worst = max(
                worst,
                check.max_orthonormality_violation,
                check.max_hermiticity_violation,
                check.completeness_residual,
            )
            count += 1
    return _result("loo-orthonormality", count, worst, 1e-8)


def suite_convexity(seed: int, instances: int = 500) -> SuiteResult:
    """Skew information is convex under mixing."""
    worst = -np.inf
    rng = stream(seed, "convexity")
    total = 0
    for d in (2, 3):
        for i in range(instances):
            rho1 = _seeded_state(seed, f"cvx1-{d}", i, d, int(rng.integers(1, d + 1)))
            rho2 = _seeded_state(seed, f"cvx2-{d}", i, d, int(rng.integers(1, d + 1)))
            lam = float(rng.uniform())
            m = _random_hermitian(rng, d)
            mix = MixtureSpec((lam, 1.0 - lam), (rho1, rho2))
            lhs = skew_information(mix.mixed(), m)
            rhs = lam * skew_information(rho1, m) + (1.0 - lam) * skew_information(rho2, m)
            worst = max(worst, lhs - rhs)
            total += 1
    return _result("convexity", total, worst, 1e-9)


def suite_additivity(seed: int, instances: int = 500) -> SuiteResult:
    """Skew information of A (x) 1 + 1 (x) B on products splits additively."""
    worst = 0.0
    rng = stream(seed, "additivity")
    total = 0
    for d in (2, 3):
        for i in range(instances):
            rho1 = _seeded_state(seed, f"add1-{d}", i, d, int(rng.integers(1, d + 1)))
            rho2 = _seeded_state(seed, f"add2-{d}", i, d, int(rng.integers(1, d + 1)))
            m1 = _random_hermitian(rng, d)
            m2 = _random_hermitian(rng, d)
            product = DensityMatrix(np.kron(rho1.matrix, rho2.matrix), d, d)
            joint = joint_skew_sum(product, m1[None], m2[None], sign=1)
            split = skew_information(rho1, m1) + skew_information(rho2, m2)
            worst = max(worst, abs(joint - split))
            total += 1
    return _result("additivity", total, worst, 1e-8)


def _mixture_suite(seed: int, kind: str, instances: int) -> tuple[float, int]:
    worst = -np.inf
    rng = stream(seed, "mixing", kind)
    total = 0
    for d in (2, 3):
        for i in range(instances):
            k = int(rng.integers(2, 5))
            comps = tuple(
                _seeded_state(seed, f"mix-{kind}-{d}-{i}", j, d, int(rng.integers(1, d + 1)))
                for j in range(k)
            )
            w = rng.dirichlet(np.ones(k))
            w = w / w.sum()
            mix = MixtureSpec(tuple(float(x) for x in w), comps)
            ms = [_random_hermitian(rng, d) for _ in range(2)]
            bounds = mixture_bounds(mix, ms, kind=kind)
            if kind == "skew":
                worst = max(worst, bounds.lhs - bounds.rhs)
            else:
                worst = max(worst, bounds.rhs - bounds.lhs)
            total += 1
    return worst, total


def suite_variance_mixing(seed: int, instances: int = 500) -> SuiteResult:
    """Summed variances never decrease under mixing."""
    worst, total = _mixture_suite(seed, "variance", instances)
    return _result("variance-mixing", total, worst, 1e-9)


def suite_skew_mixing(seed: int, instances: int = 500) -> SuiteResult:
    """Summed skew informations never increase under mixing."""
    worst, total = _mixture_suite(seed, "skew", instances)
    return _result("skew-mixing", total, worst, 1e-9)


def suite_pure_reduction(seed: int, instances: int = 500) -> SuiteResult:
    """On pure states skew information equals the variance."""
    worst = 0.0
    rng = stream(seed, "pure")
    total = 0
    for d in (2, 3):
        for i in range(instances):
            rho = _seeded_state(seed, f"pure-{d}", i, d, 1)
            m = _random_hermitian(rng, d)
            worst = max(worst, abs(skew_information(rho, m) - variance(rho, m)))
            total += 1
    return _result("pure-reduction", total, worst, 1e-9)


def suite_skew_below_variance(seed: int, instances: int = 500) -> SuiteResult:
    """Skew information never exceeds the variance."""
    worst = -np.inf
    rng = stream(seed, "dominance")
    total = 0
    for d in (2, 3):
        for i in range(instances):
            rho = _seeded_state(seed, f"dom-{d}", i, d, int(rng.integers(1, d + 1)))
            m = _random_hermitian(rng, d)
            worst = max(worst, skew_information(rho, m) - variance(rho, m))
            total += 1
    return _result("skew-below-variance", total, worst, 1e-9)


def suite_loo_skew_closed_form(seed: int, instances: int = 120) -> SuiteResult:
    """sum_k I(rho, G_k) equals d - (Tr sqrt(rho))^2 for any LOO basis."""
    worst = 0.0
    total = 0
    rng = stream(seed, "closed-form")
    for d in (2, 3, 4):
        canonical = canonical_loo(d)
        rotated = rotate_loo(canonical, random_orthogonal(d * d, seed + 11 * d))
        for i in range(instances):
            rho = _seeded_state(seed, f"closed-{d}", i, d, int(rng.integers(1, d + 1)))
            closed = d - float(np.trace(sqrt_psd(rho.matrix)).real) ** 2
            for basis in (canonical, rotated):
                total_skew = skew_loo_sum(rho, basis)
                worst = max(worst, abs(total_skew - closed))
                worst = max(worst, total_skew - (d - 1.0))
                total += 1
    return _result("loo-skew-closed-form", total, worst, 1e-8)


def suite_double_entry(seed: int, instances: int = 150) -> SuiteResult:
    """Literal skew criterion equals the joint-sum route on random states."""
    worst = 0.0
    total = 0
    rng = stream(seed, "double-entry")
    for d in (2, 3):
        canonical = canonical_loo(d)
        for i in range(instances):
            full = d * d
            rho_flat = _seeded_state(seed, f"de-{d}", i, full, int(rng.integers(1, full + 1)))
            rho = DensityMatrix(rho_flat.matrix, d, d)
            report = skew_ccn_value(rho, canonical, canonical, basis_label="canonical")
            worst = max(worst, report.detail["double_entry_residual"])
            total += 1
    return _result("double-entry", total, worst, 1e-8)


def suite_swap_identity(seed: int) -> SuiteResult:
    """sum_k G_k (x) G_k equals the flip operator for every LOO basis."""
    worst = 0.0
    total = 0
    for d in (2, 3):
        flip = swap_operator(d)
        canonical = canonical_loo(d)
        rotated = rotate_loo(canonical, random_orthogonal(d * d, seed + 23 * d))
        for basis in (canonical, rotated):
            obs = basis.observables
            acc = np.einsum("kij,klm->iljm", obs, obs).reshape(d * d, d * d)
            worst = max(worst, float(np.abs(acc - flip).max()))
            total += 1
    return _result("swap-identity", total, worst, 1e-9)


def suite_completeness(seed: int, instances: int = 100) -> SuiteResult:
    """sum_k G_k X G_k = Tr(X) 1 for arbitrary X."""
    worst = 0.0
    total = 0
    rng = stream(seed, "completeness")
    for d in (2, 3):
        canonical = canonical_loo(d)
        rotated = rotate_loo(canonical, random_orthogonal(d * d, seed + 31 * d))
        for basis in (canonical, rotated):
            obs = basis.observables
            for _ in range(instances):
                x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
                lhs = np.einsum("kij,jl,klm->im", obs, x, obs)
                worst = max(worst, float(np.abs(lhs - np.trace(x) * np.eye(d)).max()))
                total += 1
    return _result("completeness", total, worst, 1e-9)


def run_selftest(
    seed: int = DEFAULT_SELFTEST_SEED, *, corrupt_loo: bool = False, instances: int = 500
) -> list[SuiteResult]:
    """Run every suite at a fixed seed; corrupt_loo is a testing hook that
    breaks one LOO normalization so the orthonormality suite must fail."""
    results = [suite_loo_orthonormality(seed, corrupt_loo=corrupt_loo)]
    results.append(suite_convexity(seed, instances))
    results.append(suite_additivity(seed, instances))
    results.append(suite_variance_mixing(seed, instances))
    results.append(suite_skew_mixing(seed, instances))
    results.append(suite_pure_reduction(seed, instances))
    results.append(suite_skew_below_variance(seed, instances))
    results.append(suite_loo_skew_closed_form(seed))
    results.append(suite_double_entry(seed))
    results.append(suite_swap_identity(seed))
    results.append(suite_completeness(seed))
    return results
