"""Experiment drivers: family sweeps, detection-threshold bisection, and the
two-criterion independence tally.

All drivers are deterministic for a fixed seed: per-sample randomness comes
from counter-based streams keyed by (seed, index), and output files are
written with fixed formatting so reruns are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .config import HillClimbConfig, INDEPENDENCE_CLIMB
from .criteria import CriterionReport, evaluate_all
from .density import DensityMatrix, save_density
from .errors import ConfigError, NonMonotone
from .rng import derive_key, stream
from .states import FAMILIES, noisy, bell_state, random_density

CSV_COLUMNS = (
    "family",
    "param",
    "strategy",
    "seed",
    "ccn_value",
    "ccn_det",
    "lur_value",
    "lur_det",
    "skew_value",
    "skew_det",
    "ppt_value",
    "ppt_det",
)


def _fmt(x: float) -> str:
    """12 significant digits; byte-stable yet tolerance-meaningful."""
    return f"{x:.12g}"


def _family(name: str):
    if name not in FAMILIES:
        raise ConfigError(
            f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}"
        )
    return FAMILIES[name]


def make_state(family: str, param: float, dim: int | None, seed: int, index: int = 0) -> DensityMatrix:
    """Instantiate a registered family member; seeded families split their
    stream by (seed, index) so sweep rows are independent and reproducible."""
    fam = _family(family)
    use_dim = dim if dim is not None else fam.default_dim
    state_seed = derive_key(seed, family, index) if fam.uses_seed else seed
    return fam.make(param, use_dim, state_seed)


@dataclass(frozen=True)
class SweepRecord:
    family: str
    param: float
    strategy: str
    seed: int
    reports: dict

    def row(self) -> list[str]:
        cells = [self.family, _fmt(self.param), self.strategy, str(self.seed)]
        for name in ("ccn", "lur", "skew", "ppt"):
            report: CriterionReport | None = self.reports.get(name)
            if report is None:
                cells.extend(["", ""])
            else:
                cells.extend([_fmt(report.value), str(int(report.detected))])
        return cells


def run_sweep(
    family: str,
    grid: list[float],
    strategy: str,
    seed: int,
    out_path,
    dim: int | None = None,
    climb: HillClimbConfig | None = None,
) -> list[SweepRecord]:
    """Evaluate every criterion over a parameter grid and write the CSV."""
    if not grid:
        raise ConfigError("sweep grid is empty")
    climb = climb or HillClimbConfig()
    records = []
    for index, param in enumerate(grid):
        rho = make_state(family, param, dim, seed, index)
        reports = evaluate_all(
            rho, strategy=strategy, seed=derive_key(seed, "sweep", index), climb=climb
        )
        records.append(
            SweepRecord(family=family, param=float(param), strategy=strategy, seed=seed, reports=reports)
        )
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(r.row()) for r in records)
    Path(out_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return records


def run_threshold(
    family: str,
    criterion: str,
    strategy: str,
    seed: int,
    tol: float = 1e-6,
    lo: float | None = None,
    hi: float | None = None,
    dim: int | None = None,
    prescan: int = 33,
    climb: HillClimbConfig | None = None,
) -> dict:
    """Bisect the detection boundary of one criterion along a family.

    A coarse pre-scan checks that the verdict flips exactly once on the
    range (NonMonotone otherwise); bisection then narrows the flip bracket
    to width <= tol. The two bracket endpoints are guaranteed to evaluate to
    opposite verdicts.
    """
    if criterion not in ("ccn", "lur", "skew", "ppt"):
        raise ConfigError(f"unknown criterion {criterion!r}")
    fam = _family(family)
    lo = fam.lo if lo is None else lo
    hi = fam.hi if hi is None else hi
    if not lo < hi:
        raise ConfigError(f"range must satisfy lo < hi, got [{lo}, {hi}]")
    if prescan < 3:
        raise ConfigError("prescan needs at least 3 points")
    climb = climb or HillClimbConfig()

    def verdict(param: float) -> bool:
        rho = make_state(family, param, dim, seed, 0)
        reports = evaluate_all(
            rho, strategy=strategy, seed=derive_key(seed, "threshold"), climb=climb
        )
        report = reports[criterion]
        if report is None:
            raise ConfigError(
                f"criterion {criterion!r} is undefined for family {family!r}"
            )
        return report.detected

    grid = [lo + (hi - lo) * i / (prescan - 1) for i in range(prescan)]
    verdicts = [verdict(p) for p in grid]
    flips = [i for i in range(len(grid) - 1) if verdicts[i] != verdicts[i + 1]]
    if len(flips) != 1:
        raise NonMonotone(
            f"pre-scan found {len(flips)} verdict flips on [{lo}, {hi}]"
        )
    i = flips[0]
    left, right = grid[i], grid[i + 1]
    left_verdict = verdicts[i]
    while right - left > tol:
        mid = 0.5 * (left + right)
        if verdict(mid) == left_verdict:
            left = mid
        else:
            right = mid
    return {
        "family": family,
        "criterion": criterion,
        "strategy": strategy,
        "seed": seed,
        "tol": tol,
        "threshold": 0.5 * (left + right),
        "bracket": [left, right],
        "range": [lo, hi],
        "prescan": prescan,
        "restarts": climb.restarts,
        "steps": climb.steps,
    }


CELLS = ("both", "skew_only", "lur_only", "neither")

SAMPLERS = ("default", "random-separable")


def _default_sample(seed: int, index: int) -> DensityMatrix:
    """50% noisy |Phi_2> with uniform q, 50% rank-uniform 2-qubit Ginibre."""
    rng = stream(seed, "independence-sample", index)
    if index % 2 == 0:
        q = float(rng.uniform())
        return noisy(bell_state(2), q)
    rank = int(rng.integers(1, 5))
    flat = random_density(4, rank, derive_key(seed, "independence-ginibre", index))
    return DensityMatrix(flat.matrix, 2, 2)


def _separable_sample(seed: int, index: int) -> DensityMatrix:
    from .states import random_separable

    rng = stream(seed, "independence-sep", index)
    terms = int(rng.integers(1, 5))
    return random_separable(2, 2, terms, derive_key(seed, "independence-sep-state", index))


@dataclass
class IndependenceTally:
    samples: int
    seed: int
    strategy: str
    sampler: str
    restarts: int
    steps: int
    cells: dict = field(default_factory=lambda: {c: 0 for c in CELLS})
    ppt_violations: int = 0
    exemplars: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "strategy": self.strategy,
            "sampler": self.sampler,
            "restarts": self.restarts,
            "steps": self.steps,
            "cells": self.cells,
            "ppt_violations": self.ppt_violations,
            "exemplars": self.exemplars,
        }


def classify(lur_detected: bool, skew_detected: bool) -> str:
    if lur_detected and skew_detected:
        return "both"
    if skew_detected:
        return "skew_only"
    if lur_detected:
        return "lur_only"
    return "neither"


def run_independence(
    samples: int,
    sampler: str,
    strategy: str,
    seed: int,
    out_dir,
    climb: HillClimbConfig = INDEPENDENCE_CLIMB,
) -> IndependenceTally:
    """Tally the 2x2 detection table of the lur and skew criteria.

    Every sample is evaluated under the same basis strategy; the first state
    landing in each nonempty cell other than 'neither' is persisted in the
    interchange format so the tally can be re-verified offline. The PPT
    value is recorded per sample and any detection on a PPT-positive 2-qubit
    state counts as a consistency violation (there should be none).
    """
    if samples < 1:
        raise ConfigError(f"samples must be >= 1, got {samples}")
    if sampler not in SAMPLERS:
        raise ConfigError(f"unknown sampler {sampler!r}; known: {', '.join(SAMPLERS)}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    draw = _default_sample if sampler == "default" else _separable_sample
    tally = IndependenceTally(
        samples=samples,
        seed=seed,
        strategy=strategy,
        sampler=sampler,
        restarts=climb.restarts,
        steps=climb.steps,
    )
    for index in range(samples):
        rho = draw(seed, index)
        reports = evaluate_all(
            rho, strategy=strategy, seed=derive_key(seed, "independence-eval", index), climb=climb
        )
        lur, skew, ppt = reports["lur"], reports["skew"], reports["ppt"]
        cell = classify(lur.detected, skew.detected)
        tally.cells[cell] += 1
        if (lur.detected or skew.detected) and ppt.value >= 0.0:
            tally.ppt_violations += 1
        if cell != "neither" and cell not in tally.exemplars:
            path = out_dir / f"exemplar_{cell}.json"
            save_density(rho, path)
            tally.exemplars[cell] = {
                "path": path.name,
                "sample_index": index,
                "lur_value": lur.value,
                "skew_value": skew.value,
                "ppt_value": ppt.value,
            }
    payload = tally.to_dict()
    (out_dir / "tally.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return tally


def verify_independence_exemplars(out_dir, climb: HillClimbConfig = INDEPENDENCE_CLIMB) -> dict:
    """Reload every persisted exemplar and re-derive its cell.

    Returns {cell: bool}; True means the recomputed verdicts land in the
    recorded cell.
    """
    from .density import load_density

    out_dir = Path(out_dir)
    tally = json.loads((out_dir / "tally.json").read_text(encoding="utf-8"))
    checks = {}
    recorded_climb = HillClimbConfig(
        restarts=tally["restarts"],
        steps=tally["steps"],
        initial_step=climb.initial_step,
        decay=climb.decay,
    )
    for cell, meta in tally["exemplars"].items():
        rho = load_density(out_dir / meta["path"])
        reports = evaluate_all(
            rho,
            strategy=tally["strategy"],
            seed=derive_key(tally["seed"], "independence-eval", meta["sample_index"]),
            climb=recorded_climb,
        )
        checks[cell] = classify(
            reports["lur"].detected, reports["skew"].detected
        ) == cell
    return checks
