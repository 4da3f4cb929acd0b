"""Command-line experiment runner.

Subcommands: evaluate, sweep, threshold, independence, selftest. Options can
come from a JSON --config file; explicit flags win over config values, which
win over the SKEWSEP_SEED environment variable and built-in defaults.

Exit codes: 0 ok, 1 selftest failure, 2 bad input state file, 3 bad
configuration, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .config import DEFAULT_CLIMB, HillClimbConfig, INDEPENDENCE_CLIMB
from .criteria import STRATEGIES, evaluate_all
from .density import load_density
from .errors import (
    ConfigError,
    InvalidStateFile,
    NonMonotone,
    RangeError,
    SkewsepError,
)
from .experiments import (
    SAMPLERS,
    make_state,
    run_independence,
    run_sweep,
    run_threshold,
)
from .rng import derive_key
from .selftest import DEFAULT_SELFTEST_SEED, run_selftest

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_BAD_STATE = 2
EXIT_BAD_CONFIG = 3
EXIT_IO = 4

_CONFIG_KEYS = {
    "family",
    "param",
    "grid",
    "range",
    "criteria",
    "criterion",
    "strategy",
    "seed",
    "samples",
    "sampler",
    "tol",
    "out",
    "dim",
    "state",
    "restarts",
    "steps",
    "prescan",
    "instances",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewsep",
        description="Entanglement-criterion experiments: skew, LUR, realignment, PPT.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="JSON config file; explicit flags win")
        p.add_argument("--seed", type=int, help="master seed (fallback: SKEWSEP_SEED)")
        p.add_argument("--strategy", choices=STRATEGIES, help="LOO basis strategy")
        p.add_argument("--out", help="output path (default: stdout for JSON commands)")

    p_eval = sub.add_parser("evaluate", help="run every criterion on one state")
    common(p_eval)
    p_eval.add_argument("--family", help="registered state family")
    p_eval.add_argument("--param", type=float, help="family parameter")
    p_eval.add_argument("--dim", type=int, help="local dimension for families that take one")
    p_eval.add_argument("--state", help="density-matrix JSON file instead of a family")
    p_eval.add_argument("--restarts", type=int, help="hill-climb restarts")
    p_eval.add_argument("--steps", type=int, help="hill-climb steps per restart")

    p_sweep = sub.add_parser("sweep", help="evaluate criteria over a parameter grid")
    common(p_sweep)
    p_sweep.add_argument("--family", help="registered state family")
    p_sweep.add_argument("--grid", help="comma-separated parameter values")
    p_sweep.add_argument("--range", dest="range_", metavar="LO:HI:N", help="inclusive linspace")
    p_sweep.add_argument("--dim", type=int)
    p_sweep.add_argument("--restarts", type=int)
    p_sweep.add_argument("--steps", type=int)

    p_thr = sub.add_parser("threshold", help="bisect a criterion's detection boundary")
    common(p_thr)
    p_thr.add_argument("--family", help="registered state family")
    p_thr.add_argument("--criterion", choices=("ccn", "lur", "skew", "ppt"))
    p_thr.add_argument("--tol", type=float, help="bracket width target (default 1e-6)")
    p_thr.add_argument("--range", dest="range_", metavar="LO:HI", help="search range")
    p_thr.add_argument("--dim", type=int)
    p_thr.add_argument("--prescan", type=int, help="pre-scan points (default 33)")
    p_thr.add_argument("--restarts", type=int)
    p_thr.add_argument("--steps", type=int)

    p_ind = sub.add_parser("independence", help="2x2 detection tally of lur vs skew")
    common(p_ind)
    p_ind.add_argument("--samples", type=int, help="number of sampled states")
    p_ind.add_argument("--sampler", choices=SAMPLERS, help="state ensemble")
    p_ind.add_argument("--restarts", type=int)
    p_ind.add_argument("--steps", type=int)

    p_self = sub.add_parser("selftest", help="run the property suites")
    common(p_self)
    p_self.add_argument("--instances", type=int, help="instances per suite (default 500)")

    return parser


def _merged_options(args: argparse.Namespace) -> dict:
    """Config-file values under explicitly passed flags, env seed as fallback."""
    options: dict = {}
    if getattr(args, "config", None):
        try:
            raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {args.config} is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(raw) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        options.update(raw)
    for key, value in vars(args).items():
        if key in ("command", "config"):
            continue
        name = "range" if key == "range_" else key
        if value is not None:
            options[name] = value
    if options.get("seed") is None:
        env = os.environ.get("SKEWSEP_SEED")
        if env is not None:
            try:
                options["seed"] = int(env)
            except ValueError as exc:
                raise ConfigError(f"SKEWSEP_SEED must be an integer, got {env!r}") from exc
    return options


def _parse_grid(options: dict) -> list[float]:
    grid = options.get("grid")
    range_ = options.get("range")
    if grid is not None and range_ is not None:
        raise ConfigError("give either --grid or --range, not both")
    if grid is not None:
        if isinstance(grid, str):
            parts = [p for p in grid.split(",") if p.strip()]
        elif isinstance(grid, list):
            parts = grid
        else:
            raise ConfigError("grid must be a comma list or JSON array")
        try:
            values = [float(p) for p in parts]
        except ValueError as exc:
            raise ConfigError(f"bad grid value: {exc}") from exc
        if not values:
            raise ConfigError("grid is empty")
        return values
    if range_ is not None:
        parts = str(range_).split(":")
        if len(parts) != 3:
            raise ConfigError("range must be LO:HI:N")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ConfigError(f"bad range: {exc}") from exc
        if n < 1 or not lo <= hi:
            raise ConfigError("range needs lo <= hi and n >= 1")
        if n == 1:
            return [lo]
        return [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    raise ConfigError("sweep needs --grid or --range")


def _climb(options: dict, default: HillClimbConfig) -> HillClimbConfig:
    return HillClimbConfig(
        restarts=int(options.get("restarts", default.restarts)),
        steps=int(options.get("steps", default.steps)),
        initial_step=default.initial_step,
        decay=default.decay,
    )


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_evaluate(options: dict) -> int:
    seed = int(options.get("seed", 0))
    strategy = options.get("strategy", "optimized")
    if options.get("state") and options.get("family"):
        raise ConfigError("give either --state or --family, not both")
    if options.get("state"):
        rho = load_density(options["state"])
        source = {"state_file": str(options["state"])}
    elif options.get("family"):
        rho = make_state(
            options["family"], options.get("param"), options.get("dim"), seed
        )
        source = {
            "family": options["family"],
            "param": options.get("param"),
            "dim": options.get("dim"),
        }
    else:
        raise ConfigError("evaluate needs --family or --state")
    reports = evaluate_all(
        rho, strategy=strategy, seed=seed, climb=_climb(options, DEFAULT_CLIMB)
    )
    payload = {
        "source": source,
        "dA": rho.dA,
        "dB": rho.dB,
        "strategy": strategy,
        "seed": seed,
        "reports": {
            name: (report.to_dict() if report is not None else None)
            for name, report in reports.items()
        },
    }
    _emit(payload, options.get("out"))
    return EXIT_OK


def _cmd_sweep(options: dict) -> int:
    if not options.get("family"):
        raise ConfigError("sweep needs --family")
    out = options.get("out")
    if not out:
        raise ConfigError("sweep needs --out for the CSV")
    grid = _parse_grid(options)
    run_sweep(
        family=options["family"],
        grid=grid,
        strategy=options.get("strategy", "optimized"),
        seed=int(options.get("seed", 0)),
        out_path=out,
        dim=options.get("dim"),
        climb=_climb(options, DEFAULT_CLIMB),
    )
    return EXIT_OK


def _cmd_threshold(options: dict) -> int:
    if not options.get("family") or not options.get("criterion"):
        raise ConfigError("threshold needs --family and --criterion")
    lo = hi = None
    if options.get("range") is not None:
        parts = str(options["range"]).split(":")
        if len(parts) != 2:
            raise ConfigError("threshold range must be LO:HI")
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise ConfigError(f"bad range: {exc}") from exc
    result = run_threshold(
        family=options["family"],
        criterion=options["criterion"],
        strategy=options.get("strategy", "optimized"),
        seed=int(options.get("seed", 0)),
        tol=float(options.get("tol", 1e-6)),
        lo=lo,
        hi=hi,
        dim=options.get("dim"),
        prescan=int(options.get("prescan", 33)),
        climb=_climb(options, DEFAULT_CLIMB),
    )
    _emit(result, options.get("out"))
    return EXIT_OK


def _cmd_independence(options: dict) -> int:
    out = options.get("out")
    if not out:
        raise ConfigError("independence needs --out (directory for tally and exemplars)")
    samples = options.get("samples")
    if samples is None:
        raise ConfigError("independence needs --samples")
    tally = run_independence(
        samples=int(samples),
        sampler=options.get("sampler", "default"),
        strategy=options.get("strategy", "optimized"),
        seed=int(options.get("seed", 0)),
        out_dir=out,
        climb=_climb(options, INDEPENDENCE_CLIMB),
    )
    sys.stdout.write(json.dumps(tally.to_dict(), indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_selftest(options: dict) -> int:
    seed = int(options.get("seed", DEFAULT_SELFTEST_SEED))
    instances = int(options.get("instances", 500))
    results = run_selftest(seed, instances=instances)
    for result in results:
        sys.stdout.write(result.line() + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        sys.stdout.write(f"FAIL {len(failed)}/{len(results)} suites\n")
        return EXIT_SELFTEST
    sys.stdout.write(f"PASS all {len(results)} suites\n")
    return EXIT_OK


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "sweep": _cmd_sweep,
    "threshold": _cmd_threshold,
    "independence": _cmd_independence,
    "selftest": _cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        options = _merged_options(args)
        return _COMMANDS[args.command](options)
    except InvalidStateFile as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_STATE
    except (ConfigError, NonMonotone, RangeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_CONFIG
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except SkewsepError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
