"""Command-line front end.

Usage
-----
::

    kinstab rates          --alpha 1.5 --beta 0.6 --drift multiscale \\
                           --n-list 16,32,64,128,256,512 --n-fine 8192 \\
                           --paths 2000 --moment 2 --seed 7 --threads 8 --out out/
    kinstab simulate       ... --out out/          (dump trajectories.csv)
    kinstab diagnose-noise --alpha 1.5 --samples 100000 --seed 7 --out out/
    kinstab diagnose-drift --alpha 1.5 --beta 0.6 --drift multiscale --out out/

Every subcommand writes its CSV artifacts plus a ``manifest.txt`` echoing the
resolved configuration into ``--out``.  A flat ``key=value`` config file can
be passed with ``--config``; explicit flags override file values, and unknown
keys are rejected by name.  ``KINSTAB_THREADS`` sets the default worker
count.  Worker count never changes any output byte (it is scheduling only,
and is deliberately left out of the manifest).

Exit codes: 0 success, 2 configuration error, 3 runtime failure.  Errors are
single lines on stderr, ``kinstab: error: <stage>: <message>``.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .drifts import DriftSpec, constant_drift, multiscale_drift, separable_drift, zero_drift
from .harness import (
    ExperimentConfig,
    drift_diagnostics,
    noise_diagnostics,
    strong_error_experiment,
    write_csv,
    write_diagnostics_csv,
)
from .kinetic_path import build_master_path
from .alpha_stable import RngStream, StableParams
from .scheme import SchemeConfig, run_euler

__all__ = ["ConfigError", "parse_config", "main", "entrypoint"]

_DRIFT_CHOICES = ("zero", "constant", "separable", "multiscale")


class ConfigError(ValueError):
    """Invalid flags, config file, or parameter combination (exit code 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single-line errors instead of usage dumps
        raise ConfigError(message)


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise ConfigError(f"expected an integer, got {s!r}") from None


def _float(s: str) -> float:
    try:
        return float(s)
    except ValueError:
        raise ConfigError(f"expected a number, got {s!r}") from None


def _int_list(s: str) -> tuple:
    try:
        items = tuple(int(tok) for tok in s.split(",") if tok.strip())
    except ValueError:
        raise ConfigError(f"expected comma-separated integers, got {s!r}") from None
    if not items:
        raise ConfigError(f"expected comma-separated integers, got {s!r}")
    return items


# Per-subcommand option tables: name -> (converter, default).  These drive
# both the argparse flags and the config-file keys.
_CORE = {
    "alpha": (_float, 1.5),
    "beta": (_float, 0.6),
    "drift": (str, "multiscale"),
    "amplitude": (_float, 1.0),
    "scales": (_int, 8),
    "seed": (_int, 0),
}
_OPTIONS = {
    "rates": {
        **_CORE,
        "n_list": (_int_list, (16, 32, 64, 128)),
        "n_fine": (_int, 2048),
        "paths": (_int, 256),
        "moment": (_float, 2.0),
        "quad": (_int, None),
        "threads": (_int, None),
    },
    "simulate": {
        **_CORE,
        "n_list": (_int_list, (16, 64)),
        "n_fine": (_int, 1024),
        "paths": (_int, 4),
        "quad": (_int, None),
    },
    "diagnose-noise": {
        "alpha": (_float, 1.5),
        "samples": (_int, 100_000),
        "seed": (_int, 0),
    },
    # scales default 12: the regularity witness needs modes below 2^-10
    "diagnose-drift": {**_CORE, "scales": (_int, 12), "pairs": (_int, 120_000)},
}


@dataclass
class CliConfig:
    """Fully-resolved, fully-validated invocation plan."""

    command: str
    out: Path
    values: dict


def _read_config_file(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _build_parser() -> _Parser:
    parser = _Parser(prog="kinstab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"kinstab {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    for command, table in _OPTIONS.items():
        sp = subs.add_parser(command)
        for name in table:
            sp.add_argument(f"--{name.replace('_', '-')}", dest=name, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--config", default=None)
    return parser


def _resolve_drift(values: dict) -> DriftSpec:
    kind = values["drift"]
    if kind not in _DRIFT_CHOICES:
        raise ConfigError(f"--drift must be one of {', '.join(_DRIFT_CHOICES)}; got {kind!r}")
    alpha, beta = values["alpha"], values["beta"]
    try:
        if kind == "zero":
            return zero_drift(1, alpha, beta)
        if kind == "constant":
            return constant_drift([values["amplitude"]], alpha, beta)
        if kind == "separable":
            return separable_drift(1, alpha, beta, amplitude=values["amplitude"])
        return multiscale_drift(
            1, alpha, beta, amplitude=values["amplitude"],
            scales=values["scales"], phase_seed=values["seed"],
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _default_threads() -> int:
    env = os.environ.get("KINSTAB_THREADS")
    if env is not None:
        n = _int(env)
        if n < 1:
            raise ConfigError(f"KINSTAB_THREADS must be >= 1, got {env!r}")
        return n
    return os.cpu_count() or 1


def parse_config(argv) -> CliConfig:
    """Parse argv (+ optional config file) into a validated plan.

    Raises :class:`ConfigError` for anything wrong that can be known before
    compute starts: unknown flags or keys, malformed values, parameters
    outside their admissible ranges, inconsistent grids.
    """
    args = _build_parser().parse_args(argv)
    table = _OPTIONS[args.command]

    file_values = _read_config_file(args.config) if args.config else {}
    unknown = sorted(set(file_values) - set(table) - {"out"})
    if unknown:
        raise ConfigError(f"unknown config key(s) for {args.command}: {', '.join(unknown)}")

    values = {}
    for name, (conv, default) in table.items():
        raw = getattr(args, name)
        if raw is not None:
            values[name] = conv(raw)
        elif name in file_values:
            values[name] = conv(file_values[name])
        else:
            values[name] = default
    out = args.out if args.out is not None else file_values.get("out")
    if not out:
        raise ConfigError("--out is required")

    # Range checks beyond what the converters can see.
    if not 0 <= values["seed"] < 2**64:
        raise ConfigError(f"--seed must be a 64-bit unsigned integer, got {values['seed']}")
    if args.command == "diagnose-noise":
        if not 1.0 < values["alpha"] <= 2.0:
            raise ConfigError(f"alpha must lie in (1, 2], got {values['alpha']:g}")
        if values["samples"] < 1000:
            raise ConfigError(f"--samples must be >= 1000, got {values['samples']}")
        return CliConfig(args.command, Path(out), values)

    if not 1.0 < values["alpha"] < 2.0:
        raise ConfigError(f"alpha must lie in (1, 2), got {values['alpha']:g}")
    values["drift_spec"] = _resolve_drift(values)

    if args.command == "diagnose-drift":
        if values["pairs"] < 1000:
            raise ConfigError(f"--pairs must be >= 1000, got {values['pairs']}")
        return CliConfig(args.command, Path(out), values)

    if args.command == "rates":
        values["threads"] = values["threads"] if values["threads"] is not None else _default_threads()
    try:
        # ExperimentConfig owns the grid/ensemble invariants; reuse verbatim.
        values["experiment"] = ExperimentConfig(
            alpha=values["alpha"],
            beta=values["beta"],
            drift=values["drift_spec"],
            n_list=values["n_list"],
            n_fine=values["n_fine"],
            paths=values["paths"],
            seed=values["seed"],
            moment=values.get("moment", 2.0),
            m_quad=values["quad"],
            threads=values.get("threads", 1),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return CliConfig(args.command, Path(out), values)


def _write_manifest(cfg: CliConfig) -> None:
    skip = {"drift_spec", "experiment", "threads"}  # threads is scheduling only
    lines = [f"command={cfg.command}", f"version={__version__}"]
    for key in sorted(cfg.values):
        if key in skip:
            continue
        value = cfg.values[key]
        if isinstance(value, tuple):
            value = ",".join(str(v) for v in value)
        elif value is None:
            value = "default"
        lines.append(f"{key}={value}")
    (cfg.out / "manifest.txt").write_text("\n".join(lines) + "\n")


def _run_rates(cfg: CliConfig) -> None:
    report = strong_error_experiment(cfg.values["experiment"])
    write_csv(report, cfg.out / "rates.csv", cfg.out / "summary.csv")
    for j, n in enumerate(report.n_list):
        print(f"n={n} error={report.errors[j]:.6e} stderr={report.stderr[j]:.2e}")
    print(f"theoretical_rate={report.theoretical:.4f}")
    print(
        f"slope={report.slope:.4f} ci=[{report.slope_lo:.4f},{report.slope_hi:.4f}] "
        f"r_squared={report.r_squared:.4f} xi_hat={report.xi_hat:.6e} flag={report.flag}"
    )


def _run_simulate(cfg: CliConfig) -> None:
    v = cfg.values
    params = StableParams(v["alpha"], 1)
    spec = v["drift_spec"]
    exp = v["experiment"]
    with open(cfg.out / "trajectories.csv", "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["path", "n", "k", "t", "x", "v"])
        for p in range(exp.paths):
            master = build_master_path(exp.n_fine, params, RngStream(exp.seed, p))
            for n in exp.n_list:
                traj = run_euler(SchemeConfig(n=n, m_quad=exp.m_quad), master, spec, exp.z0)
                for k in range(n + 1):
                    wr.writerow(
                        [p, n, k, "%.10g" % traj.times[k],
                         "%.12e" % traj.x[k, 0], "%.12e" % traj.v[k, 0]]
                    )
    print(f"wrote trajectories for {exp.paths} paths at resolutions {list(exp.n_list)}")


def _run_diagnose_noise(cfg: CliConfig) -> None:
    v = cfg.values
    rows = noise_diagnostics(v["alpha"], v["samples"], v["seed"])
    write_diagnostics_csv(rows, cfg.out / "diagnostics.csv")
    n_pass = sum(r.passed for r in rows)
    print(f"diagnostics: {n_pass}/{len(rows)} pass")


def _run_diagnose_drift(cfg: CliConfig) -> None:
    v = cfg.values
    rows = drift_diagnostics(v["drift_spec"], v["seed"], n_pairs=v["pairs"])
    write_diagnostics_csv(rows, cfg.out / "diagnostics.csv")
    n_pass = sum(r.passed for r in rows)
    print(f"diagnostics: {n_pass}/{len(rows)} pass")


_RUNNERS = {
    "rates": _run_rates,
    "simulate": _run_simulate,
    "diagnose-noise": _run_diagnose_noise,
    "diagnose-drift": _run_diagnose_drift,
}


def main(argv=None) -> int:
    """Run one subcommand; returns the process exit code."""
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except ConfigError as exc:
        print(f"kinstab: error: config: {exc}", file=sys.stderr)
        return 2
    try:
        cfg.out.mkdir(parents=True, exist_ok=True)
        _RUNNERS[cfg.command](cfg)
        _write_manifest(cfg)
    except Exception as exc:  # noqa: BLE001 - boundary: report and signal
        print(f"kinstab: error: runtime: {exc}", file=sys.stderr)
        return 3
    return 0


def entrypoint() -> None:
    sys.exit(main())
