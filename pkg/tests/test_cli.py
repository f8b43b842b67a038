"""CLI contract: flags, config files, exit codes, artifacts, determinism."""

from __future__ import annotations

import csv

import pytest

from kinstab.cli import ConfigError, main, parse_config

_FAST_RATES = [
    "rates", "--alpha", "1.5", "--beta", "0.6", "--drift", "multiscale",
    "--scales", "4", "--n-list", "8,16,32", "--n-fine", "256",
    "--paths", "24", "--seed", "19", "--threads", "2",
]


def test_parse_config_happy_path(tmp_path):
    cfg = parse_config(_FAST_RATES + ["--out", str(tmp_path)])
    assert cfg.command == "rates"
    exp = cfg.values["experiment"]
    assert exp.n_list == (8, 16, 32)
    assert exp.paths == 24 and exp.seed == 19 and exp.threads == 2
    assert cfg.values["drift_spec"].kind == "multiscale"


def test_config_file_supplies_defaults_and_flags_override(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text(
        "# comment line\n"
        "alpha = 1.5\n"
        "beta = 0.6\n"
        "drift = separable\n"
        "n-list = 8,16\n"
        "n_fine = 256\n"
        "paths = 8\n"
        "seed = 3\n"
    )
    cfg = parse_config(
        ["rates", "--config", str(conf), "--paths", "16", "--threads", "1",
         "--out", str(tmp_path / "o")]
    )
    assert cfg.values["paths"] == 16  # flag wins
    assert cfg.values["drift_spec"].kind == "separable_holder"
    assert cfg.values["n_list"] == (8, 16)


def test_config_file_unknown_key_is_named(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("alpha=1.5\nbogus_key=1\n")
    with pytest.raises(ConfigError, match="bogus_key"):
        parse_config(["rates", "--config", str(conf), "--out", str(tmp_path)])


def test_config_file_malformed_line(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("alpha 1.5\n")
    with pytest.raises(ConfigError, match="line 1"):
        parse_config(["rates", "--config", str(conf), "--out", str(tmp_path)])


@pytest.mark.parametrize(
    "argv,fragment",
    [
        (["rates", "--alpha", "2.5", "--out", "o"], "alpha"),
        (["rates", "--alpha", "abc", "--out", "o"], "number"),
        (["rates", "--beta", "0.2", "--out", "o"], "(0.25, 1)"),
        (["rates", "--drift", "cubic", "--out", "o"], "cubic"),
        (["rates", "--n-list", "16,8", "--out", "o"], "increasing"),
        (["rates", "--n-list", "8,16,128", "--n-fine", "256", "--out", "o"], "finer"),
        (["rates", "--paths", "1", "--out", "o"], "paths"),
        (["rates", "--seed", "-1", "--out", "o"], "seed"),
        (["rates"], "--out is required"),
        (["rates", "--frobnicate", "1", "--out", "o"], "frobnicate"),
        (["diagnose-noise", "--samples", "10", "--out", "o"], "samples"),
        (["bogus-command"], "invalid choice"),
    ],
)
def test_config_errors(argv, fragment):
    with pytest.raises(ConfigError, match=None) as exc:
        parse_config(argv)
    assert fragment in str(exc.value)


def test_main_exit_code_2_and_single_line_error(capsys):
    rc = main(["rates", "--alpha", "3.0", "--out", "x"])
    assert rc == 2
    err = capsys.readouterr().err
    assert err.startswith("kinstab: error: config:")
    assert len(err.strip().splitlines()) == 1


def test_main_exit_code_3_on_runtime_failure(tmp_path, capsys):
    blocker = tmp_path / "occupied"
    blocker.write_text("not a directory")
    rc = main(_FAST_RATES + ["--out", str(blocker)])
    assert rc == 3
    assert capsys.readouterr().err.startswith("kinstab: error: runtime:")


def test_rates_run_writes_artifacts(tmp_path, capsys):
    out = tmp_path / "out"
    rc = main(_FAST_RATES + ["--out", str(out)])
    assert rc == 0
    stdout = capsys.readouterr().out
    assert "theoretical_rate=0.66" in stdout
    assert "slope=" in stdout
    with open(out / "rates.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert [r["n"] for r in rows] == ["8", "16", "32"]
    assert all(r["drift_kind"] == "multiscale" for r in rows)
    with open(out / "summary.csv") as fh:
        srow = next(csv.DictReader(fh))
    assert srow["theoretical_rate"] == "0.66"
    manifest = (out / "manifest.txt").read_text()
    assert "command=rates" in manifest and "seed=19" in manifest
    assert "threads" not in manifest  # scheduling only, not run identity


def test_rates_outputs_are_byte_identical_across_runs_and_threads(tmp_path):
    outs = []
    for name, threads in (("a", "1"), ("b", "4"), ("c", "1")):
        out = tmp_path / name
        argv = _FAST_RATES[:-1] + [threads, "--out", str(out)]
        assert main(argv) == 0
        outs.append(out)
    ref = {p.name: p.read_bytes() for p in outs[0].iterdir()}
    for out in outs[1:]:
        assert {p.name: p.read_bytes() for p in out.iterdir()} == ref


def test_simulate_writes_trajectories(tmp_path):
    out = tmp_path / "sim"
    rc = main(
        ["simulate", "--alpha", "1.5", "--beta", "0.6", "--drift", "separable",
         "--n-list", "8,16", "--n-fine", "128", "--paths", "2", "--seed", "5",
         "--out", str(out)]
    )
    assert rc == 0
    with open(out / "trajectories.csv") as fh:
        rows = list(csv.DictReader(fh))
    # 2 paths x ((8+1) + (16+1)) rows
    assert len(rows) == 2 * (9 + 17)
    assert rows[0]["path"] == "0" and rows[0]["k"] == "0" and rows[0]["t"] == "0"
    assert {r["n"] for r in rows} == {"8", "16"}


def test_diagnose_noise_run(tmp_path, capsys):
    out = tmp_path / "noise"
    rc = main(["diagnose-noise", "--alpha", "1.5", "--samples", "20000",
               "--seed", "101", "--out", str(out)])
    assert rc == 0
    stdout = capsys.readouterr().out
    with open(out / "diagnostics.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert all(r["pass"] == "true" for r in rows)
    assert f"diagnostics: {len(rows)}/{len(rows)} pass" in stdout


def test_diagnose_drift_run(tmp_path):
    out = tmp_path / "drift"
    rc = main(["diagnose-drift", "--alpha", "1.5", "--beta", "0.6",
               "--drift", "multiscale", "--seed", "0", "--pairs", "60000",
               "--out", str(out)])
    assert rc == 0
    with open(out / "diagnostics.csv") as fh:
        rows = list(csv.DictReader(fh))
    names = [r["test"] for r in rows]
    assert "witness_growth_excess" in names  # default --scales is 12 here
    assert all(r["pass"] == "true" for r in rows)


def test_env_var_sets_default_threads(tmp_path, monkeypatch):
    monkeypatch.setenv("KINSTAB_THREADS", "2")
    out = tmp_path / "env"
    argv = [a for a in _FAST_RATES if a not in ("--threads", "2")] + ["--out", str(out)]
    assert main(argv) == 0
    monkeypatch.setenv("KINSTAB_THREADS", "zero")
    assert main(argv + ["--out", str(tmp_path / "bad")]) == 2


def test_quad_override_flag(tmp_path):
    out = tmp_path / "quad"
    rc = main(_FAST_RATES + ["--quad", "1", "--out", str(out)])
    assert rc == 0
    assert "quad=1" in (out / "manifest.txt").read_text()
