"""Rate-figure rendering: criterion 12 plus schema and determinism checks."""

import numpy as np

import plot_rates

_HEADER = "alpha,beta,drift_kind,n,n_fine,paths,moment,error,stderr,seed"
_SUMMARY_HEADER = "slope,slope_lo,slope_hi,theoretical_rate,xi_hat,r_squared"


def _write_fixture(tmp_path, degenerate=False):
    report = tmp_path / "rates.csv"
    summary = tmp_path / "summary.csv"
    lines = [_HEADER]
    for n in (16, 32, 64, 128, 256, 512):
        err = 0.0 if degenerate else float(n) ** -0.66
        lines.append(f"1.5,0.6,multiscale,{n},8192,2000,2,{err:.12e},{0.02 * err:.12e},7")
    report.write_text("\n".join(lines) + "\n")
    if degenerate:
        summary.write_text(f"{_SUMMARY_HEADER}\nnan,nan,nan,0.66,0.000000000000e+00,nan\n")
    else:
        summary.write_text(f"{_SUMMARY_HEADER}\n0.66,0.64,0.68,0.66,4.1e-01,0.9999\n")
    return report, summary


def test_c12_fixture_slope_and_schema_rejection(criterion, tmp_path, capsys):
    report, summary = _write_fixture(tmp_path)
    fig = tmp_path / "fig.png"
    rc = plot_rates.main([str(report), str(summary), "-o", str(fig)])
    out = capsys.readouterr().out
    ok_render = rc == 0 and fig.stat().st_size > 0 and "slope=0.66" in out

    broken = tmp_path / "broken.csv"
    broken.write_text(report.read_text().replace("error", "err", 1))
    rc_broken = plot_rates.main([str(broken), str(summary), "-o", str(tmp_path / "b.png")])
    err_text = capsys.readouterr().err
    ok_reject = rc_broken != 0 and "'error'" in err_text

    ok = ok_render and ok_reject
    criterion(f"C12 plot-rates-fixture: {'PASS' if ok else 'FAIL'} "
              f"(slope annotation 0.66 rendered rc={rc}; schema break rc={rc_broken})")
    assert ok


def test_annotation_repeats_summary_fields(tmp_path, capsys):
    report, summary = _write_fixture(tmp_path)
    rc = plot_rates.main([str(report), str(summary), "-o", str(tmp_path / "f.png")])
    out = capsys.readouterr().out
    assert rc == 0
    # the script renders what the CSV contains -- every annotated number is a
    # verbatim summary field
    assert "slope=0.66" in out
    assert "ci=[0.64, 0.68]" in out
    assert "r_squared=0.9999" in out


def test_output_bytes_deterministic(tmp_path):
    report, summary = _write_fixture(tmp_path)
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    assert plot_rates.main([str(report), str(summary), "-o", str(a)]) == 0
    assert plot_rates.main([str(report), str(summary), "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_theory_line_flag(tmp_path):
    report, summary = _write_fixture(tmp_path)
    with_line, without = tmp_path / "w.png", tmp_path / "wo.png"
    assert plot_rates.main([str(report), str(summary), "-o", str(with_line)]) == 0
    assert plot_rates.main(
        [str(report), str(summary), "-o", str(without), "--no-theory-line"]
    ) == 0
    assert with_line.read_bytes() != without.read_bytes()


def test_degenerate_report_gets_text_panel(tmp_path, capsys):
    report, summary = _write_fixture(tmp_path, degenerate=True)
    fig = tmp_path / "fig.png"
    rc = plot_rates.main([str(report), str(summary), "-o", str(fig)])
    out = capsys.readouterr().out
    assert rc == 0
    assert fig.stat().st_size > 0
    assert "exact scheme (zero/constant drift)" in out


def test_header_only_report_rejected(tmp_path, capsys):
    report, summary = _write_fixture(tmp_path)
    empty = tmp_path / "empty.csv"
    empty.write_text(_HEADER + "\n")
    rc = plot_rates.main([str(empty), str(summary), "-o", str(tmp_path / "f.png")])
    assert rc == 2
    assert "no data rows" in capsys.readouterr().err


def test_missing_summary_column_named(tmp_path, capsys):
    report, summary = _write_fixture(tmp_path)
    bad = tmp_path / "bad_summary.csv"
    bad.write_text(summary.read_text().replace("xi_hat", "xi"))
    rc = plot_rates.main([str(report), str(bad), "-o", str(tmp_path / "f.png")])
    assert rc == 2
    assert "'xi_hat'" in capsys.readouterr().err


def test_malformed_cell_named_by_column(tmp_path, capsys):
    report, summary = _write_fixture(tmp_path)
    rows = report.read_text().splitlines()
    fields = rows[3].split(",")
    fields[7] = "oops"
    rows[3] = ",".join(fields)
    mangled = tmp_path / "mangled.csv"
    mangled.write_text("\n".join(rows) + "\n")
    rc = plot_rates.main([str(mangled), str(summary), "-o", str(tmp_path / "f.png")])
    assert rc == 2
    assert "column 'error'" in capsys.readouterr().err


def test_render_returns_note_and_points_plotted(tmp_path):
    report, summary = _write_fixture(tmp_path)
    note = plot_rates.render(str(report), str(summary), str(tmp_path / "f.png"))
    assert note.startswith("slope=0.66")
    errs = plot_rates.column(
        plot_rates.read_rows(str(report), plot_rates.RATES_COLUMNS), "error", "rates.csv"
    )
    assert np.all(errs > 0) and errs.size == 6
