#!/usr/bin/env python3
"""Render a log-log strong-convergence figure from rate-report CSVs.

Reads the per-n rate report and the one-line summary written by
``kinstab rates`` and draws the measured errors with bootstrap error
bars, a line with the fitted slope from the summary, and (optionally) a
dashed reference line with the theoretical slope anchored at the
largest-n point.  A report from an exactly integrable drift (errors at
machine zero, NaN slope) is rendered as a text panel instead.

Usage:
    python plot_rates.py report.csv summary.csv -o fig.png [--no-theory-line]

The script renders exactly what the CSVs contain; it never refits or
recomputes statistics.  Exits 2 on schema mismatch (naming the missing
column) or empty input.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

RATES_COLUMNS = ("alpha", "beta", "drift_kind", "n", "n_fine", "paths",
                 "moment", "error", "stderr", "seed")
SUMMARY_COLUMNS = ("slope", "slope_lo", "slope_hi", "theoretical_rate",
                   "xi_hat", "r_squared")


class SchemaError(ValueError):
    """The input CSV does not match the harness contract."""


def read_rows(path, required):
    """Read a CSV into dict rows, enforcing the required header."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in required:
            if col not in header:
                raise SchemaError(f"{path}: missing column '{col}'")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def column(rows, name, path, conv=float):
    """One column as an array, with a schema error naming bad cells."""
    try:
        return np.array([conv(row[name]) for row in rows])
    except ValueError as exc:
        raise SchemaError(f"{path}: bad value in column '{name}': {exc}") from exc


def _annotation(summary):
    slope = float(summary["slope"])
    lo, hi = float(summary["slope_lo"]), float(summary["slope_hi"])
    r2 = float(summary["r_squared"])
    return f"slope={slope:g} ci=[{lo:g}, {hi:g}] r_squared={r2:g}"


def render(report_path, summary_path, out_path, theory_line=True):
    """Draw the figure and return the stdout annotation line."""
    rows = read_rows(report_path, RATES_COLUMNS)
    summary = read_rows(summary_path, SUMMARY_COLUMNS)[0]

    order = np.argsort(column(rows, "n", report_path, conv=int))
    n = column(rows, "n", report_path, conv=int)[order]
    err = column(rows, "error", report_path)[order]
    serr = column(rows, "stderr", report_path)[order]
    slope = column([summary], "slope", summary_path)[0]
    rho = column([summary], "theoretical_rate", summary_path)[0]

    first = rows[0]
    title = (f"alpha={float(first['alpha']):g}, beta={float(first['beta']):g}, "
             f"drift={first['drift_kind']}, M={first['paths']}")

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if not math.isfinite(slope) or err.min() <= 0.0:
        ax.axis("off")
        ax.text(0.5, 0.55, "exact scheme (zero/constant drift)",
                ha="center", va="center", fontsize=14)
        ax.text(0.5, 0.4, f"max error {err.max():.2e}",
                ha="center", va="center", fontsize=10, color="gray")
        ax.set_title(title)
        note = "degenerate report: exact scheme (zero/constant drift)"
    else:
        ax.errorbar(n, err, yerr=serr, fmt="o", ms=5, capsize=3,
                    color="tab:blue", label=f"measured (M={first['paths']})")
        span = np.geomspace(n[0], n[-1], 64)
        # position the fitted-slope line through the log centroid; the slope
        # itself comes from the summary row, nothing is refit here
        cx = math.exp(np.mean(np.log(n)))
        cy = math.exp(np.mean(np.log(err)))
        lo, hi = float(summary["slope_lo"]), float(summary["slope_hi"])
        ax.plot(span, cy * (span / cx) ** (-slope), color="tab:orange",
                label=f"fitted slope {slope:g} [{lo:g}, {hi:g}]")
        if theory_line:
            ax.plot(span, err[-1] * (span / n[-1]) ** (-rho), "k--", lw=1,
                    label=f"reference slope {rho:g}")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("coarse steps n")
        ax.set_ylabel("strong error  e(n)")
        ax.set_title(title)
        ax.legend(frameon=False)
        ax.text(0.02, 0.05, _annotation(summary), transform=ax.transAxes,
                fontsize=9, color="dimgray")
        note = _annotation(summary)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return note


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_rates",
        description="log-log convergence figure from rate-report CSVs",
    )
    parser.add_argument("report", help="per-n rate report CSV")
    parser.add_argument("summary", help="one-line fit summary CSV")
    parser.add_argument("-o", "--out", required=True, help="output image path")
    parser.add_argument("--no-theory-line", action="store_true",
                        help="suppress the dashed theoretical-slope line")
    args = parser.parse_args(argv)
    try:
        note = render(args.report, args.summary, args.out,
                      theory_line=not args.no_theory_line)
    except (SchemaError, OSError) as exc:
        print(f"plot_rates: error: {exc}", file=sys.stderr)
        return 2
    print(note)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
