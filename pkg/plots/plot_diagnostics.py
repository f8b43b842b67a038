#!/usr/bin/env python3
"""Render a multi-panel figure from a diagnostics CSV.

Reads the ``test,param,value,expected,tolerance,pass`` rows written by
``kinstab diagnose-noise`` / ``kinstab diagnose-drift`` and draws, for
whichever row families are present:

  * characteristic-function rows: measured vs exact values over xi;
  * slope rows (tail index, moment exponents, regularity witness):
    measured value against the expected level with its tolerance;
  * every row: deviation from expected in units of tolerance, colored
    by the recorded pass flag.

Usage:
    python plot_diagnostics.py diagnostics.csv -o fig.png

The script renders exactly what the CSV contains; it never recomputes a
statistic.  Exits 2 on schema mismatch (naming the missing column) or
empty input.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from plot_rates import SchemaError, column, read_rows

DIAG_COLUMNS = ("test", "param", "value", "expected", "tolerance", "pass")


def _param_values(rows):
    """Numeric part of ``param`` labels like ``xi=0.5``; index fallback."""
    out = []
    for j, row in enumerate(rows):
        try:
            out.append(float(row["param"].rsplit("=", 1)[-1]))
        except ValueError:
            out.append(float(j))
    return np.array(out)


def _panel_cf(ax, rows, path):
    xi = _param_values(rows)
    order = np.argsort(xi)
    value = column(rows, "value", path)[order]
    expected = column(rows, "expected", path)[order]
    tol = column(rows, "tolerance", path)[order]
    ax.errorbar(xi[order], expected, yerr=tol, fmt="-", color="gray",
                capsize=3, label="exact +- tol")
    ax.plot(xi[order], value, "o", color="tab:blue", label="measured")
    ax.set_xlabel("xi")
    ax.set_ylabel("Re CF")
    ax.set_title("characteristic function")
    ax.legend(frameon=False, fontsize=8)


def _panel_slopes(ax, rows, path):
    value = column(rows, "value", path)
    expected = column(rows, "expected", path)
    tol = column(rows, "tolerance", path)
    pos = np.arange(len(rows))
    labels = [f"{r['test']}\n({r['param']})" for r in rows]
    ax.errorbar(pos, expected, yerr=tol, fmt="_", ms=20, color="gray",
                capsize=4, label="expected +- tol")
    ax.plot(pos, value, "o", color="tab:blue", label="measured")
    ax.set_xticks(pos, labels, fontsize=7, rotation=30, ha="right")
    ax.set_title("slope / exponent checks")
    ax.legend(frameon=False, fontsize=8)


def _panel_deviation(ax, rows, path):
    value = column(rows, "value", path)
    expected = column(rows, "expected", path)
    tol = np.maximum(column(rows, "tolerance", path), 1e-300)
    dev = (value - expected) / tol
    passed = [r["pass"] == "true" for r in rows]
    colors = ["tab:green" if ok else "tab:red" for ok in passed]
    pos = np.arange(len(rows))
    ax.bar(pos, np.clip(dev, -5, 5), color=colors)
    ax.axhline(1.0, color="gray", lw=1, ls="--")
    ax.axhline(-1.0, color="gray", lw=1, ls="--")
    ax.set_xticks(pos, [r["test"] for r in rows], fontsize=6,
                  rotation=60, ha="right")
    ax.set_ylabel("(value - expected) / tolerance")
    ax.set_title("all rows (clipped at +-5)")


def render(diag_path, out_path):
    """Draw the panels present in the CSV; return the stdout summary line."""
    rows = read_rows(diag_path, DIAG_COLUMNS)
    cf_rows = [r for r in rows if r["test"] == "cf_real"]
    slope_rows = [r for r in rows if "slope" in r["test"] or "witness" in r["test"]]

    panels = []
    if cf_rows:
        panels.append(lambda ax: _panel_cf(ax, cf_rows, diag_path))
    if slope_rows:
        panels.append(lambda ax: _panel_slopes(ax, slope_rows, diag_path))
    panels.append(lambda ax: _panel_deviation(ax, rows, diag_path))

    n_pass = sum(r["pass"] == "true" for r in rows)
    fig, axes = plt.subplots(1, len(panels), figsize=(4.6 * len(panels), 4.2))
    for draw, ax in zip(panels, np.atleast_1d(axes)):
        draw(ax)
    fig.suptitle(f"diagnostics: {n_pass}/{len(rows)} pass")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return f"diagnostics: {n_pass}/{len(rows)} pass"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_diagnostics",
        description="multi-panel figure from a diagnostics CSV",
    )
    parser.add_argument("diagnostics", help="diagnostics CSV")
    parser.add_argument("-o", "--out", required=True, help="output image path")
    args = parser.parse_args(argv)
    try:
        note = render(args.diagnostics, args.out)
    except (SchemaError, OSError) as exc:
        print(f"plot_diagnostics: error: {exc}", file=sys.stderr)
        return 2
    print(note)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
