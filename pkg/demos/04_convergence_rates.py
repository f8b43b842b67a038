#!/usr/bin/env python3
"""Measure a strong convergence rate and compare it to the theory.

For a bounded drift that is beta-Holder in velocity, the Euler scheme
converges strongly with rate 1/2 + min(beta / (alpha (1 + alpha)), 1/2).
This script runs a deliberately small ensemble (a few hundred paths, modest
resolutions) so it finishes in seconds; the acceptance-grade run lives in
the test suite and the CLI.

Run:
    python demos/04_convergence_rates.py
Then render the figure from the CSVs it writes:
    python plots/plot_rates.py demo_rates.csv demo_summary.csv -o demo_rates.png
"""

from kinstab import (
    ExperimentConfig,
    multiscale_drift,
    strong_error_experiment,
    theoretical_rate,
    write_csv,
)


def main():
    alpha, beta = 1.5, 0.6
    cfg = ExperimentConfig(
        alpha=alpha,
        beta=beta,
        drift=multiscale_drift(1, alpha, beta, amplitude=1.0, scales=6, phase_seed=5),
        n_list=(8, 16, 32, 64),
        n_fine=1024,
        paths=400,
        seed=5,
        threads=4,
    )
    report = strong_error_experiment(cfg)

    print("strong error against the n = N_f reference on the same noise")
    for n, err, se in zip(report.n_list, report.errors, report.stderr):
        print(f"  n={n:4d}: e(n) = {err:.4e} +- {se:.1e}")
    rho = theoretical_rate(alpha, beta)
    print(f"\nfitted slope {report.slope:.3f} "
          f"[{report.slope_lo:.3f}, {report.slope_hi:.3f}], r^2 = {report.r_squared:.4f}")
    print(f"theoretical rate {rho:.2f} (slopes above it are fine; the bound is one-sided)")

    write_csv(report, "demo_rates.csv", "demo_summary.csv")
    print("\nwrote demo_rates.csv / demo_summary.csv")
    print("the CLI equivalent: kinstab rates --alpha 1.5 --beta 0.6 --out results/")


if __name__ == "__main__":
    main()
