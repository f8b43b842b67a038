#!/usr/bin/env python3
"""Drift families with certified anisotropic Holder regularity.

The convergence theory keys on a drift that is bounded and
beta-Holder in velocity, with the matching anisotropic exponent
(alpha + beta)/(1 + alpha) in position.  The admissible beta window
depends on alpha; each DriftSpec enforces it at construction.  The
multiscale family is a lacunary cosine sum whose regularity can be
probed empirically: Holder ratios stay bounded at the certified
exponent and blow up when probed 0.2 above it.

Run:
    python demos/03_drift_regularity.py
"""

from kinstab import RngStream, beta_range, holder_seminorm_by_scale, multiscale_drift


def main():
    print("admissible beta window by alpha")
    for alpha in (1.2, 1.5, 1.8):
        lo, hi = beta_range(alpha)
        print(f"  alpha={alpha}: beta in ({lo:.2f}, {hi:.2f})")

    spec = multiscale_drift(1, 1.5, 0.6, amplitude=1.0, scales=12, phase_seed=1)
    print(f"\nmultiscale drift: beta={spec.beta}, x-exponent={spec.x_exponent:.3f}, "
          f"sup bound={spec.sup_bound():.2f}")

    print("\nempirical Holder ratio |b(z') - b(z)| / dist^g over dyadic separations")
    print("  separation      g = beta      g = beta + 0.2")
    scale_exps = range(4, 11)
    _, at_beta = holder_seminorm_by_scale(
        spec, 60_000, 2.0, RngStream(99, 0), scale_exps=scale_exps)
    _, above = holder_seminorm_by_scale(
        spec, 60_000, 2.0, RngStream(99, 0), exponent=spec.beta + 0.2,
        scale_exps=scale_exps)
    for j, exp in enumerate(scale_exps):
        print(f"  2^-{exp:<2d}          {at_beta[j]:8.3f}      {above[j]:8.3f}")
    print("\nbounded on the left column (genuinely beta-Holder), growing on the")
    print("right (no extra smoothness to spare) -- the regularity is sharp")


if __name__ == "__main__":
    main()
