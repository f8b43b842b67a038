"""Sampling of one-sided stable laws and isotropic alpha-stable increments.

The driving noise is the isotropic alpha-stable process L normalized so that

    E exp(i xi . L_t) = exp(-t |xi|^alpha),      xi in R^d.

Increments are generated by Gaussian subordination: if S is one-sided
(alpha/2)-stable with Laplace transform E exp(-lam S) = exp(-lam^(alpha/2))
and N ~ N(0, I_d), then sqrt(2 S) N has characteristic function
exp(-|xi|^alpha), and scaling S by dt^(2/alpha) gives the increment over a
step of length dt.  The one-sided variable itself comes from the Kanter
construction

    S = (sin(a U) / sin(U)^(1/a)) * (sin((1 - a) U) / E)^((1 - a)/a),

with U uniform on (0, pi) and E standard exponential.

All randomness flows through :class:`RngStream`, which derives a PCG64
generator from a 64-bit master seed and a 64-bit stream index via numpy's
``SeedSequence(seed, spawn_key=(index,))``.  Identical (seed, index) pairs
reproduce identical sample sequences; distinct indices give independent
streams, which is what makes per-path seeding and thread-count-independent
output possible upstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "StableParams",
    "RngStream",
    "sample_one_sided_stable",
    "sample_isotropic_stable_increment",
    "empirical_cf",
]

_UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class StableParams:
    """Stability index and spatial dimension of the driving noise.

    Parameters
    ----------
    alpha : float
        Stability index, in (1, 2].  alpha = 2 is admitted only as the
        Gaussian debug limit (variance 2*dt per coordinate).
    dim : int
        Spatial dimension d >= 1 of each of the position and velocity blocks.
    """

    alpha: float
    dim: int = 1

    def __post_init__(self) -> None:
        if not 1.0 < float(self.alpha) <= 2.0:
            raise ValueError(f"alpha must lie in (1, 2], got {self.alpha}")
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim}")


class RngStream:
    """Deterministic random stream keyed by (master seed, stream index).

    The underlying generator is ``PCG64(SeedSequence(seed, spawn_key=(index,)))``.
    Consumers draw from the ``gen`` attribute (a ``numpy.random.Generator``);
    the stream is stateful, but rebuilding an ``RngStream`` with the same key
    restarts the identical sequence.
    """

    __slots__ = ("seed", "index", "gen")

    def __init__(self, seed: int, index: int = 0):
        for name, value in (("seed", seed), ("index", index)):
            if int(value) != value or not 0 <= value <= _UINT64_MAX:
                raise ValueError(f"{name} must be a 64-bit unsigned integer, got {value!r}")
        self.seed = int(seed)
        self.index = int(index)
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.index,))
        self.gen = np.random.Generator(np.random.PCG64(ss))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, index={self.index})"


def sample_one_sided_stable(a: float, rng: RngStream, size: int | None = None):
    """Draw positive stable variables with Laplace transform exp(-lam**a).

    Parameters
    ----------
    a : float
        Stability index of the subordinator, in (0, 1).
    rng : RngStream
        Source stream; consumed (two base draws per sample, plus resampling
        of the measure-zero degenerate draws U in {0, pi} or E = 0).
    size : int, optional
        Number of samples.  ``None`` returns a scalar float.

    Returns
    -------
    float or ndarray
        Strictly positive samples, shape ``(size,)`` when size is given.
    """
    if not 0.0 < a < 1.0:
        raise ValueError(f"one-sided stability index must lie in (0, 1), got {a}")
    n = 1 if size is None else int(size)
    if size is not None and (size != n or n < 0):
        raise ValueError(f"size must be a nonnegative integer, got {size!r}")

    out = np.empty(n, dtype=np.float64)
    todo = np.arange(n)
    while todo.size:
        u = rng.gen.uniform(0.0, np.pi, size=todo.size)
        e = rng.gen.standard_exponential(todo.size)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            s = (np.sin(a * u) / np.sin(u) ** (1.0 / a)) * (
                np.sin((1.0 - a) * u) / e
            ) ** ((1.0 - a) / a)
        ok = np.isfinite(s) & (s > 0.0)
        out[todo[ok]] = s[ok]
        todo = todo[~ok]
    return float(out[0]) if size is None else out


def sample_isotropic_stable_increment(
    params: StableParams, dt: float, rng: RngStream, size: int | None = None
) -> np.ndarray:
    """Draw increments of L over a time step, CF exp(-dt |xi|^alpha).

    Parameters
    ----------
    params : StableParams
    dt : float
        Step length, > 0.
    rng : RngStream
        Source stream.  Draw order (subordinator first, then the Gaussian
        block) is part of the reproducibility contract.
    size : int, optional
        Number of increments; ``None`` returns shape ``(d,)``, otherwise
        ``(size, d)``.

    Returns
    -------
    ndarray
    """
    if not dt > 0.0 or not np.isfinite(dt):
        raise ValueError(f"dt must be positive and finite, got {dt}")
    d = params.dim
    n = 1 if size is None else int(size)
    if params.alpha == 2.0:
        incr = np.sqrt(2.0 * dt) * rng.gen.standard_normal((n, d))
    else:
        s = dt ** (2.0 / params.alpha) * sample_one_sided_stable(
            params.alpha / 2.0, rng, size=n
        )
        incr = np.sqrt(2.0 * s)[:, None] * rng.gen.standard_normal((n, d))
    return incr[0] if size is None else incr


def empirical_cf(samples, xi) -> complex:
    """Empirical characteristic function (1/M) sum_j exp(i xi . X_j).

    Parameters
    ----------
    samples : array_like
        Sample block, shape ``(M, d)`` (or ``(M,)`` for d = 1).
    xi : array_like
        Frequency vector, shape ``(d,)`` (or scalar for d = 1).

    Returns
    -------
    complex
    """
    x = np.asarray(samples, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    if x.ndim != 2 or x.shape[0] == 0:
        raise ValueError(f"samples must be a nonempty (M, d) block, got shape {x.shape}")
    f = np.atleast_1d(np.asarray(xi, dtype=np.float64))
    if f.shape != (x.shape[1],):
        raise ValueError(f"xi has shape {f.shape}, expected ({x.shape[1]},)")
    # Elementwise product + pairwise sum keeps the reduction order fixed
    # (no BLAS dispatch), so repeated runs are byte-identical.
    phase = np.sum(x * f, axis=1)
    return complex(np.mean(np.cos(phase)), np.mean(np.sin(phase)))
