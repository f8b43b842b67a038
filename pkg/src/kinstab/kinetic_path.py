"""Phase-space geometry and the fine-grid master path of the driving noise.

State points are z = (x, v) in R^d x R^d.  The free-streaming shear

    Gamma_t z = (x + t v, v)

is the flow of dx = v dt with frozen velocity; it is what the Euler scheme
transports drift evaluations along, and what the kinetic noise

    M_t = (I_t, L_t),      I_t = integral of L over [0, t],

is compared against: M_t - Gamma_{t-s} M_s is independent of the past and
distributed like M_{t-s}.

Distances are measured anisotropically, matching the two scaling exponents
of the kinetic dynamics:

    |z - z'|_a = |x - x'|^(1/(1+alpha)) + |v - v'|.

A :class:`MasterPath` holds one realization of (L, I) on the uniform fine
grid {i/N_f}: L by cumulative summation of exact-law increments, I by the
trapezoid rule on that grid.  Coarser schemes subsample the same arrays, so
every discretization level of a path sees literally the same noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .alpha_stable import RngStream, StableParams, sample_isotropic_stable_increment

__all__ = [
    "PhasePoint",
    "gamma_shift",
    "grid_map_kn",
    "aniso_dist",
    "MasterPath",
    "build_master_path",
    "moment_diagnostic",
]


@dataclass(frozen=True)
class PhasePoint:
    """A point z = (x, v) of phase space, both blocks shape ``(d,)``."""

    x: np.ndarray
    v: np.ndarray

    def __post_init__(self) -> None:
        x = np.atleast_1d(np.asarray(self.x, dtype=np.float64))
        v = np.atleast_1d(np.asarray(self.v, dtype=np.float64))
        if x.ndim != 1 or x.shape != v.shape:
            raise ValueError(
                f"x and v must be vectors of equal length, got {x.shape} and {v.shape}"
            )
        if not (np.isfinite(x).all() and np.isfinite(v).all()):
            raise ValueError("phase point has non-finite entries")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "v", v)

    @property
    def dim(self) -> int:
        return self.x.shape[0]

    def as_array(self) -> np.ndarray:
        """Concatenated (x, v) vector, shape ``(2d,)``."""
        return np.concatenate([self.x, self.v])


def gamma_shift(t: float, z: PhasePoint) -> PhasePoint:
    """Free-streaming shear: (x, v) -> (x + t v, v)."""
    return PhasePoint(z.x + t * z.v, z.v)


def grid_map_kn(t: float, n: int) -> float:
    """Last grid point of the uniform n-grid at or before t: floor(n t)/n."""
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    return float(np.floor(n * t) / n)


def aniso_dist(z: PhasePoint, z2: PhasePoint, alpha: float) -> float:
    """Anisotropic distance |x - x'|^(1/(1+alpha)) + |v - v'|."""
    if z.dim != z2.dim:
        raise ValueError(f"dimension mismatch: {z.dim} vs {z2.dim}")
    dx = float(np.linalg.norm(z.x - z2.x))
    dv = float(np.linalg.norm(z.v - z2.v))
    return dx ** (1.0 / (1.0 + alpha)) + dv


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass
class MasterPath:
    """One noise realization (L, I) on the uniform fine grid over [0, 1].

    Attributes
    ----------
    n_fine : int
        Number of fine steps N_f (a power of two); arrays have N_f + 1 rows.
    alpha : float
        Stability index the increments were drawn with.
    times : ndarray, shape (N_f + 1,)
        Grid nodes i / N_f.
    L : ndarray, shape (N_f + 1, d)
        Noise path, L[0] = 0, cumulative sum of the increments.
    I : ndarray, shape (N_f + 1, d)
        Trapezoid cumulative integral of L on the same grid, I[0] = 0.
    """

    n_fine: int
    alpha: float
    times: np.ndarray = field(repr=False)
    L: np.ndarray = field(repr=False)
    I: np.ndarray = field(repr=False)

    @classmethod
    def from_increments(cls, increments, alpha: float) -> "MasterPath":
        """Build the path from its fine-grid increments, shape (N_f, d)."""
        incr = np.asarray(increments, dtype=np.float64)
        if incr.ndim == 1:
            incr = incr[:, None]
        if incr.ndim != 2 or incr.shape[0] < 1:
            raise ValueError(f"increments must have shape (N_f, d), got {incr.shape}")
        n_fine = incr.shape[0]
        if not _is_power_of_two(n_fine):
            raise ValueError(f"n_fine must be a power of two, got {n_fine}")
        if not np.isfinite(incr).all():
            raise ValueError("increments contain non-finite entries")
        d = incr.shape[1]
        h = 1.0 / n_fine
        L = np.zeros((n_fine + 1, d))
        np.cumsum(incr, axis=0, out=L[1:])
        I = np.zeros((n_fine + 1, d))
        np.cumsum(0.5 * h * (L[:-1] + L[1:]), axis=0, out=I[1:])
        times = np.arange(n_fine + 1) / n_fine
        return cls(n_fine=n_fine, alpha=float(alpha), times=times, L=L, I=I)

    @property
    def dim(self) -> int:
        return self.L.shape[1]

    def node_index(self, t: float) -> int:
        """Index i with i/N_f = t; raises if t is not a fine-grid node."""
        i = round(t * self.n_fine)
        if not 0 <= i <= self.n_fine or abs(i / self.n_fine - t) > 1e-12:
            raise ValueError(f"t = {t} is not a node of the {self.n_fine}-grid")
        return int(i)

    def kinetic_point(self, i: int) -> PhasePoint:
        """The kinetic noise M at fine node i, as the phase point (I_i, L_i)."""
        return PhasePoint(self.I[i], self.L[i])


def build_master_path(n_fine: int, params: StableParams, rng: RngStream) -> MasterPath:
    """Sample a fresh master path on the N_f-grid from the given stream."""
    if not _is_power_of_two(n_fine):
        raise ValueError(f"n_fine must be a power of two, got {n_fine}")
    incr = sample_isotropic_stable_increment(params, 1.0 / n_fine, rng, size=n_fine)
    return MasterPath.from_increments(incr, params.alpha)


def moment_diagnostic(paths, s: float, t: float, gamma: float, p: float = 2.0) -> float:
    """L_p norm of |M_t - Gamma_{t-s} M_s|_a^gamma ^ 1 over a path ensemble.

    The shear-compensated displacement of the kinetic noise is

        M_t - Gamma_{t-s} M_s = (I_t - I_s - (t-s) L_s,  L_t - L_s),

    which is independent of the path up to time s and distributed like
    M_{t-s}.  Its truncated gamma-moment in the anisotropic metric decays
    like a power of (t - s); this function returns the empirical value

        ( mean_j  min(|.|_a^gamma, 1)^p )^(1/p).

    Parameters
    ----------
    paths : sequence of MasterPath
        Ensemble sharing one grid; s and t must be nodes of it.
    s, t : float
        Times with 0 <= s < t <= 1, both on the fine grid.
    gamma : float
        Moment exponent, > 0.
    p : float
        Integrability order, >= 1.

    Returns
    -------
    float
    """
    if not paths:
        raise ValueError("paths is empty")
    if not 0.0 <= s < t <= 1.0:
        raise ValueError(f"need 0 <= s < t <= 1, got s={s}, t={t}")
    if gamma <= 0.0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if p < 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    n_fine = paths[0].n_fine
    if any(mp.n_fine != n_fine for mp in paths):
        raise ValueError("all paths must share one fine grid")
    i, j = paths[0].node_index(s), paths[0].node_index(t)

    alpha = paths[0].alpha
    L = np.stack([mp.L for mp in paths])  # (M, N_f + 1, d)
    I = np.stack([mp.I for mp in paths])
    disp_x = I[:, j] - I[:, i] - (t - s) * L[:, i]
    disp_v = L[:, j] - L[:, i]
    dist = np.linalg.norm(disp_x, axis=1) ** (1.0 / (1.0 + alpha)) + np.linalg.norm(
        disp_v, axis=1
    )
    val = np.minimum(dist**gamma, 1.0)
    return float(np.mean(val**p) ** (1.0 / p))
