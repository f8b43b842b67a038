"""Shear-transported Euler scheme for the kinetic SDE

    dX_t = V_t dt,      dV_t = b(X_t, V_t) dt + dL_t,

with L the isotropic alpha-stable driver.  One step of size h = 1/n freezes
the drift argument at the last grid node and transports it along the free
stream: with t_k = k/n,

    V_{k+1} = V_k + q_k + (L_{t_{k+1}} - L_{t_k}),
    X_{k+1} = X_k + h V_k + (I_{t_{k+1}} - I_{t_k} - h L_{t_k}) + Q_k,

    q_k = integral_0^h b(X_k + u V_k, V_k) du,
    Q_k = integral_0^h (h - u) b(X_k + u V_k, V_k) du,

where I is the master path's running integral of L.  Both drift integrals
are evaluated by a composite midpoint rule with ``m_quad`` sub-nodes; the
default m_quad = N_f / n places the sub-nodes at fine-grid midpoints, so
refining n only *removes* quadrature nodes that coarse and fine levels share.

Internally the state is carried as the drift accumulators

    A_k = sum_{j<k} q_j,          C_k = sum_{j<k} (h A_j + Q_j),

from which  V_k = eta + A_k + L_{t_k}  and  X_k = xi + t_k eta + C_k + I_{t_k}.
This is algebraically the same recursion, but it keeps the noise and the
drift contributions in separate floating-point channels: with zero drift the
accumulators stay exactly 0 and the scheme reproduces the exact solution
bit-for-bit at every node, at every resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .drifts import DriftSpec, _eval_xv
from .kinetic_path import MasterPath, PhasePoint

__all__ = ["SchemeConfig", "Trajectory", "run_euler", "run_reference", "exact_solution"]


@dataclass(frozen=True)
class SchemeConfig:
    """Resolution of one scheme run.

    Parameters
    ----------
    n : int
        Number of scheme steps over [0, 1]; must divide the master grid.
    m_quad : int, optional
        Midpoint sub-nodes per step for the drift integrals; ``None`` means
        the master-aligned default N_f / n.
    """

    n: int
    m_quad: int | None = None

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if self.m_quad is not None and (int(self.m_quad) != self.m_quad or self.m_quad < 1):
            raise ValueError(f"m_quad must be a positive integer, got {self.m_quad}")


@dataclass
class Trajectory:
    """Scheme output on the uniform n-grid: nodes t_k = k/n, k = 0..n."""

    n: int
    times: np.ndarray = field(repr=False)
    x: np.ndarray = field(repr=False)  # (n + 1, d)
    v: np.ndarray = field(repr=False)  # (n + 1, d)
    w: np.ndarray = field(repr=False)  # drift-only velocity V - L, (n + 1, d)

    @property
    def dim(self) -> int:
        return self.x.shape[1]

    def phase_point(self, k: int) -> PhasePoint:
        return PhasePoint(self.x[k], self.v[k])


def _euler_core(spec, L_nodes, I_nodes, xi, eta, n, m_quad, keep_stride=1):
    """Vectorized scheme recursion over arbitrary leading batch axes.

    L_nodes, I_nodes: (..., n+1, d) noise restricted to the scheme grid;
    xi, eta: (..., d).  Returns (X, V, W), each (..., n/keep_stride + 1, d):
    every node is computed, but only every keep_stride-th one is stored
    (keep_stride must divide n; used to keep long reference runs small).
    """
    if n % keep_stride != 0:
        raise ValueError(f"keep_stride = {keep_stride} does not divide n = {n}")
    h = 1.0 / n
    u = (np.arange(m_quad) + 0.5) * (h / m_quad)  # midpoints, shape (m,)
    w_node = h / m_quad
    w_pos = ((h - u) * w_node)[:, None]  # weights of the (h - u) integral

    lead = np.broadcast_shapes(L_nodes.shape[:-2], xi.shape[:-1], eta.shape[:-1])
    d = L_nodes.shape[-1]
    n_keep = n // keep_stride
    X = np.empty(lead + (n_keep + 1, d))
    V = np.empty(lead + (n_keep + 1, d))
    W = np.empty(lead + (n_keep + 1, d))
    A = np.zeros(lead + (d,))
    C = np.zeros(lead + (d,))

    for k in range(n + 1):
        x_k = xi + (k * h) * eta + C + I_nodes[..., k, :]
        w_k = eta + A
        v_k = w_k + L_nodes[..., k, :]
        if k % keep_stride == 0:
            X[..., k // keep_stride, :] = x_k
            V[..., k // keep_stride, :] = v_k
            W[..., k // keep_stride, :] = w_k
        if k == n:
            break
        bvals = _eval_xv(spec, x_k[..., None, :] + u[:, None] * v_k[..., None, :],
                         v_k[..., None, :])  # (..., m, d)
        C = C + h * A + np.sum(w_pos * bvals, axis=-2)
        A = A + w_node * np.sum(bvals, axis=-2)
    return X, V, W


def run_euler(
    cfg: SchemeConfig, master: MasterPath, spec: DriftSpec, z0: PhasePoint
) -> Trajectory:
    """Run the scheme at resolution cfg.n on one master path.

    Parameters
    ----------
    cfg : SchemeConfig
    master : MasterPath
        Noise realization; cfg.n must divide master.n_fine.
    spec : DriftSpec
        Drift field, same dimension as the path.
    z0 : PhasePoint
        Initial condition (xi, eta).

    Returns
    -------
    Trajectory
    """
    if master.n_fine % cfg.n != 0:
        raise ValueError(f"n = {cfg.n} does not divide the master grid N_f = {master.n_fine}")
    if not (spec.dim == master.dim == z0.dim):
        raise ValueError(
            f"dimension mismatch: drift {spec.dim}, path {master.dim}, z0 {z0.dim}"
        )
    stride = master.n_fine // cfg.n
    m_quad = cfg.m_quad if cfg.m_quad is not None else stride
    X, V, W = _euler_core(
        spec, master.L[::stride], master.I[::stride], z0.x, z0.v, cfg.n, m_quad
    )
    times = np.arange(cfg.n + 1) / cfg.n
    return Trajectory(n=cfg.n, times=times, x=X, v=V, w=W)


def run_reference(
    master: MasterPath, spec: DriftSpec, z0: PhasePoint, m_quad: int = 1
) -> Trajectory:
    """Finest-grid run (n = N_f) used as the coupling reference."""
    return run_euler(SchemeConfig(n=master.n_fine, m_quad=m_quad), master, spec, z0)


def exact_solution(
    spec: DriftSpec, master: MasterPath, i: int, z0: PhasePoint | None = None
) -> PhasePoint:
    """Closed-form solution at fine node i for the exactly integrable drifts.

    Only ``zero`` and ``constant`` drifts admit one:

        zero:      X_t = xi + t eta + I_t,              V_t = eta + L_t
        constant:  X_t = xi + t eta + c t^2/2 + I_t,    V_t = eta + c t + L_t
    """
    if not 0 <= i <= master.n_fine:
        raise ValueError(f"node index {i} outside the master grid")
    if z0 is None:
        z0 = PhasePoint(np.zeros(spec.dim), np.zeros(spec.dim))
    t = master.times[i]
    if spec.kind == "zero":
        return PhasePoint(z0.x + t * z0.v + master.I[i], z0.v + master.L[i])
    if spec.kind == "constant":
        return PhasePoint(
            z0.x + t * z0.v + 0.5 * t * t * spec.c + master.I[i],
            z0.v + t * spec.c + master.L[i],
        )
    raise ValueError(f"no closed-form solution for drift kind {spec.kind!r}")
