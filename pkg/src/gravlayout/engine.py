"""Iterative force simulation with centrality-weighted gravity.

Each iteration computes a net impulse per vertex from three forces, all
evaluated against the same position snapshot (synchronous update):

  repulsion   f_r(u, v) = (k^2 / |P[u] - P[v]|^2) (P[v] - P[u])   from every other vertex
  attraction  f_a(u, v) = (|P[u] - P[v]| / k) (P[u] - P[v])       along each incident edge
  gravity     f_g(v)    = gamma_t M[v] (xi - P[v])                toward the centroid xi

The impulse is clamped to magnitude i_max (direction preserved), scaled by
sigma, and applied as a displacement. The gravity coefficient gamma_t grows
over iterations according to a schedule, which is what lets drawings first
untangle under the classical forces and only then compact toward the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .centrality import MassVector
from .graphs import Graph

TWO_PI = 2.0 * math.pi

# Pairs closer than JITTER_TRIGGER * k are separated by a deterministic nudge
# of magnitude JITTER_MAGNITUDE * k before forces are evaluated.
JITTER_TRIGGER = 1e-6
JITTER_MAGNITUDE = 1e-3


class Schedule(Enum):
    """How the gravity coefficient evolves over iterations."""

    NONE = "none"
    CONSTANT = "constant"
    STEPPED_ITERATION = "stepped"
    STEPPED_EQUILIBRIUM = "equilibrium"


@dataclass(frozen=True)
class LayoutConfig:
    """Simulation parameters.

    k is the natural edge length: an isolated edge settles at length k where
    repulsion k^2/d and attraction d^2/k balance. Impulses are capped at
    i_max and scaled by sigma, so no vertex moves more than sigma * i_max
    per iteration. The stepped schedule raises gamma by gamma_step every
    block_len iterations (or at each approximate equilibrium), capped at
    gamma_max.
    """

    k: float = 80.0
    i_max: float = 10.0
    sigma: float = 0.1
    gamma_max: float = 2.5
    schedule: Schedule = Schedule.STEPPED_ITERATION
    gamma_const: float = 0.0
    block_len: int = 200
    gamma_step: float = 0.2
    equilibrium_eps: float = 1.0
    max_iterations: int = 3000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k <= 0 or self.i_max <= 0 or self.sigma <= 0:
            raise ValueError("k, i_max, and sigma must be positive")
        if self.gamma_max < 0 or self.gamma_const < 0 or self.gamma_step <= 0:
            raise ValueError("gamma_max and gamma_const must be >= 0, gamma_step > 0")
        if self.block_len < 1 or self.max_iterations < 1:
            raise ValueError("block_len and max_iterations must be >= 1")
        if self.equilibrium_eps <= 0:
            raise ValueError("equilibrium_eps must be positive")


@dataclass(frozen=True)
class LayoutState:
    """Positions plus iteration counter, current gamma, and last max impulse."""

    positions: np.ndarray
    t: int = 0
    gamma: float = 0.0
    last_max_impulse: float = math.inf


def terminal_gamma(config: LayoutConfig) -> float:
    """The gravity level a run is heading for under its schedule."""
    if config.schedule is Schedule.NONE:
        return 0.0
    if config.schedule is Schedule.CONSTANT:
        return config.gamma_const
    return config.gamma_max


def initialize_positions(g: Graph, seed: int, k: float) -> np.ndarray:
    """Uniform random positions in the square of side k * sqrt(|V|) centered at origin."""
    n = g.vertex_count
    rng = np.random.default_rng(seed)
    half = 0.5 * k * math.sqrt(n)
    return rng.uniform(-half, half, size=(n, 2))


def repulsive_force(pu, pv, k: float) -> np.ndarray:
    """Force on v pushing it away from u; magnitude k^2 / |pu - pv|."""
    pu = np.asarray(pu, dtype=float)
    pv = np.asarray(pv, dtype=float)
    diff = pv - pu
    d2 = float(diff @ diff)
    if d2 == 0.0:
        raise ValueError("repulsive_force requires distinct points (jitter upstream)")
    return (k * k / d2) * diff


def attractive_force(pu, pv, k: float) -> np.ndarray:
    """Force on v pulling it toward u; magnitude |pu - pv|^2 / k."""
    pu = np.asarray(pu, dtype=float)
    pv = np.asarray(pv, dtype=float)
    diff = pu - pv
    return (math.sqrt(float(diff @ diff)) / k) * diff


def centroid(positions) -> np.ndarray:
    """Arithmetic mean of the positions."""
    pos = np.asarray(positions, dtype=float)
    if pos.size == 0:
        raise ValueError("centroid of no points is undefined")
    return pos.mean(axis=0)


def gravity_force(pv, xi, mass: float, gamma: float) -> np.ndarray:
    """Force gamma * mass * (xi - pv) pulling v toward the centroid."""
    pv = np.asarray(pv, dtype=float)
    xi = np.asarray(xi, dtype=float)
    return gamma * mass * (xi - pv)


def schedule_gamma(t: int, state: LayoutState, config: LayoutConfig) -> float:
    """Gravity coefficient for iteration t under the configured schedule."""
    if config.schedule is Schedule.NONE:
        return 0.0
    if config.schedule is Schedule.CONSTANT:
        return config.gamma_const
    if config.schedule is Schedule.STEPPED_ITERATION:
        return min(config.gamma_max, config.gamma_step * (t // config.block_len))
    # Stepped by equilibrium: raise gamma one step whenever the previous
    # iteration's strongest impulse dropped below the equilibrium tolerance.
    gamma = state.gamma
    if state.last_max_impulse < config.equilibrium_eps:
        gamma = min(config.gamma_max, gamma + config.gamma_step)
    return gamma


def _mass_values(mass, n: int) -> np.ndarray:
    vals = mass.values if isinstance(mass, MassVector) else np.asarray(mass, dtype=float)
    if vals.shape != (n,):
        raise ValueError(f"mass vector length {vals.shape} does not match {n} vertices")
    return vals


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def _jitter_vector(seed: int, t: int, v: int, k: float) -> np.ndarray:
    h = _splitmix64(_splitmix64(_splitmix64(seed & 0xFFFFFFFFFFFFFFFF) ^ t) ^ v)
    angle = TWO_PI * (h / 2.0**64)
    return JITTER_MAGNITUDE * k * np.array([math.cos(angle), math.sin(angle)])


class _StepBuffers:
    """Scratch arrays reused across the iterations of one run. The math is
    identical whether buffers are fresh or reused; only allocations differ."""

    __slots__ = ("gram", "r2", "colsum", "wpos", "close", "imp")

    def __init__(self, n: int) -> None:
        self.gram = np.empty((n, n))
        self.r2 = np.empty(n)
        self.colsum = np.empty(n)
        self.wpos = np.empty((n, 2))
        self.close = np.empty((n, n), dtype=bool)
        self.imp = np.empty((n, 2))


def _pairwise_d2(pos: np.ndarray, buf: _StepBuffers) -> np.ndarray:
    """Squared pairwise distances via |a|^2 + |b|^2 - 2 a.b, written into buf.gram.

    The Gram decomposition avoids the (n, n, 2) difference tensor. Cancellation
    can make tiny distances inexact (or slightly negative, clamped here), which
    is harmless: forces at that range are clamped and the jitter threshold only
    needs order-of-magnitude accuracy.
    """
    np.einsum("vc,vc->v", pos, pos, out=buf.r2)
    np.einsum("uc,vc->uv", pos, pos, out=buf.gram)
    np.multiply(buf.gram, -2.0, out=buf.gram)
    np.add(buf.gram, buf.r2[:, None], out=buf.gram)
    np.add(buf.gram, buf.r2[None, :], out=buf.gram)
    np.maximum(buf.gram, 0.0, out=buf.gram)
    return buf.gram


def _separate_coincident(
    pos: np.ndarray,
    k: float,
    seed: int,
    t: int,
    frozen: np.ndarray,
    buf: _StepBuffers,
) -> np.ndarray:
    """Nudge near-coincident vertices apart in place; return the d2 matrix."""
    thresh2 = (JITTER_TRIGGER * k) ** 2
    for _ in range(8):
        d2 = _pairwise_d2(pos, buf)
        np.less(d2, thresh2, out=buf.close)
        np.fill_diagonal(buf.close, False)
        if not buf.close.any():
            return d2
        moved = set()
        iu, iv = np.nonzero(buf.close)
        for u, v in zip(iu.tolist(), iv.tolist()):
            if u >= v:
                continue
            target = v if not frozen[v] else (u if not frozen[u] else None)
            if target is None or target in moved:
                continue
            pos[target] += _jitter_vector(seed, t, target, k)
            moved.add(target)
        if not moved:
            return d2
    return _pairwise_d2(pos, buf)


def _net_impulses(
    pos: np.ndarray,
    edge_array: np.ndarray,
    mass_vals: np.ndarray,
    k: float,
    gamma: float,
    d2: np.ndarray,
    buf: _StepBuffers,
) -> np.ndarray:
    """All per-vertex impulses from one snapshot. Overwrites d2 with weights.

    The repulsion sum over u of w[u, v] (pos[v] - pos[u]) is factored as
    pos[v] * colsum[v] - (w^T pos)[v], avoiding any (n, n, 2) intermediate.
    """
    # Floor well below the jitter trigger: real pairs are kept apart upstream,
    # this only guards coincident frozen pairs whose impulses are discarded.
    np.maximum(d2, (1e-9 * k) ** 2, out=d2)
    np.divide(k * k, d2, out=d2)
    np.fill_diagonal(d2, 0.0)
    np.sum(d2, axis=0, out=buf.colsum)
    np.einsum("uv,uc->vc", d2, pos, out=buf.wpos)
    imp = buf.imp
    np.multiply(pos, buf.colsum[:, None], out=imp)
    imp -= buf.wpos
    if edge_array.shape[0]:
        eu = edge_array[:, 0]
        ev = edge_array[:, 1]
        evec = pos[eu] - pos[ev]
        d = np.sqrt(np.einsum("ec,ec->e", evec, evec))
        pull = (d / k)[:, None] * evec
        np.add.at(imp, ev, pull)
        np.add.at(imp, eu, -pull)
    xi = pos.mean(axis=0)
    imp += gamma * mass_vals[:, None] * (xi - pos)
    return imp


def net_impulse(v: int, state: LayoutState, g: Graph, mass, config: LayoutConfig) -> np.ndarray:
    """Reference per-vertex impulse: repulsion from every other vertex,
    attraction from each neighbor, one gravity term, summed in ascending
    vertex-id order. Assumes positions already separated (no coincidences).
    """
    if not (0 <= v < g.vertex_count):
        raise ValueError(f"vertex {v} out of range")
    pos = state.positions
    mass_vals = _mass_values(mass, g.vertex_count)
    total = np.zeros(2)
    for u in range(g.vertex_count):
        if u != v:
            total += repulsive_force(pos[u], pos[v], config.k)
    for u in g.adjacency[v]:
        total += attractive_force(pos[u], pos[v], config.k)
    total += gravity_force(pos[v], centroid(pos), float(mass_vals[v]), state.gamma)
    return total


def _advance(
    state: LayoutState,
    g: Graph,
    mass_vals: np.ndarray,
    config: LayoutConfig,
    frozen_mask: np.ndarray,
    buf: _StepBuffers,
) -> LayoutState:
    pos = np.array(state.positions, dtype=float)
    t_next = state.t + 1
    gamma = schedule_gamma(t_next, state, config)
    d2 = _separate_coincident(pos, config.k, config.seed, t_next, frozen_mask, buf)
    imp = _net_impulses(pos, g.edge_array, mass_vals, config.k, gamma, d2, buf)
    mag = np.sqrt(np.einsum("vc,vc->v", imp, imp))
    movable = ~frozen_mask
    max_impulse = float(mag[movable].max()) if movable.any() else 0.0
    scale = config.sigma * np.minimum(1.0, config.i_max / np.maximum(mag, 1e-300))
    pos[movable] += (imp * scale[:, None])[movable]
    return LayoutState(pos, t_next, gamma, max_impulse)


def _frozen_mask(frozen, n: int) -> np.ndarray:
    if frozen is None:
        return np.zeros(n, dtype=bool)
    mask = np.asarray(frozen, dtype=bool)
    if mask.shape != (n,):
        raise ValueError(f"frozen mask length {mask.shape} does not match {n} vertices")
    return mask


def step(
    state: LayoutState,
    g: Graph,
    mass,
    config: LayoutConfig,
    frozen: np.ndarray | None = None,
) -> LayoutState:
    """One synchronous iteration: update gamma, separate coincident pairs,
    compute all impulses from the snapshot, then displace every movable
    vertex by sigma * (impulse clamped to i_max).
    """
    n = g.vertex_count
    pos = np.asarray(state.positions, dtype=float)
    if pos.shape != (n, 2):
        raise ValueError(f"positions shape {pos.shape} does not match {n} vertices")
    t_next = state.t + 1
    gamma = schedule_gamma(t_next, state, config)
    if n == 0:
        return LayoutState(pos.copy(), t_next, gamma, 0.0)
    mass_vals = _mass_values(mass, n)
    return _advance(state, g, mass_vals, config, _frozen_mask(frozen, n), _StepBuffers(n))


def run_layout(
    g: Graph,
    mass,
    config: LayoutConfig,
    *,
    initial: np.ndarray | None = None,
    frozen: np.ndarray | None = None,
) -> np.ndarray:
    """Run the simulation to completion and return final positions.

    Iterates until max_iterations, stopping early once gamma has reached the
    schedule's terminal value and the strongest pre-clamp impulse has dropped
    below equilibrium_eps. Fully deterministic for identical inputs, and
    step-for-step identical to iterating :func:`step` by hand.
    """
    if initial is None:
        pos = initialize_positions(g, config.seed, config.k)
    else:
        pos = np.array(initial, dtype=float)
        if pos.shape != (g.vertex_count, 2):
            raise ValueError("initial positions must have shape (|V|, 2)")
    n = g.vertex_count
    if n == 0:
        return pos
    mass_vals = _mass_values(mass, n)
    frozen_mask = _frozen_mask(frozen, n)
    buf = _StepBuffers(n)
    state = LayoutState(positions=pos)
    target = terminal_gamma(config)
    while state.t < config.max_iterations:
        state = _advance(state, g, mass_vals, config, frozen_mask, buf)
        if state.gamma >= target - 1e-12 and state.last_max_impulse < config.equilibrium_eps:
            break
    return state.positions
