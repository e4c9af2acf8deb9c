"""Vertex centrality measures and their conversion to gravitational mass."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

CENTRALITY_KINDS = ("degree", "closeness", "betweenness", "uniform")

DEFAULT_MASS_FLOOR = 0.05


@dataclass(frozen=True)
class CentralityVector:
    """Per-vertex nonnegative centrality values of a named kind."""

    kind: str
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.kind not in CENTRALITY_KINDS:
            raise ValueError(f"unknown centrality kind {self.kind!r}")
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1:
            raise ValueError("centrality values must be a flat vector")
        if not np.all(np.isfinite(vals)):
            raise ValueError("centrality values must be finite")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class MassVector:
    """Per-vertex positive masses with mean 1 (up to 1e-9), as produced by normalize_mass."""

    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1:
            raise ValueError("mass values must be a flat vector")
        if vals.size:
            if not np.all(np.isfinite(vals)) or np.any(vals <= 0):
                raise ValueError("masses must be positive and finite")
            if abs(float(vals.mean()) - 1.0) > 1e-9:
                raise ValueError("mass mean must be 1 within 1e-9")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)


def degree_centrality(g: Graph) -> CentralityVector:
    """Centrality equal to the vertex degree."""
    return CentralityVector("degree", g.degrees.astype(float))


def closeness_centrality(g: Graph) -> CentralityVector:
    """Reciprocal of the mean hop distance to the other vertices of the component.

    Vertices with no reachable partner (isolated vertices) get value 0.
    """
    n = g.vertex_count
    values = np.zeros(n, dtype=float)
    adj = g.adjacency
    dist = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist.fill(-1)
        dist[s] = 0
        queue = deque([s])
        total = 0
        reached = 0
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    total += dist[w]
                    reached += 1
                    queue.append(w)
        if reached:
            values[s] = reached / total
    return CentralityVector("closeness", values)


def betweenness_centrality(g: Graph) -> CentralityVector:
    """Exact betweenness over unordered vertex pairs (Brandes accumulation).

    values[v] sums sigma_st(v) / sigma_st over unordered pairs {s, t} with
    s != t != v; pairs in different components contribute nothing. Sources
    are processed in ascending id order so results are bit-deterministic.
    """
    n = g.vertex_count
    bc = np.zeros(n, dtype=float)
    adj = g.adjacency
    for s in range(n):
        dist = [-1] * n
        sigma = [0.0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1.0
        order: list[int] = []
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                if dist[w] == dist[u] + 1:
                    sigma[w] += sigma[u]
                    preds[w].append(u)
        delta = [0.0] * n
        for w in reversed(order):
            for u in preds[w]:
                delta[u] += (sigma[u] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    # Brandes counts ordered (s, t) pairs; halve for unordered.
    bc *= 0.5
    return CentralityVector("betweenness", bc)


def uniform_centrality(g: Graph) -> CentralityVector:
    """All-ones centrality, the no-weighting baseline."""
    return CentralityVector("uniform", np.ones(g.vertex_count, dtype=float))


def compute_centrality(g: Graph, kind: str) -> CentralityVector:
    """Dispatch by kind name: degree, closeness, betweenness, or uniform."""
    if kind == "degree":
        return degree_centrality(g)
    if kind == "closeness":
        return closeness_centrality(g)
    if kind == "betweenness":
        return betweenness_centrality(g)
    if kind == "uniform":
        return uniform_centrality(g)
    raise ValueError(f"unknown centrality kind {kind!r}")


def normalize_mass(c: CentralityVector, mass_floor: float = DEFAULT_MASS_FLOOR) -> MassVector:
    """Convert a centrality vector into a mass vector with mean 1 and a floor.

    Values are divided by their mean, lifted to at least mass_floor, and the
    scale is adjusted until both properties hold together (the floor and the
    rescale interact, so a single pass is not a fixed point). An all-zero
    centrality yields uniform masses.
    """
    if not 0.0 < mass_floor <= 1.0:
        raise ValueError("mass_floor must be in (0, 1]")
    vals = np.asarray(c.values, dtype=float)
    if np.any(vals < 0):
        raise ValueError("centrality values must be nonnegative")
    n = vals.size
    if n == 0:
        return MassVector(vals)
    mean = float(vals.mean())
    if mean <= 0 or mass_floor == 1.0:
        return MassVector(np.ones(n, dtype=float))
    w = vals / mean
    for _ in range(200):
        w = np.maximum(mass_floor, w)
        m = float(w.mean())
        if abs(m - 1.0) <= 1e-12:
            break
        w = w / m
    return MassVector(np.maximum(mass_floor, w))
