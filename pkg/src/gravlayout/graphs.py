"""Undirected simple graphs: construction, edge-list/JSON parsing, BFS primitives."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

UNREACHABLE = -1


class GraphParseError(ValueError):
    """Raised when graph input text is malformed."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertex ids 0..vertex_count-1.

    Edges are stored canonically: each pair has u < v, the tuple is sorted
    lexicographically, and there are no duplicates or self-loops. Use
    :meth:`from_edges` to build a graph from arbitrary pair iterables.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) is not canonical for {self.vertex_count} vertices")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and unique")
            prev = (u, v)
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("labels length must equal vertex_count")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges,
        labels: tuple[str, ...] | None = None,
    ) -> "Graph":
        """Build a graph, normalizing edge orientation and collapsing duplicates."""
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        return cls(vertex_count, tuple(sorted(canon)), labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor ids per vertex, each tuple in ascending order."""
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        deg.setflags(write=False)
        return deg

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) int64 array in canonical order."""
        arr = np.asarray(self.edges, dtype=np.int64).reshape(len(self.edges), 2)
        arr.setflags(write=False)
        return arr

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class DistanceVector:
    """Hop counts from a BFS source; UNREACHABLE (-1) marks unreachable vertices."""

    source: int
    dist: np.ndarray


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Each non-empty, non-comment line holds one or two whitespace-separated
    vertex tokens: two tokens declare an edge, a single token declares an
    isolated vertex. Lines whose first non-blank character is '#' are
    comments. Tokens are mapped to dense ids in first-appearance order.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def intern(token: str) -> int:
        if token not in ids:
            ids[token] = len(ids)
        return ids[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            intern(tokens[0])
        elif len(tokens) == 2:
            a, b = tokens
            if a == b:
                raise GraphParseError(f"line {lineno}: self-loop at vertex '{a}'")
            edges.append((intern(a), intern(b)))
        else:
            raise GraphParseError(f"line {lineno}: expected 1 or 2 tokens, got {len(tokens)}")
    return Graph.from_edges(len(ids), edges, labels=tuple(ids))


def serialize_edge_list(g: Graph) -> str:
    """Render a graph to edge-list text.

    Every vertex is declared first as a single-token line (in id order) so
    that re-parsing assigns identical dense ids; edges follow in canonical
    order. parse(serialize(parse(x))) == parse(x) holds by construction.
    """
    lines = [g.label_of(v) for v in range(g.vertex_count)]
    lines.extend(f"{g.label_of(u)} {g.label_of(v)}" for u, v in g.edges)
    return "\n".join(lines) + ("\n" if lines else "")


def parse_graph_json(text: str) -> Graph:
    """Parse the JSON graph format: {"vertices": [names], "edges": [[i, j], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise GraphParseError('JSON graph must be an object with "vertices" and "edges"')
    names = [str(x) for x in obj["vertices"]]
    n = len(names)
    edges = []
    for pair in obj["edges"]:
        if len(pair) != 2:
            raise GraphParseError(f"edge entry {pair!r} must have two indices")
        i, j = int(pair[0]), int(pair[1])
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"edge {pair!r} references a missing vertex")
        if i == j:
            raise GraphParseError(f"self-loop at vertex '{names[i]}'")
        edges.append((i, j))
    return Graph.from_edges(n, edges, labels=tuple(names))


def serialize_graph_json(g: Graph) -> str:
    obj = {
        "vertices": [g.label_of(v) for v in range(g.vertex_count)],
        "edges": [[u, v] for u, v in g.edges],
    }
    return json.dumps(obj, indent=2) + "\n"


def bfs_distances(g: Graph, s: int) -> DistanceVector:
    """Exact unweighted shortest-path hop counts from s; unreachable marked -1."""
    if not (0 <= s < g.vertex_count):
        raise ValueError(f"source {s} out of range for {g.vertex_count} vertices")
    dist = np.full(g.vertex_count, UNREACHABLE, dtype=np.int64)
    dist[s] = 0
    queue = deque([s])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    dist.setflags(write=False)
    return DistanceVector(source=s, dist=dist)


def connected_components(g: Graph) -> np.ndarray:
    """Per-vertex component labels 0..C-1, assigned in ascending order of first vertex."""
    labels = np.full(g.vertex_count, -1, dtype=np.int64)
    adj = g.adjacency
    count = 0
    for start in range(g.vertex_count):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if labels[w] == -1:
                    labels[w] = count
                    queue.append(w)
        count += 1
    labels.setflags(write=False)
    return labels
