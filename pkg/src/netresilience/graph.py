"""Undirected simple graph, traversal, components and path-length metrics."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import Disconnected, EmptyGraph, SelfLoop, UnknownNode
from .rng import sample_without_replacement

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph over integer node ids.

    Build instances with :func:`build_graph`; the constructor trusts its input.
    """

    def __init__(self, adj: Mapping[int, frozenset[int]], m: int):
        self._adj = dict(adj)
        self._m = m

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, u) -> bool:
        return u in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.nodes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash((self.nodes, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def nodes(self) -> tuple[int, ...]:
        """Node ids in ascending order."""
        return tuple(sorted(self._adj))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as (low, high) pairs, lexicographically sorted."""
        return tuple(sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v))

    def neighbors(self, u: int) -> frozenset[int]:
        try:
            return self._adj[u]
        except KeyError:
            raise UnknownNode(u) from None

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    @cached_property
    def indexed(self) -> tuple[tuple[int, ...], dict[int, int], list[list[int]]]:
        """Dense view: (ids by index, id -> index, sorted neighbor index lists).

        Hot loops in centrality and path metrics run on this view.
        """
        order = self.nodes
        index = {u: i for i, u in enumerate(order)}
        adj = [sorted(index[v] for v in self._adj[u]) for u in order]
        return order, index, adj

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise UnknownNode(min(missing))
        adj = {u: self._adj[u] & keep for u in keep}
        m = sum(len(nbrs) for nbrs in adj.values()) // 2
        return Graph(adj, m)

    def without(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        missing = drop - self._adj.keys()
        if missing:
            raise UnknownNode(min(missing))
        return self.subgraph(self._adj.keys() - drop)


def build_graph(edges: Iterable[tuple[int, int]] = (), isolated: Iterable[int] | None = None) -> Graph:
    """Simple undirected graph from node pairs; duplicates and flipped pairs collapse."""
    adj: dict[int, set[int]] = {}
    for u in isolated or ():
        adj.setdefault(u, set())
    for u, v in edges:
        if u == v:
            raise SelfLoop(u)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    m = sum(len(s) for s in adj.values()) // 2
    return Graph({u: frozenset(s) for u, s in adj.items()}, m)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[frozenset[int], ...]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    def __iter__(self):
        return iter(self.components)


def connected_components(g: Graph) -> ComponentDecomposition:
    """Components ordered by size descending, then by smallest member."""
    seen: set[int] = set()
    comps = []
    for s in g.nodes:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        # s is the smallest member since roots are visited in ascending order
        comps.append((s, frozenset(comp)))
    comps.sort(key=lambda t: (-len(t[1]), t[0]))
    return ComponentDecomposition(tuple(c for _, c in comps))


def largest_component_subgraph(g: Graph) -> Graph:
    if g.n == 0:
        raise EmptyGraph()
    return g.subgraph(connected_components(g).components[0])


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop counts from ``source`` to every reachable node (source included at 0)."""
    if source not in g:
        raise UnknownNode(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = du
                queue.append(v)
    return dist


def _csr(g: Graph) -> csr_matrix:
    _, _, adj = g.indexed
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum([len(a) for a in adj], out=indptr[1:])
    indices = np.fromiter((j for a in adj for j in a), dtype=np.int32, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.int8)
    return csr_matrix((data, indices, indptr), shape=(g.n, g.n))


def average_path_length(
    g: Graph,
    mode: str = "exact",
    k_sources: int = 64,
    seed: int = 0,
) -> float:
    """Mean shortest-path hop count over node pairs of a connected graph.

    ``mode="sampled"`` averages distances from ``k_sources`` sources drawn
    with the package PRNG; it is an unbiased estimate of the exact mean and
    falls back to the exact value when ``k_sources >= n``.
    """
    if g.n == 0:
        raise EmptyGraph()
    if mode not in ("exact", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    if n == 1:
        return 0.0
    sources = None
    if mode == "sampled" and k_sources < n:
        if k_sources < 1:
            raise ValueError("k_sources must be >= 1")
        sources = sorted(sample_without_replacement(range(n), k_sources, seed))
    dist = shortest_path(_csr(g), method="D", directed=False, unweighted=True, indices=sources)
    if np.isinf(dist).any():
        raise Disconnected(connected_components(g).count)
    # distances are small integers; sum exactly before the single division
    total = int(dist.astype(np.int64).sum())
    rows = n if sources is None else len(sources)
    return total / (rows * (n - 1))
