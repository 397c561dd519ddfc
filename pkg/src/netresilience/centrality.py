"""Degree, closeness and betweenness centrality, plus edge betweenness.

Betweenness follows Brandes' accumulation: one BFS per source counting
shortest paths, then dependencies are folded back in reverse BFS order.
Pairs are unordered, so the ordered-pair totals are halved at the end.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .errors import EmptyGraph, NoEdges
from .graph import Edge, Graph


class CentralityKind(enum.Enum):
    DEGREE = "degree"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"


@dataclass(frozen=True)
class CentralityScores:
    kind: CentralityKind
    scores: dict[int, float]
    normalized: bool = True

    def __getitem__(self, node: int) -> float:
        return self.scores[node]

    def ranking(self) -> list[int]:
        """Nodes by score descending, ties by ascending id."""
        return sorted(self.scores, key=lambda u: (-rank_value(self.scores[u]), u))


def rank_value(score: float) -> float:
    # Symmetric nodes can differ by a few ulps depending on accumulation
    # order; rounding lets them tie so the id tie-break applies.
    return round(score, 9)


def degree_centrality(g: Graph) -> CentralityScores:
    if g.n == 0:
        raise EmptyGraph()
    if g.n == 1:
        return CentralityScores(CentralityKind.DEGREE, {g.nodes[0]: 0.0})
    scale = 1.0 / (g.n - 1)
    return CentralityScores(CentralityKind.DEGREE, {u: g.degree(u) * scale for u in g.nodes})


def closeness_centrality(g: Graph) -> CentralityScores:
    """Reachability-scaled closeness: (r/(n-1)) * (r/S) with r reachable nodes at total distance S."""
    if g.n == 0:
        raise EmptyGraph()
    order, _, adj = g.indexed
    n = g.n
    scores = {}
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        total = 0
        reached = 0
        while queue:
            v = queue.popleft()
            dv = dist[v] + 1
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    total += dv
                    reached += 1
                    queue.append(w)
        scores[order[s]] = (reached / (n - 1)) * (reached / total) if reached else 0.0
    return CentralityScores(CentralityKind.CLOSENESS, scores)


def _brandes(g: Graph, edges: bool):
    """Ordered-pair node (and optionally edge) dependency totals, by dense index."""
    order, index, adj = g.indexed
    n = g.n
    node_total = [0.0] * n
    edge_total: dict[tuple[int, int], float] = {}
    for s in range(n):
        # per-source partials are folded into the totals in ascending source order
        sigma = [0] * n
        dist = [-1] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma[s] = 1
        dist[s] = 0
        stack = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv = dist[v] + 1
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                if dist[w] == dv:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                c = sigma[v] * coeff
                delta[v] += c
                if edges:
                    key = (v, w) if v < w else (w, v)
                    edge_total[key] = edge_total.get(key, 0.0) + c
            if w != s:
                node_total[w] += delta[w]
    return order, node_total, edge_total


def betweenness_centrality(g: Graph, normalized: bool = True) -> CentralityScores:
    """Shortest-path betweenness over unordered pairs, endpoints excluded.

    Normalized scores divide by (n-1)(n-2)/2; graphs with fewer than three
    nodes score zero everywhere.
    """
    if g.n == 0:
        raise EmptyGraph()
    n = g.n
    order, totals, _ = _brandes(g, edges=False)
    if normalized:
        scale = 1.0 / ((n - 1) * (n - 2)) if n >= 3 else 0.0
    else:
        scale = 0.5
    return CentralityScores(
        CentralityKind.BETWEENNESS,
        {order[i]: totals[i] * scale for i in range(n)},
        normalized=normalized,
    )


def edge_betweenness(g: Graph) -> dict[Edge, float]:
    """Raw edge betweenness keyed by (low, high) node ids."""
    if g.m == 0:
        raise NoEdges()
    order, _, totals = _brandes(g, edges=True)
    out = {}
    for (i, j), value in sorted(totals.items()):
        out[(order[i], order[j])] = value * 0.5
    return out


def compute(g: Graph, kind: CentralityKind | str, normalized: bool = True) -> CentralityScores:
    kind = CentralityKind(kind)
    if kind is CentralityKind.DEGREE:
        return degree_centrality(g)
    if kind is CentralityKind.CLOSENESS:
        return closeness_centrality(g)
    return betweenness_centrality(g, normalized=normalized)
