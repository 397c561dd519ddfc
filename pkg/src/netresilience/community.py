"""Community detection: modularity, Girvan-Newman and Louvain."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .centrality import edge_betweenness
from .errors import EmptyDendrogram, IncompleteAssignment, NoEdges
from .graph import Edge, Graph, build_graph, connected_components
from .rng import sample_without_replacement

_EPS = 1e-12


def canonical_labels(assignment: Mapping[int, int]) -> dict[int, int]:
    """Relabel communities 0..k-1 in order of their smallest member."""
    relabel: dict[int, int] = {}
    out = {}
    for u in sorted(assignment):
        c = assignment[u]
        if c not in relabel:
            relabel[c] = len(relabel)
        out[u] = relabel[c]
    return out


@dataclass(frozen=True)
class Partition:
    assignment: dict[int, int]
    modularity: float

    @property
    def community_count(self) -> int:
        return len(set(self.assignment.values()))

    @property
    def communities(self) -> list[frozenset[int]]:
        groups = defaultdict(set)
        for u, c in self.assignment.items():
            groups[c].add(u)
        return [frozenset(groups[c]) for c in sorted(groups)]

    @classmethod
    def from_assignment(cls, g: Graph, assignment: Mapping[int, int]) -> "Partition":
        labels = canonical_labels(assignment)
        return cls(labels, modularity(g, labels))

    @classmethod
    def from_communities(cls, g: Graph, communities) -> "Partition":
        return cls.from_assignment(g, {u: i for i, c in enumerate(communities) for u in c})


def modularity(g: Graph, assignment: Mapping[int, int]) -> float:
    """Newman-Girvan modularity: sum over communities of L_c/m - (d_c/2m)^2."""
    if g.m == 0:
        raise NoEdges()
    missing = set(g.nodes) - assignment.keys()
    if missing:
        raise IncompleteAssignment(missing)
    inner: dict[int, int] = defaultdict(int)
    degree: dict[int, int] = defaultdict(int)
    for u in g.nodes:
        cu = assignment[u]
        degree[cu] += g.degree(u)
    for u, v in g.edges:
        if assignment[u] == assignment[v]:
            inner[assignment[u]] += 1
    m = g.m
    return sum(inner[c] / m - (degree[c] / (2 * m)) ** 2 for c in sorted(degree))


# -- Girvan-Newman -----------------------------------------------------------

@dataclass(frozen=True)
class Snapshot:
    step: int  # number of edges removed so far
    removed_edge: Edge
    partition: Partition


@dataclass
class Dendrogram:
    removed: list[Edge] = field(default_factory=list)
    snapshots: list[Snapshot] = field(default_factory=list)

    def __len__(self):
        return len(self.snapshots)


def _top_edge(scores: Mapping[Edge, float]) -> Edge:
    best = max(scores.values())
    tol = _EPS * max(1.0, best) * 1e3
    return min(e for e, s in scores.items() if s >= best - tol)


def girvan_newman(g: Graph, max_splits: int | None = None) -> Dendrogram:
    """Divisive clustering by repeatedly deleting the highest-betweenness edge.

    A snapshot is recorded every time the component count rises. Only the
    component that lost an edge has its edge betweenness recomputed, since
    scores in other components cannot change.
    """
    if g.m == 0:
        raise NoEdges()
    nodes = g.nodes
    edges = set(g.edges)
    comp_of: dict[int, int] = {}
    scores: dict[int, dict[Edge, float]] = {}

    def rescore(members):
        sub = build_graph((e for e in edges if e[0] in members), isolated=members)
        label = min(members)
        for u in members:
            comp_of[u] = label
        scores[label] = edge_betweenness(sub) if sub.m else {}

    for comp in connected_components(g):
        rescore(comp)
    dendro = Dendrogram()
    while edges:
        if max_splits is not None and len(dendro.snapshots) >= max_splits:
            break
        pool = {e: s for comp in scores.values() for e, s in comp.items()}
        edge = _top_edge(pool)
        edges.discard(edge)
        dendro.removed.append(edge)
        old = comp_of[edge[0]]
        members = {u for u in nodes if comp_of[u] == old}
        del scores[old]
        residual = build_graph((e for e in edges if e[0] in members), isolated=members)
        parts = connected_components(residual)
        for part in parts:
            rescore(part)
        if parts.count > 1:
            partition = Partition.from_assignment(g, comp_of)
            dendro.snapshots.append(Snapshot(len(dendro.removed), edge, partition))
    return dendro


def best_partition_by_modularity(g: Graph, dendrogram: Dendrogram) -> Partition:
    """Snapshot with the highest Q; ties go to fewer communities, then the earlier cut."""
    if not dendrogram.snapshots:
        raise EmptyDendrogram()
    best = dendrogram.snapshots[0].partition
    for snap in dendrogram.snapshots[1:]:
        p = snap.partition
        if p.modularity > best.modularity + _EPS:
            best = p
        elif abs(p.modularity - best.modularity) <= _EPS and p.community_count < best.community_count:
            best = p
    return best


# -- Louvain -----------------------------------------------------------------

class _WeightedGraph:
    """Aggregated multigraph: integer weights, self-loops hold internal edges."""

    def __init__(self, n: int):
        self.adj: list[dict[int, int]] = [dict() for _ in range(n)]
        self.loops = [0] * n

    @property
    def n(self):
        return len(self.adj)

    def degree(self, i):
        return sum(self.adj[i].values()) + 2 * self.loops[i]


def _one_level(wg: _WeightedGraph, m: int, order: list[int]) -> tuple[list[int], bool]:
    """Local moving phase. Returns (community per node, whether anything moved)."""
    n = wg.n
    comm = list(range(n))
    k = [wg.degree(i) for i in range(n)]
    tot = list(k)
    two_m = 2.0 * m
    improved = False
    while True:
        moved = False
        for i in order:
            old = comm[i]
            links: dict[int, int] = defaultdict(int)
            for j, w in wg.adj[i].items():
                links[comm[j]] += w
            tot[old] -= k[i]
            # gain of inserting i into c, up to a constant factor of 1/m
            stay = links.get(old, 0) - tot[old] * k[i] / two_m
            best_gain = max((links[c] - tot[c] * k[i] / two_m for c in links), default=stay)
            target = old
            if best_gain > stay + _EPS:
                target = min(c for c in links if links[c] - tot[c] * k[i] / two_m >= best_gain - _EPS)
            tot[target] += k[i]
            if target != old:
                comm[i] = target
                moved = True
                improved = True
        if not moved:
            break
    return comm, improved


def _aggregate(wg: _WeightedGraph, comm: list[int]) -> tuple[_WeightedGraph, list[int]]:
    labels = {c: i for i, c in enumerate(sorted(set(comm)))}
    dense = [labels[c] for c in comm]
    agg = _WeightedGraph(len(labels))
    for i in range(wg.n):
        ci = dense[i]
        agg.loops[ci] += wg.loops[i]
        for j, w in wg.adj[i].items():
            cj = dense[j]
            if ci == cj:
                if i < j:
                    agg.loops[ci] += w
            else:
                agg.adj[ci][cj] = agg.adj[ci].get(cj, 0) + w
    return agg, dense


def louvain(g: Graph, seed: int = 0, shuffle: bool = False) -> Partition:
    """Louvain modularity optimisation (local moving + aggregation).

    Nodes are scanned in ascending id order and ties go to the smallest
    community label, so the default result is fully deterministic. With
    ``shuffle=True`` each level scans in an order drawn from ``seed``.
    The returned Q is read off the final aggregated graph.
    """
    if g.m == 0:
        raise NoEdges()
    order, index, adj = g.indexed
    wg = _WeightedGraph(g.n)
    for i, nbrs in enumerate(adj):
        wg.adj[i] = {j: 1 for j in nbrs}
    m = g.m
    member = list(range(g.n))  # original node index -> current super-node
    level = 0
    while True:
        scan = list(range(wg.n))
        if shuffle:
            scan = sample_without_replacement(scan, len(scan), seed + level)
        comm, improved = _one_level(wg, m, scan)
        if not improved:
            break
        wg, dense = _aggregate(wg, comm)
        member = [dense[c] for c in member]
        level += 1
    q = sum(wg.loops[c] / m - (wg.degree(c) / (2.0 * m)) ** 2 for c in range(wg.n))
    assignment = canonical_labels({order[i]: member[i] for i in range(g.n)})
    return Partition(assignment, q)
