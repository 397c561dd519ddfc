"""Synthetic graph models driven by the package PRNG."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams
from .graph import Graph, build_graph
from .rng import SplitMix64


def barabasi_albert(n: int, m_attach: int, seed: int = 0) -> Graph:
    """Preferential-attachment graph grown from a star on nodes 0..m_attach.

    Each arriving node draws endpoints from an urn holding every node once
    per incident edge, rejecting repeats until it has ``m_attach`` distinct
    targets. Edge count is m_attach + (n - m_attach - 1) * m_attach.
    """
    if not 1 <= m_attach < n:
        raise BadParams(f"need 1 <= m_attach < n, got m_attach={m_attach}, n={n}")
    rng = SplitMix64(seed)
    edges = [(0, i) for i in range(1, m_attach + 1)]
    urn = [x for e in edges for x in e]
    for new in range(m_attach + 1, n):
        targets: list[int] = []
        while len(targets) < m_attach:
            t = urn[rng.below(len(urn))]
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((new, t))
            urn.extend((new, t))
    return build_graph(edges, isolated=range(n))


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): pairs (i, j), i < j, in lexicographic order; edge iff uniform() < p."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise BadParams(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.uniform() < p]
    return build_graph(edges, isolated=range(n))


@dataclass(frozen=True)
class GeneratorConfig:
    model: str  # "ba" or "er"
    n: int
    m_attach: int | None = None
    p: float | None = None
    seed: int = 0

    def build(self) -> Graph:
        if self.model == "ba":
            if self.m_attach is None:
                raise BadParams("BA model needs m_attach")
            return barabasi_albert(self.n, self.m_attach, self.seed)
        if self.model == "er":
            if self.p is None:
                raise BadParams("ER model needs p")
            return erdos_renyi(self.n, self.p, self.seed)
        raise BadParams(f"unknown model {self.model!r}")
