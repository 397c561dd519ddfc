"""Targeted and random node-removal attacks and fragmentation metrics."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .centrality import CentralityKind, compute
from .errors import BadK, EmptyGraph, FractionTooSmall, MismatchedFraction
from .graph import Graph, average_path_length, connected_components
from .rng import MASK64, sample_without_replacement

DEFAULT_FRACTION = 1.0 / 3.0
DEFAULT_SAMPLE_THRESHOLD = 2000


class AttackKind(enum.Enum):
    TARGETED = "targeted"
    RANDOM = "random"


class TargetingMode(enum.Enum):
    STATIC = "static"
    ADAPTIVE = "adaptive"


@dataclass(frozen=True)
class AttackScenario:
    kind: AttackKind
    fraction: float = DEFAULT_FRACTION
    centrality: CentralityKind = CentralityKind.BETWEENNESS
    mode: TargetingMode = TargetingMode.STATIC
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.fraction < 1.0:
            raise ValueError(f"fraction must lie in (0, 1), got {self.fraction}")

    @classmethod
    def targeted(cls, fraction=DEFAULT_FRACTION, centrality=CentralityKind.BETWEENNESS, adaptive=False):
        mode = TargetingMode.ADAPTIVE if adaptive else TargetingMode.STATIC
        return cls(AttackKind.TARGETED, fraction, CentralityKind(centrality), mode)

    @classmethod
    def random(cls, fraction=DEFAULT_FRACTION, seed=0):
        return cls(AttackKind.RANDOM, fraction, seed=seed & MASK64)

    def victim_count(self, n: int) -> int:
        # floor(f * n), guarded against f * n landing a hair under an integer
        return math.floor(self.fraction * n + 1e-9)


@dataclass(frozen=True)
class FragmentationMetrics:
    component_count: int
    largest_component_size: int
    avg_path_length_largest: float

    def as_tuple(self):
        return (self.component_count, self.largest_component_size, self.avg_path_length_largest)


EMPTY_METRICS = FragmentationMetrics(0, 0, 0.0)


@dataclass(frozen=True)
class AttackOutcome:
    scenario: AttackScenario
    removed: tuple[int, ...]
    before: FragmentationMetrics
    after: FragmentationMetrics


def _check_k(g: Graph, k: int):
    if not 1 <= k <= g.n:
        raise BadK(k, g.n)


def select_targets_targeted(
    g: Graph,
    centrality: CentralityKind | str,
    k: int,
    mode: TargetingMode | str = TargetingMode.STATIC,
) -> list[int]:
    """Top-k nodes by centrality (score descending, id ascending).

    Adaptive mode recomputes the ranking on the residual graph after every
    single removal.
    """
    _check_k(g, k)
    mode = TargetingMode(mode)
    if mode is TargetingMode.STATIC:
        return compute(g, centrality).ranking()[:k]
    picked = []
    current = g
    for _ in range(k):
        top = compute(current, centrality).ranking()[0]
        picked.append(top)
        current = current.without([top])
    return picked


def select_targets_random(g: Graph, k: int, seed: int) -> list[int]:
    """Partial Fisher-Yates over ascending node ids, driven by SplitMix64(seed)."""
    _check_k(g, k)
    return sample_without_replacement(g.nodes, k, seed)


def apply_removal(g: Graph, victims) -> Graph:
    return g.without(victims)


def measure(
    g: Graph,
    sample_threshold: int | None = None,
    sample_sources: int = 64,
    seed: int = 0,
) -> FragmentationMetrics:
    """Component count, largest component size and its mean path length.

    Path length is exact unless ``sample_threshold`` is set and the largest
    component has more nodes than that, in which case ``sample_sources``
    BFS sources are sampled.
    """
    if g.n == 0:
        raise EmptyGraph()
    comps = connected_components(g)
    largest = g.subgraph(comps.components[0])
    if sample_threshold is not None and largest.n > sample_threshold:
        apl = average_path_length(largest, "sampled", sample_sources, seed)
    else:
        apl = average_path_length(largest)
    return FragmentationMetrics(comps.count, largest.n, apl)


def _select(g: Graph, s: AttackScenario, k: int) -> list[int]:
    if s.kind is AttackKind.TARGETED:
        return select_targets_targeted(g, s.centrality, k, s.mode)
    return select_targets_random(g, k, s.seed)


def run_scenario(g: Graph, s: AttackScenario, before: FragmentationMetrics | None = None, **measure_kw) -> AttackOutcome:
    k = s.victim_count(g.n)
    if k < 1:
        raise FractionTooSmall(s.fraction, g.n)
    victims = _select(g, s, k)
    if before is None:
        before = measure(g, **measure_kw)
    residual = apply_removal(g, victims)
    after = measure(residual, **measure_kw) if residual.n else EMPTY_METRICS
    return AttackOutcome(s, tuple(victims), before, after)


METRIC_NAMES = ("component_count", "largest_component_size", "avg_path_length_largest")


def mean_metrics(rows: list[FragmentationMetrics]) -> tuple[float, float, float]:
    n = len(rows)
    return tuple(sum(getattr(r, name) for r in rows) / n for name in METRIC_NAMES)


@dataclass
class ResilienceReport:
    """Before / after-targeted / after-random comparison on one pristine graph."""

    n: int
    m: int
    targeted: AttackOutcome
    random_trials: list[AttackOutcome]
    meta: dict = field(default_factory=dict)

    @property
    def before(self) -> FragmentationMetrics:
        return self.targeted.before

    @property
    def random(self) -> AttackOutcome:
        return self.random_trials[0]

    def after_random(self):
        """Single-draw metrics, or per-metric means when several trials ran."""
        if len(self.random_trials) == 1:
            return self.random.after.as_tuple()
        return mean_metrics([t.after for t in self.random_trials])

    def rows(self) -> list[tuple]:
        """(metric, before, after_targeted, after_random) in fixed order."""
        rand = self.after_random()
        before = self.before.as_tuple()
        targ = self.targeted.after.as_tuple()
        return [(name, before[i], targ[i], rand[i]) for i, name in enumerate(METRIC_NAMES)]


def trial_seed(seed: int, trial: int) -> int:
    return (seed + trial) & MASK64


def compare_scenarios(
    g: Graph,
    targeted: AttackScenario,
    random: AttackScenario,
    trials: int = 1,
    **measure_kw,
) -> ResilienceReport:
    """Run both attacks on the same graph. Random trial t uses seed + t."""
    if targeted.kind is not AttackKind.TARGETED or random.kind is not AttackKind.RANDOM:
        raise ValueError("expected one targeted and one random scenario")
    if targeted.fraction != random.fraction:
        raise MismatchedFraction(targeted.fraction, random.fraction)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    before = measure(g, **measure_kw)
    t_out = run_scenario(g, targeted, before, **measure_kw)
    r_outs = []
    for t in range(trials):
        s = AttackScenario.random(random.fraction, trial_seed(random.seed, t))
        r_outs.append(run_scenario(g, s, before, **measure_kw))
    return ResilienceReport(g.n, g.m, t_out, r_outs)
