"""Graph resilience toolkit: centralities, communities and node-removal attacks."""

__version__ = "0.1.0"

from .attack import (
    AttackKind,
    AttackOutcome,
    AttackScenario,
    FragmentationMetrics,
    ResilienceReport,
    TargetingMode,
    apply_removal,
    compare_scenarios,
    measure,
    run_scenario,
    select_targets_random,
    select_targets_targeted,
)
from .centrality import (
    CentralityKind,
    CentralityScores,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    edge_betweenness,
)
from .community import (
    Dendrogram,
    Partition,
    best_partition_by_modularity,
    girvan_newman,
    louvain,
    modularity,
)
from .errors import *  # noqa: F401,F403
from .generators import GeneratorConfig, barabasi_albert, erdos_renyi
from .graph import (
    ComponentDecomposition,
    Graph,
    average_path_length,
    bfs_distances,
    build_graph,
    connected_components,
    largest_component_subgraph,
)
from .io import LabelMap, export_dot, format_edge_list, parse_edge_list, read_edge_list
from .report import emit_report
from .rng import SplitMix64
