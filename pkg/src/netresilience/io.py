"""Edge-list ingestion/emission and DOT export."""
from __future__ import annotations

from dataclasses import dataclass, field

from .community import Partition
from .errors import MalformedLine, SelfLoop
from .graph import Graph, build_graph

# 12-class qualitative palette (ColorBrewer "Paired")
PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)


@dataclass
class LabelMap:
    """Bidirectional label <-> dense id map, ids in first-appearance order."""

    ids: dict[str, int] = field(default_factory=dict)
    labels: list[str] = field(default_factory=list)

    def intern(self, label: str) -> int:
        i = self.ids.get(label)
        if i is None:
            i = self.ids[label] = len(self.labels)
            self.labels.append(label)
        return i

    def label(self, node: int) -> str:
        return self.labels[node]

    def __len__(self):
        return len(self.labels)


def parse_edge_list(text: str | bytes) -> tuple[Graph, LabelMap]:
    """Parse whitespace-separated label pairs; '#' lines and blank lines are skipped."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    labels = LabelMap()
    edges = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise MalformedLine(line_no, line)
        a, b = parts
        if a == b:
            raise SelfLoop(a)
        edges.append((labels.intern(a), labels.intern(b)))
    return build_graph(edges), labels


def read_edge_list(path) -> tuple[Graph, LabelMap]:
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, labels: LabelMap | None = None) -> str:
    name = labels.label if labels is not None else str
    return "".join(f"{name(u)} {name(v)}\n" for u, v in g.edges)


def export_dot(g: Graph, partition: Partition | None = None, labels: LabelMap | None = None) -> bytes:
    """Undirected DOT text; nodes ascending, optionally filled by community."""
    out = ["graph G {"]
    for u in g.nodes:
        attrs = []
        if labels is not None:
            attrs.append(f'label="{_escape(labels.label(u))}"')
        if partition is not None:
            color = PALETTE[partition.assignment[u] % len(PALETTE)]
            attrs.append(f'color="{color}", style=filled, fillcolor="{color}"')
        out.append(f"  {u} [{', '.join(attrs)}];" if attrs else f"  {u};")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return ("\n".join(out) + "\n").encode("utf-8")


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
