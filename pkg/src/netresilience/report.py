"""Canonical JSON/CSV serialization of resilience, analysis and community results."""
from __future__ import annotations

import csv
import io
import json

from . import __version__
from .attack import METRIC_NAMES, ResilienceReport
from .centrality import betweenness_centrality, closeness_centrality, degree_centrality
from .community import Partition
from .io import LabelMap

FLOAT_DIGITS = 4

_NUMBER = {"type": "number"}
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["meta", "rows", "removed"],
    "properties": {
        "meta": {
            "type": "object",
            "required": ["n", "m", "fraction", "centrality", "mode", "seeds", "trials", "version"],
            "properties": {
                "n": {"type": "integer", "minimum": 0},
                "m": {"type": "integer", "minimum": 0},
                "fraction": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
                "centrality": {"enum": ["degree", "closeness", "betweenness"]},
                "mode": {"enum": ["static", "adaptive"]},
                "seeds": {"type": "array", "items": {"type": "integer"}},
                "trials": {"type": "integer", "minimum": 1},
                "version": {"type": "string"},
            },
        },
        "rows": {
            "type": "array",
            "minItems": 3,
            "maxItems": 3,
            "items": {
                "type": "object",
                "required": ["metric", "before", "after_targeted", "after_random"],
                "properties": {
                    "metric": {"enum": list(METRIC_NAMES)},
                    "before": _NUMBER,
                    "after_targeted": _NUMBER,
                    "after_random": _NUMBER,
                    "after_random_trials": {"type": "array", "items": _NUMBER},
                },
            },
        },
        "removed": {
            "type": "object",
            "required": ["targeted", "random"],
            "properties": {
                "targeted": {"type": "array"},
                "random": {"type": "array"},
                "random_trials": {"type": "array", "items": {"type": "array"}},
            },
        },
    },
}


def _num(x):
    if isinstance(x, float):
        return round(x, FLOAT_DIGITS)
    return x


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.{FLOAT_DIGITS}f}"
    return str(x)


def _namer(labels: LabelMap | None):
    if labels is None:
        return lambda u: u
    return labels.label


def report_dict(r: ResilienceReport, labels: LabelMap | None = None) -> dict:
    name = _namer(labels)
    t = r.targeted.scenario
    trials = len(r.random_trials)
    meta = {
        "n": r.n,
        "m": r.m,
        "fraction": t.fraction,
        "removed_per_attack": len(r.targeted.removed),
        "centrality": t.centrality.value,
        "mode": t.mode.value,
        "seeds": [o.scenario.seed for o in r.random_trials],
        "trials": trials,
        "version": __version__,
    }
    meta.update(r.meta)
    rows = []
    for i, (metric, before, targ, rand) in enumerate(r.rows()):
        row = {"metric": metric, "before": _num(before), "after_targeted": _num(targ), "after_random": _num(rand)}
        if trials > 1:
            row["after_random_trials"] = [_num(o.after.as_tuple()[i]) for o in r.random_trials]
        rows.append(row)
    removed = {
        "targeted": [name(u) for u in r.targeted.removed],
        "random": [name(u) for u in r.random.removed],
    }
    if trials > 1:
        removed["random_trials"] = [[name(u) for u in o.removed] for o in r.random_trials]
    return {"meta": meta, "rows": rows, "removed": removed}


def dumps(obj) -> bytes:
    return (json.dumps(obj, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _csv(header, rows) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().encode("utf-8")


def emit_report(r: ResilienceReport, format: str = "json", labels: LabelMap | None = None) -> bytes:
    """Serialize a report. CSV mirrors the before/targeted/random table."""
    if format == "json":
        return dumps(report_dict(r, labels))
    if format != "csv":
        raise ValueError(f"unknown format {format!r}")
    trials = len(r.random_trials)
    header = ["metric", "before", "after_targeted", "after_random"]
    header += [f"after_random_trial_{t}" for t in range(trials)] if trials > 1 else []
    rows = []
    for i, (metric, before, targ, rand) in enumerate(r.rows()):
        row = [metric, _fmt(before), _fmt(targ), _fmt(rand)]
        if trials > 1:
            row += [_fmt(o.after.as_tuple()[i]) for o in r.random_trials]
        rows.append(row)
    return _csv(header, rows)


def partition_dict(p: Partition, algorithm: str, labels: LabelMap | None = None) -> dict:
    name = _namer(labels)
    return {
        "algorithm": algorithm,
        "community_count": p.community_count,
        "modularity": _num(p.modularity),
        "assignment": [{"node": name(u), "community": c} for u, c in sorted(p.assignment.items())],
    }


def emit_partition(p: Partition, algorithm: str, format: str = "json", labels: LabelMap | None = None) -> bytes:
    if format == "json":
        return dumps(partition_dict(p, algorithm, labels))
    name = _namer(labels)
    return _csv(["node", "community"], [[name(u), c] for u, c in sorted(p.assignment.items())])


def analysis_dict(g, partition: Partition | None, metrics, algorithm: str, labels: LabelMap | None = None) -> dict:
    name = _namer(labels)
    deg = degree_centrality(g).scores
    clo = closeness_centrality(g).scores
    btw = betweenness_centrality(g).scores
    nodes = []
    for u in g.nodes:
        nodes.append({
            "node": name(u),
            "degree": g.degree(u),
            "degree_centrality": _num(deg[u]),
            "closeness": _num(clo[u]),
            "betweenness": _num(btw[u]),
            "community": partition.assignment[u] if partition else None,
        })
    return {
        "meta": {"n": g.n, "m": g.m, "version": __version__},
        "metrics": {k: _num(v) for k, v in zip(METRIC_NAMES, metrics.as_tuple())},
        "communities": None if partition is None else {
            "algorithm": algorithm,
            "count": partition.community_count,
            "modularity": _num(partition.modularity),
        },
        "nodes": nodes,
    }


def emit_analysis(d: dict, format: str = "json") -> bytes:
    if format == "json":
        return dumps(d)
    cols = ["node", "degree", "degree_centrality", "closeness", "betweenness", "community"]
    return _csv(cols, [[_fmt(row[c]) if row[c] is not None else "" for c in cols] for row in d["nodes"]])
