"""Command-line front end.

Exit codes: 0 success, 1 input error (unreadable or malformed data),
2 usage error. Nothing reaches stdout unless the command succeeds.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .attack import DEFAULT_FRACTION, DEFAULT_SAMPLE_THRESHOLD, AttackScenario, compare_scenarios, measure
from .community import best_partition_by_modularity, girvan_newman, louvain
from .errors import GraphError
from .generators import GeneratorConfig
from .io import export_dot, format_edge_list, parse_edge_list, read_edge_list
from .report import analysis_dict, dumps, emit_analysis, emit_partition, emit_report


EDGELIST_HELP = "edge-list file ('-' reads stdin)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="netresilience", description="Graph resilience under targeted and random node removal.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("json", "csv"), default="json"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--output", "-o", help="write here instead of stdout")

    def sampling(sp):
        sp.add_argument(
            "--sample-above", type=int, nargs="?", const=DEFAULT_SAMPLE_THRESHOLD, default=None, metavar="N",
            help=f"estimate path length from sampled sources when the largest component exceeds N nodes "
                 f"(N defaults to {DEFAULT_SAMPLE_THRESHOLD}; exact when the flag is absent)",
        )
        sp.add_argument("--sample-sources", type=int, default=64)

    a = sub.add_parser("analyze", help="centralities, communities and fragmentation metrics")
    a.add_argument("edgelist", help=EDGELIST_HELP)
    a.add_argument("--algorithm", choices=("louvain", "girvan-newman", "none"), default="louvain")
    sampling(a)
    common(a)

    t = sub.add_parser("attack", help="targeted vs random removal report")
    t.add_argument("edgelist", help=EDGELIST_HELP)
    t.add_argument("--fraction", type=float, default=DEFAULT_FRACTION)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--adaptive", action="store_true", help="recompute centrality after each removal")
    t.add_argument("--centrality", choices=("betweenness", "degree", "closeness"), default="betweenness")
    t.add_argument("--trials", type=int, default=1, help="random-attack repetitions (seeds seed..seed+trials-1)")
    sampling(t)
    common(t)

    c = sub.add_parser("communities", help="community detection")
    c.add_argument("edgelist", help=EDGELIST_HELP)
    c.add_argument("--algorithm", choices=("louvain", "girvan-newman"), default="louvain")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--shuffle", action="store_true", help="Louvain: scan nodes in seeded random order")
    common(c, ("json", "csv", "dot"))

    g = sub.add_parser("generate", help="synthetic graph as an edge list")
    g.add_argument("--model", choices=("ba", "er"), required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, help="BA: edges per arriving node")
    g.add_argument("--p", type=float, help="ER: edge probability")
    g.add_argument("--seed", type=int, default=0)
    common(g, ("edgelist", "json", "csv", "dot"), default="edgelist")
    return p


def _detect(g, algorithm, seed=0, shuffle=False):
    if algorithm == "girvan-newman":
        return best_partition_by_modularity(g, girvan_newman(g))
    return louvain(g, seed=seed, shuffle=shuffle)


def _run(args) -> bytes:
    if args.command == "generate":
        if args.model == "ba" and args.m is None:
            raise UsageError("generate: --m is required for --model ba")
        if args.model == "er" and args.p is None:
            raise UsageError("generate: --p is required for --model er")
        g = GeneratorConfig(args.model, args.n, args.m, args.p, args.seed).build()
        if args.format == "edgelist":
            return format_edge_list(g).encode("utf-8")
        if args.format == "dot":
            return export_dot(g)
        if args.format == "json":
            return dumps({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]})
        return ("source,target\n" + "".join(f"{u},{v}\n" for u, v in g.edges)).encode("utf-8")

    if args.edgelist == "-":
        g, labels = parse_edge_list(sys.stdin.buffer.read())
    else:
        g, labels = read_edge_list(args.edgelist)
    if args.command == "attack":
        if not 0.0 < args.fraction < 1.0:
            raise UsageError("attack: --fraction must lie in (0, 1)")
        if args.trials < 1:
            raise UsageError("attack: --trials must be >= 1")
        report = compare_scenarios(
            g,
            AttackScenario.targeted(args.fraction, args.centrality, args.adaptive),
            AttackScenario.random(args.fraction, args.seed),
            trials=args.trials,
            sample_threshold=args.sample_above,
            sample_sources=args.sample_sources,
        )
        return emit_report(report, args.format, labels)
    if args.command == "communities":
        part = _detect(g, args.algorithm, args.seed, args.shuffle)
        if args.format == "dot":
            return export_dot(g, part, labels)
        return emit_partition(part, args.algorithm, args.format, labels)
    # analyze
    part = None if args.algorithm == "none" or g.m == 0 else _detect(g, args.algorithm)
    metrics = measure(g, sample_threshold=args.sample_above, sample_sources=args.sample_sources)
    return emit_analysis(analysis_dict(g, part, metrics, args.algorithm, labels), args.format)


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        payload = _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        print(f"netresilience: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.flush()
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    return 0


def main():
    sys.exit(cli_main())
