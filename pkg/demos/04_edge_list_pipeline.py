"""
Edge-list files, reports and DOT export
=======================================

The command-line tool reads whitespace-separated edge lists with arbitrary
labels. The same functions are available from Python.
"""
import tempfile
from pathlib import Path

from netresilience import export_dot, louvain, parse_edge_list
from netresilience.cli import cli_main

text = """\
# small backbone with two regional clusters
core-a core-b
core-b core-c
core-a core-c
core-a r1-x
r1-x r1-y
r1-y r1-z
r1-x r1-z
core-c r2-x
r2-x r2-y
r2-y r2-z
r2-x r2-z
"""
g, labels = parse_edge_list(text)
print(g, labels.labels)

part = louvain(g)
for i, members in enumerate(part.communities):
    print(i, sorted(labels.label(u) for u in members))

dot = export_dot(g, part, labels)
print(dot.decode()[:200], "...")

# %%
# The same pipeline through the CLI entry point.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "net.txt"
    path.write_text(text)
    cli_main(["attack", str(path), "--fraction", "0.25", "--seed", "3", "--format", "csv"])
    cli_main(["communities", str(path), "--algorithm", "girvan-newman", "--format", "csv"])
