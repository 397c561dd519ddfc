"""Exception hierarchy. Every error raised by the toolkit derives from GraphError."""


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, node):
        super().__init__(f"self-loop on node {node!r}")
        self.node = node


class UnknownNode(GraphError, KeyError):
    def __init__(self, node):
        super().__init__(f"node {node!r} not in graph")
        self.node = node

    __str__ = ValueError.__str__


class EmptyGraph(GraphError):
    def __init__(self, msg="graph has no nodes"):
        super().__init__(msg)


class NoEdges(GraphError):
    def __init__(self, msg="graph has no edges"):
        super().__init__(msg)


class Disconnected(GraphError):
    def __init__(self, count):
        super().__init__(f"graph is disconnected ({count} components)")
        self.count = count


class IncompleteAssignment(GraphError):
    def __init__(self, missing):
        super().__init__(f"assignment misses {len(missing)} node(s), e.g. {sorted(missing)[:5]}")
        self.missing = missing


class EmptyDendrogram(GraphError):
    def __init__(self):
        super().__init__("dendrogram has no snapshots")


class BadK(GraphError):
    def __init__(self, k, n):
        super().__init__(f"k={k} outside 1..{n}")


class FractionTooSmall(GraphError):
    def __init__(self, fraction, n):
        super().__init__(f"fraction {fraction} of {n} nodes removes nothing")


class MismatchedFraction(GraphError):
    def __init__(self, a, b):
        super().__init__(f"scenario fractions differ: {a} vs {b}")


class BadParams(GraphError):
    pass


class MalformedLine(GraphError):
    def __init__(self, line_no, line=""):
        super().__init__(f"line {line_no}: expected two labels, got {line!r}")
        self.line_no = line_no
