"""
Plain-text graph files.

    # comment
    vertices 2
    edge 0 0
    edge 1 1
    edge 0 1
    tree 2

Edge ids are assigned in file order; the optional `tree` line lists the
spanning tree's edge ids.
"""
import os

from common.errors import UsageError
from graphs.multigraph import Multigraph, SpanningTree


def parse_graph(text, name=""):
    """Parse graph text; returns (Multigraph, tree edge ids or None)."""
    vertex_count = None
    edges = []
    tree = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        try:
            if keyword == "vertices" and len(args) == 1:
                vertex_count = int(args[0])
            elif keyword == "edge" and len(args) == 2:
                edges.append((int(args[0]), int(args[1])))
            elif keyword == "tree":
                tree = tuple(int(a) for a in args)
            else:
                raise ValueError(keyword)
        except ValueError:
            raise UsageError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
    if vertex_count is None:
        raise UsageError("graph file has no 'vertices' line")
    try:
        graph = Multigraph(vertex_count, tuple(edges), name=name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return graph, tree


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), name=os.path.splitext(os.path.basename(path))[0])


def format_graph(graph, tree=None):
    lines = [f"vertices {graph.vertex_count}"]
    lines += [f"edge {a} {b}" for a, b in graph.edges]
    if tree is not None:
        ids = tree.tree_list if isinstance(tree, SpanningTree) else tuple(sorted(tree))
        lines.append("tree " + " ".join(str(e) for e in ids))
    return "\n".join(lines) + "\n"
