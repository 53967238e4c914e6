"""
Multigraph model for the graph-indexed polytopes.

- Multigraph: vertices 0..n-1 and an ordered edge list; an edge's id is its
  position, and an edge (v, v) is a loop.
- SpanningTree: a set of tree edges plus its complement, the free edges.
- Loops count twice toward the degree of their vertex.

Graphs are immutable values; every edit returns a new graph.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
from networkx.utils import UnionFind

from common.errors import (
    DisconnectedGraph,
    InvalidTree,
    NotATree,
    NotLoopTree,
    NotTreeEdge,
    NotTrivalent,
    NotTrivalentInterior,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for eid, (a, b) in enumerate(edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge {eid} = ({a}, {b}) references a missing vertex")

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def edge_ids(self):
        return range(len(self.edges))

    def is_loop(self, eid):
        a, b = self.edges[eid]
        return a == b

    @property
    def loops(self):
        return tuple(e for e in self.edge_ids if self.is_loop(e))

    def endpoints(self, eid):
        return self.edges[eid]

    def half_edges(self, v):
        """Edge ids at v, sorted, with a loop listed twice."""
        out = []
        for eid, (a, b) in enumerate(self.edges):
            if a == v:
                out.append(eid)
            if b == v:
                out.append(eid)
        return tuple(sorted(out))

    def degree(self, v):
        return len(self.half_edges(v))

    def other_end(self, eid, v):
        a, b = self.edges[eid]
        return b if a == v else a

    def to_networkx(self):
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertex_count))
        for eid, (a, b) in enumerate(self.edges):
            g.add_edge(a, b, key=eid)
        return g

    @property
    def component_count(self):
        if self.vertex_count == 0:
            return 0
        return nx.number_connected_components(self.to_networkx())

    @property
    def is_connected(self):
        return self.vertex_count > 0 and self.component_count == 1

    def require_connected(self):
        if not self.is_connected:
            raise DisconnectedGraph(f"graph {self.label()} is not connected")

    def label(self):
        return self.name or f"<{self.vertex_count} vertices, {self.edge_count} edges>"

    def relabeled(self, permutation):
        """Graph with vertex v renamed permutation[v]; edge ids are kept."""
        return Multigraph(self.vertex_count,
                          tuple((permutation[a], permutation[b]) for a, b in self.edges),
                          name=self.name)


@dataclass(frozen=True)
class SpanningTree:
    tree_edges: frozenset
    free_edges: frozenset

    @classmethod
    def of(cls, graph, tree_edges):
        """Validated spanning tree of graph from an iterable of edge ids."""
        tree = frozenset(int(e) for e in tree_edges)
        unknown = [e for e in tree if not 0 <= e < graph.edge_count]
        if unknown:
            raise InvalidTree(f"edge ids {sorted(unknown)} are not edges of {graph.label()}")
        if len(tree) != graph.vertex_count - 1:
            raise InvalidTree(f"a spanning tree of {graph.label()} needs {graph.vertex_count - 1} edges, got {len(tree)}")
        uf = UnionFind(range(graph.vertex_count))
        for e in sorted(tree):
            a, b = graph.edges[e]
            if uf[a] == uf[b]:
                raise InvalidTree(f"edge {e} closes a cycle")
            uf.union(a, b)
        free = frozenset(graph.edge_ids) - tree
        return cls(tree, free)

    @property
    def tree_list(self):
        return tuple(sorted(self.tree_edges))

    @property
    def free_list(self):
        return tuple(sorted(self.free_edges))


def betti(g):
    """First Betti number |E| - |V| + #components."""
    return g.edge_count - g.vertex_count + g.component_count


def is_trivalent(g):
    return all(g.degree(v) == 3 for v in range(g.vertex_count))


def require_trivalent(g):
    g.require_connected()
    if not is_trivalent(g):
        bad = [v for v in range(g.vertex_count) if g.degree(v) != 3]
        raise NotTrivalent(f"vertices {bad} of {g.label()} do not have degree 3")


def spanning_trees(g):
    """All spanning trees, in lexicographic order of their sorted edge ids."""
    g.require_connected()
    candidates = [e for e in g.edge_ids if not g.is_loop(e)]
    size = g.vertex_count - 1
    trees = []
    for subset in combinations(candidates, size):
        uf = UnionFind(range(g.vertex_count))
        for e in subset:
            a, b = g.edges[e]
            if uf[a] == uf[b]:
                break
            uf.union(a, b)
        else:
            tree = frozenset(subset)
            trees.append(SpanningTree(tree, frozenset(g.edge_ids) - tree))
    logger.debug("%s has %d spanning trees", g.label(), len(trees))
    return trees


def _check_tree(t):
    if t.vertex_count == 0 or t.loops or t.edge_count != t.vertex_count - 1 or not t.is_connected:
        raise NotATree(f"{t.label()} is not a tree")


def loop_tree(t):
    """Attach one loop at every leaf of a tree whose internal vertices have degree 3."""
    _check_tree(t)
    if t.edge_count == 0:
        raise NotATree("the single-vertex tree has no leaves to carry loops")
    degrees = [t.degree(v) for v in range(t.vertex_count)]
    if any(d not in (1, 3) for d in degrees):
        raise NotTrivalentInterior(f"internal vertices of {t.label()} must have degree 3")
    leaves = [v for v, d in enumerate(degrees) if d == 1]
    graph = Multigraph(t.vertex_count, t.edges + tuple((v, v) for v in leaves))
    tree = frozenset(t.edge_ids)
    return graph, SpanningTree(tree, frozenset(graph.edge_ids) - tree)


def is_loop_tree(g, t):
    """True when g is trivalent and every free edge of t is a loop."""
    return g.is_connected and is_trivalent(g) and all(g.is_loop(e) for e in t.free_edges)


@dataclass(frozen=True)
class SplitComponent:
    """One side of contract_split.

    edge_map[i] lists the original edge ids that became edge i of graph; a
    merged edge lists both halves. An interval component stands for a lone
    loop, whose polytope is taken to be [0, 1].
    """
    graph: Multigraph = None
    tree: SpanningTree = None
    edge_map: tuple = ()
    interval_loop: int = None

    @property
    def is_interval(self):
        return self.interval_loop is not None

    @property
    def genus(self):
        return 1 if self.is_interval else betti(self.graph)


def _side(g, removed, start):
    """Vertices reachable from start without crossing the removed edge."""
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for eid in g.half_edges(v):
            if eid == removed:
                continue
            w = g.other_end(eid, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _component(g, t, e, x):
    side = _side(g, e, x)
    others = [h for h in g.half_edges(x) if h != e]
    if g.is_loop(others[0]):
        return SplitComponent(interval_loop=others[0])
    f, h = others
    y, z = g.other_end(f, x), g.other_end(h, x)
    kept = sorted(v for v in side if v != x)
    index = {v: i for i, v in enumerate(kept)}
    edges, edge_map, tree = [], [], []
    for eid, (a, b) in enumerate(g.edges):
        if eid in (e, h) or a not in side:
            continue
        if eid == f:
            edges.append((index[y], index[z]))
            edge_map.append(tuple(sorted((f, h))))
            tree.append(len(edges) - 1)
            continue
        edges.append((index[a], index[b]))
        edge_map.append((eid,))
        if eid in t.tree_edges:
            tree.append(len(edges) - 1)
    graph = Multigraph(len(kept), tuple(edges))
    tree_set = frozenset(tree)
    return SplitComponent(graph, SpanningTree(tree_set, frozenset(graph.edge_ids) - tree_set), tuple(edge_map))


def contract_split(g, t, e):
    """Delete tree edge e of a loop-tree and concatenate the edge pairs at its ends."""
    if e not in t.tree_edges:
        raise NotTreeEdge(f"edge {e} is not in the spanning tree")
    if not is_loop_tree(g, t):
        raise NotLoopTree(f"{g.label()} with this tree is not a tree with loops at its leaves")
    u, v = g.edges[e]
    first, second = _component(g, t, e, u), _component(g, t, e, v)
    assert first.genus + second.genus == betti(g)
    return first, second


def tree_subgraph(g, tree):
    """T as a graph on the vertices of g; its edge i is tree edge tree.tree_list[i]."""
    return Multigraph(g.vertex_count, tuple(g.edges[e] for e in tree.tree_list), name=f"{g.label()}-tree")
