"""
Brute-force canonical labelling for small multigraphs.

The canonical form is the lexicographically smallest sorted edge list over
all vertex relabellings that respect an isomorphism-invariant vertex
partition. Edges may carry a colour (tree edges are coloured 1 when a
spanning tree is given), so (graph, tree) pairs can be compared too.
"""
from collections import Counter
from functools import lru_cache
from itertools import permutations, product

from graphs.multigraph import SpanningTree, spanning_trees


def _colours(g, tree):
    if tree is None:
        return (0,) * g.edge_count
    return tuple(1 if e in tree.tree_edges else 0 for e in g.edge_ids)


def _vertex_invariant(g, colours, v):
    loops = tuple(sorted(colours[e] for e in g.edge_ids if g.edges[e] == (v, v)))
    neighbours = Counter()
    for e in g.half_edges(v):
        if not g.is_loop(e):
            neighbours[(g.other_end(e, v), colours[e])] += 1
    links = tuple(sorted(Counter(
        (mult, colour) for (_, colour), mult in neighbours.items()).items()))
    return (g.degree(v), loops, links)


def _relabellings(g, colours):
    """Yield vertex maps old -> new that respect the invariant partition."""
    groups = {}
    for v in range(g.vertex_count):
        groups.setdefault(_vertex_invariant(g, colours, v), []).append(v)
    ordered = [groups[k] for k in sorted(groups)]
    offsets, start = [], 0
    for members in ordered:
        offsets.append(start)
        start += len(members)
    for choice in product(*(permutations(members) for members in ordered)):
        mapping = [0] * g.vertex_count
        for offset, members in zip(offsets, choice):
            for i, v in enumerate(members):
                mapping[v] = offset + i
        yield mapping


def _edge_list(g, colours, mapping):
    return tuple(sorted(
        (min(mapping[a], mapping[b]), max(mapping[a], mapping[b]), colours[e])
        for e, (a, b) in enumerate(g.edges)))


def canonical_form(g, tree=None):
    colours = _colours(g, tree)
    best = None
    for mapping in _relabellings(g, colours):
        candidate = _edge_list(g, colours, mapping)
        if best is None or candidate < best:
            best = candidate
    return (g.vertex_count, best)


def are_isomorphic(a, b, tree_a=None, tree_b=None):
    """Vertex bijection carrying edges (and tree marks, when given) onto each other."""
    if (a.vertex_count, a.edge_count, len(a.loops)) != (b.vertex_count, b.edge_count, len(b.loops)):
        return False
    if sorted(a.degree(v) for v in range(a.vertex_count)) != sorted(b.degree(v) for v in range(b.vertex_count)):
        return False
    if (tree_a is None) != (tree_b is None):
        return False
    return canonical_form(a, tree_a) == canonical_form(b, tree_b)


def tree_classes(g):
    """One spanning tree per orbit of Aut(g), the lexicographically first of each orbit."""
    seen = {}
    for tree in spanning_trees(g):
        key = canonical_form(g, tree)
        seen.setdefault(key, tree)
    return sorted(seen.values(), key=lambda t: t.tree_list)


@lru_cache(maxsize=None)
def _cached_form(g, tree_edges):
    tree = None if tree_edges is None else SpanningTree(tree_edges, frozenset(g.edge_ids) - tree_edges)
    return canonical_form(g, tree)


def pair_key(g, tree=None):
    """Hashable canonical key for a graph or a (graph, tree) pair."""
    return _cached_form(g, None if tree is None else tree.tree_edges)
