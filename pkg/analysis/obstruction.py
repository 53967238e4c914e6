"""
Non-reflexivity witnesses for graphs with loops.

Hypotheses: Γ has k loops with 2 <= k < g, and f is a free non-loop edge
with no other free edge (loops included) at either endpoint. The witness
takes the path of tree edges from one loop vertex through f to a different
loop vertex and sets 3 on the path, 3/2 on the two loops and 0 elsewhere.
It is a vertex of 3P(Γ, T) outside M_Γ, so Q(Γ, T) + 2 is not a lattice
polytope.
"""
import logging
from fractions import Fraction

import networkx as nx

from charpoly.constructions import as_tree, polytope_P
from common.errors import ObstructionNotApplicable, WitnessRejected
from graphs.multigraph import betti
from lattices.graph_lattice import contains, m_lattice
from polyhedra.operations import dilate, tight_rank

logger = logging.getLogger(__name__)


def _tree_graph(g, tree):
    t = nx.Graph()
    t.add_nodes_from(range(g.vertex_count))
    for e in tree.tree_list:
        a, b = g.edges[e]
        t.add_edge(a, b, eid=e)
    return t


def _loop_vertices(g):
    return {g.edges[e][0]: e for e in g.loops}


def _hypotheses_hold(g, tree, f):
    if f not in tree.free_edges or g.is_loop(f):
        return False
    k = len(g.loops)
    if not 2 <= k < betti(g):
        return False
    return all(e == f or e in tree.tree_edges for end in g.edges[f] for e in g.half_edges(end))


def _witness_path(g, tree, f):
    """(path edges, loop pair) with the smallest sorted edge tuple, or None."""
    t = _tree_graph(g, tree)
    loops = _loop_vertices(g)
    u, w = g.edges[f]

    def routes(start):
        out = []
        for x in sorted(loops):
            nodes = nx.shortest_path(t, start, x)
            edges = [t.edges[a, b]["eid"] for a, b in zip(nodes, nodes[1:])]
            out.append((x, set(nodes), edges))
        return out

    best = None
    for x1, nodes1, edges1 in routes(u):
        for x2, nodes2, edges2 in routes(w):
            if x1 == x2 or nodes1 & nodes2:
                continue
            path = tuple(sorted(edges1 + edges2 + [f]))
            if best is None or path < best[0]:
                best = (path, tuple(sorted((loops[x1], loops[x2]))))
    return best


def obstruction_edges(g, t):
    """Free edges f for which the witness construction applies."""
    tree = as_tree(g, t)
    return [f for f in tree.free_list
            if _hypotheses_hold(g, tree, f) and _witness_path(g, tree, f) is not None]


def obstruction_witness(g, t, f):
    """The witness point for edge f, verified as a vertex of 3P outside M_Γ."""
    tree = as_tree(g, t)
    if not _hypotheses_hold(g, tree, f):
        raise ObstructionNotApplicable(
            f"edge {f} of {g.label()} does not meet the hypotheses "
            f"({len(g.loops)} loops, genus {betti(g)})")
    found = _witness_path(g, tree, f)
    if found is None:
        raise ObstructionNotApplicable(f"no tree path through edge {f} joins two distinct loops")
    path, loop_pair = found
    v = [Fraction(0)] * g.edge_count
    for e in path:
        v[e] = Fraction(3)
    for ell in loop_pair:
        v[ell] = Fraction(3, 2)
    v = tuple(v)

    p3 = dilate(polytope_P(g, tree), 3)
    if not p3.contains(v):
        raise WitnessRejected(f"witness for edge {f} is not in 3P")
    rank = tight_rank(p3, v)
    if rank != g.edge_count:
        raise WitnessRejected(f"witness for edge {f} is tight on a rank {rank} system, not a vertex")
    if contains(m_lattice(g), v):
        raise WitnessRejected(f"witness for edge {f} lies in M")
    logger.debug("%s: witness through edge %d uses path %s", g.label(), f, path)
    return v
