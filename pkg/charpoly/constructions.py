"""
Polytopes indexed by a trivalent graph and a spanning tree.

- cone_P(g):          triangle inequalities at every vertex
- polytope_P(g, t):   cone_P plus a(l) <= 1 on every free edge l
- polytope_Q(g, t):   halved triangle rows >= -1 plus -w(l) >= -1; Q + 2 = 3P
- polytope_Delta(t):  triangle rows at the internal vertices of a tree plus w(e) <= 2 on leaf edges

A vertex's triangle rows are built from its sorted half-edge triple, so a
vertex carrying loop l and edge e sees (l, l, e) and yields 2a(l) - a(e) >= 0
and a(e) >= 0.
"""
import logging
from fractions import Fraction

from common.errors import InvalidTree, NotTrivalentTree
from graphs.multigraph import SpanningTree, require_trivalent
from lattices.graph_lattice import even_lattice
from polyhedra.polytope import HPolytope, Row

logger = logging.getLogger(__name__)

SIGN_PATTERNS = ("++-", "+-+", "-++")


def triangle_label(v, signs):
    return f"tri:v{v}:{signs}"


def boundary_label(edge):
    return f"bnd:e{edge}"


def _vertex_rows(g, v):
    triple = g.half_edges(v)
    for signs in SIGN_PATTERNS:
        normal = [0] * g.edge_count
        for sign, e in zip(signs, triple):
            normal[e] += 1 if sign == "+" else -1
        yield signs, tuple(normal)


def _triangle_rows(g, vertices, dedup):
    rows, seen = [], set()
    for v in vertices:
        for signs, normal in _vertex_rows(g, v):
            if dedup and normal in seen:
                continue
            seen.add(normal)
            rows.append(Row(normal, 0, triangle_label(v, signs)))
    return rows


def triangle_rows(g, dedup=True):
    """Triangle inequalities a·n >= 0, three per vertex.

    With dedup, a normal already produced (the repeated a(e) >= 0 at a loop
    vertex, or a row shared by two vertices) is emitted only the first time.
    """
    require_trivalent(g)
    return _triangle_rows(g, range(g.vertex_count), dedup)


def _boundary_rows(g, tree, rhs):
    rows = []
    for ell in tree.free_list:
        normal = [0] * g.edge_count
        normal[ell] = -1
        rows.append(Row(tuple(normal), rhs, boundary_label(ell)))
    return rows


def as_tree(g, t):
    """Validate t (a SpanningTree or an iterable of edge ids) against g."""
    edges = t.tree_edges if isinstance(t, SpanningTree) else t
    try:
        return SpanningTree.of(g, edges)
    except TypeError:
        raise InvalidTree(f"cannot read a spanning tree from {t!r}") from None


def cone_P(g):
    return HPolytope(g.edge_count, tuple(triangle_rows(g)))


def polytope_P(g, t):
    tree = as_tree(g, t)
    rows = triangle_rows(g) + _boundary_rows(g, tree, -1)
    return HPolytope(g.edge_count, tuple(rows))


def polytope_Q(g, t):
    tree = as_tree(g, t)
    half = Fraction(1, 2)
    rows = [Row(tuple(x * half for x in r.normal), -1, r.label) for r in triangle_rows(g)]
    rows += _boundary_rows(g, tree, -1)
    return HPolytope(g.edge_count, tuple(rows))


def all_twos(g):
    return (Fraction(2),) * g.edge_count


def _check_trivalent_tree(t):
    if (t.vertex_count < 2 or t.loops or t.edge_count != t.vertex_count - 1
            or not t.is_connected):
        raise NotTrivalentTree(f"{t.label()} is not a tree with at least one edge")
    bad = [v for v in range(t.vertex_count) if t.degree(v) not in (1, 3)]
    if bad:
        raise NotTrivalentTree(f"vertices {bad} of {t.label()} have degree other than 1 or 3")


def leaf_edges(t):
    return sorted({e for v in range(t.vertex_count) if t.degree(v) == 1 for e in t.half_edges(v)})


def polytope_Delta(t, leaf_nonnegativity=True):
    """Δ(T) for a trivalent tree; its lattice is delta_lattice(t).

    leaf_nonnegativity adds w(e) >= 0 on leaf edges. The triangle rows already
    imply it whenever the tree has an internal vertex, so it only changes the
    single-edge tree.
    """
    _check_trivalent_tree(t)
    internal = [v for v in range(t.vertex_count) if t.degree(v) == 3]
    rows = _triangle_rows(t, internal, dedup=True)
    for e in leaf_edges(t):
        normal = [0] * t.edge_count
        normal[e] = -1
        rows.append(Row(tuple(normal), -2, f"leaf:e{e}"))
        if leaf_nonnegativity:
            rows.append(Row(tuple(-x for x in normal), 0, f"leafpos:e{e}"))
    return HPolytope(t.edge_count, tuple(rows))


def delta_lattice(t):
    return even_lattice(t.edge_count)
