"""
Enumeration of connected trivalent multigraphs of small genus, up to isomorphism.

Two generators are provided:

- insertion (default): every connected trivalent graph of genus g+1 >= 3 is
  obtained from one of genus g either by joining two points on edges with a
  new edge, or by hanging a new loop vertex off a point on an edge. Starting
  from the two genus-2 graphs and deduplicating by canonical form gives the
  full list quickly.
- pairing: perfect matchings of the 3|V| half-edges, filtered for
  connectivity and deduplicated. Simple and auditable, but the number of
  matchings explodes, so it is limited to genus <= 3.
"""
import logging

from common.errors import GenusOutOfRange
from graphs.isomorphism import canonical_form
from graphs.multigraph import Multigraph, betti

logger = logging.getLogger(__name__)

MIN_GENUS = 2
MAX_GENUS = 5
MAX_PAIRING_GENUS = 3


def _seeds():
    return [
        Multigraph(2, ((0, 0), (1, 1), (0, 1)), name="dumbbell"),
        Multigraph(2, ((0, 1), (0, 1), (0, 1)), name="theta"),
    ]


def _subdivide(edges, eid, new_vertex):
    a, b = edges[eid]
    return edges[:eid] + [(a, new_vertex)] + edges[eid + 1:] + [(new_vertex, b)]


def _insertions(g):
    """All genus+1 graphs obtained from g by one insertion step."""
    n = g.vertex_count
    base = list(g.edges)
    for i in range(len(base)):
        for j in range(i, len(base)):
            p, q = n, n + 1
            edges = _subdivide(base, i, p)
            if i == j:
                # both points on edge i: a - p - q - b plus the chord p - q
                _, b = edges.pop()
                edges += [(p, q), (q, b)]
            else:
                edges = _subdivide(edges, j, q)
            yield Multigraph(n + 2, tuple(edges + [(p, q)]))
        p, q = n, n + 1
        edges = _subdivide(base, i, p)
        yield Multigraph(n + 2, tuple(edges + [(p, q), (q, q)]))


def _dedup(graphs):
    forms = {}
    for g in graphs:
        forms.setdefault(canonical_form(g), g)
    return [_from_form(form) for form in sorted(forms)]


def _from_form(form):
    n, edges = form
    return Multigraph(n, tuple((a, b) for a, b, _ in edges))


def _by_insertion(genus):
    current = _dedup(_seeds())
    for g in range(MIN_GENUS, genus):
        current = _dedup(h for graph in current for h in _insertions(graph))
        logger.debug("genus %d: %d trivalent graphs", g + 1, len(current))
    return current


def _matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest)):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, rest[k])] + tail


def _by_pairing(genus):
    n = 2 * genus - 2
    half_edges = [v for v in range(n) for _ in range(3)]
    graphs = []
    for matching in _matchings(list(range(3 * n))):
        g = Multigraph(n, tuple((half_edges[x], half_edges[y]) for x, y in matching))
        if g.is_connected:
            graphs.append(g)
    return _dedup(graphs)


def enumerate_trivalent(genus, method="insertion"):
    """Connected trivalent multigraphs of the given genus, one per isomorphism class."""
    if not MIN_GENUS <= genus <= MAX_GENUS:
        raise GenusOutOfRange(f"genus must be between {MIN_GENUS} and {MAX_GENUS}, got {genus}")
    if method == "pairing":
        if genus > MAX_PAIRING_GENUS:
            raise GenusOutOfRange(f"half-edge pairing is limited to genus <= {MAX_PAIRING_GENUS}")
        graphs = _by_pairing(genus)
    elif method == "insertion":
        graphs = _by_insertion(genus)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    assert all(betti(g) == genus for g in graphs)
    return graphs
