"""
Operations on H-polytopes: vertex enumeration, dilation, translation, faces,
facets and polar duality.
"""
import logging
from functools import lru_cache

from common.errors import DimensionMismatch, Infeasible, NonPositiveFactor, OriginNotInterior
from common.rational import dot, matrix_rank, scale, sub, to_fraction, vector
from polyhedra.double_description import enumerate_vertices
from polyhedra.polytope import HPolytope, Row, VPolytope

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def vertices(p):
    """Irredundant V-representation, vertices in lexicographic order."""
    verts, rays = enumerate_vertices([(row.normal, row.rhs) for row in p.rows], p.ambient_dim)
    logger.debug("%d vertices, %d rays in dimension %d", len(verts), len(rays), p.ambient_dim)
    return VPolytope(p.ambient_dim, tuple(verts), tuple(rays))


def dilate(p, k):
    k = to_fraction(k)
    if k <= 0:
        raise NonPositiveFactor(f"dilation factor must be positive, got {k}")
    return p.with_rows(Row(r.normal, r.rhs * k, r.label) for r in p.rows)


def translate(p, t):
    """p + t: each rhs grows by normal·t."""
    t = vector(t)
    if len(t) != p.ambient_dim:
        raise DimensionMismatch(f"translation of length {len(t)} in dimension {p.ambient_dim}")
    return p.with_rows(Row(r.normal, r.rhs + dot(r.normal, t), r.label) for r in p.rows)


def _affine_rank(points, directions=()):
    if not points:
        return -1
    base = points[0]
    spans = [sub(v, base) for v in points[1:]] + list(directions)
    return matrix_rank(spans) if spans else 0


def dim(p):
    """Affine dimension; raises Infeasible for an empty system."""
    v = vertices(p)
    return _affine_rank(list(v.vertices), v.rays)


def tight_rank(p, x):
    """Rank of the normals of rows tight at x; a feasible x is a vertex iff this equals the ambient dimension."""
    return matrix_rank([row.normal for row in p.tight_rows(x)])


@lru_cache(maxsize=512)
def facets(p):
    """Rows of p that define facets, one per facet, in row order.

    A row is a facet when the vertices and rays on it span an affine space
    of dimension dim(p) - 1. Implicit equalities are dropped.
    """
    v = vertices(p)
    d = _affine_rank(list(v.vertices), v.rays)
    kept, seen = [], set()
    for row in p.rows:
        on_verts = [x for x in v.vertices if row.is_tight(x)]
        on_rays = [r for r in v.rays if dot(row.normal, r) == 0]
        if not on_verts or (len(on_verts) == len(v.vertices) and len(on_rays) == len(v.rays)):
            continue
        key = (frozenset(on_verts), frozenset(on_rays))
        if key in seen:
            continue
        if _affine_rank(on_verts, on_rays) == d - 1:
            seen.add(key)
            kept.append(row)
    return tuple(kept)


def origin_interior(p):
    """True when p is full-dimensional and 0 strictly satisfies every facet."""
    try:
        if dim(p) != p.ambient_dim:
            return False
    except Infeasible:
        return False
    return all(row.rhs < 0 for row in facets(p))


def polar_dual(p):
    """p° = {y : y·x >= -1 for all x in p}; its vertices are the facet normals scaled to rhs -1."""
    if vertices(p).rays:
        raise OriginNotInterior("polar duality needs a bounded polytope")
    if not origin_interior(p):
        raise OriginNotInterior("the origin is not an interior point")
    verts = [tuple(x / -row.rhs for x in row.normal) for row in facets(p)]
    return VPolytope(p.ambient_dim, tuple(verts))


def polar_hrep(v):
    """H-representation {y : y·x >= -1} of the polar of a V-polytope."""
    return HPolytope(v.ambient_dim, tuple(
        Row(x, -1, f"polar:{i}") for i, x in enumerate(v.vertices)))


def face(p, tight_labels):
    """p with the named rows turned into equalities (each paired with its opposite row)."""
    rows = list(p.rows)
    for label in sorted(set(tight_labels)):
        r = p.row(label)
        rows.append(Row(tuple(-x for x in r.normal), -r.rhs, f"{label}:eq"))
    return p.with_rows(rows)


def same_vertices(a, b):
    return vertices(a).vertex_set == vertices(b).vertex_set


def scaled_vertices(v, k):
    return frozenset(scale(p, k) for p in v.vertices)
