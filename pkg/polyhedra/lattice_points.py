"""
Lattice points of a bounded H-polytope.

The lattice (1/d)·B·Z^n is rewritten by unimodular column operations as
(1/d)·H·Z^n with H lower triangular, so coordinate i of a point depends only
on the first i + 1 coefficients. The coefficients are walked in order, each
range cut down by the exact bounding box of the vertices, and every
inequality is checked as soon as all coordinates in its support are fixed.
"""
import logging
from fractions import Fraction
from math import ceil, floor

from common.errors import ResourceLimit, Unbounded
from common.rational import integer_direction
from polyhedra.operations import vertices

logger = logging.getLogger(__name__)

DEFAULT_POINT_CAP = 10 ** 7


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def lower_triangular_basis(columns):
    """Column-reduce a nonsingular integer basis to lower triangular form with a positive diagonal."""
    n = len(columns)
    cols = [list(c) for c in columns]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = cols[i][i], cols[j][i]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ci, cj = cols[i], cols[j]
            cols[i] = [x * u + y * v for u, v in zip(ci, cj)]
            cols[j] = [(-b // g) * u + (a // g) * v for u, v in zip(ci, cj)]
        if cols[i][i] < 0:
            cols[i] = [-u for u in cols[i]]
    return cols


def lattice_points(p, lattice, cap=DEFAULT_POINT_CAP):
    """All points of the lattice inside p, sorted lexicographically."""
    v = vertices(p)
    if v.rays:
        raise Unbounded("lattice points of an unbounded polyhedron")
    n = p.ambient_dim
    d = lattice.denominator
    if n == 0:
        return [()]
    lo = [min(x[i] for x in v.vertices) for i in range(n)]
    hi = [max(x[i] for x in v.vertices) for i in range(n)]
    h = lower_triangular_basis(lattice.basis)

    # rows as integer checks on y = d·x, grouped by the last coordinate they touch
    checks = [[] for _ in range(n)]
    for row in p.rows:
        vec = integer_direction(tuple(row.normal) + (-row.rhs,))
        normal, neg_rhs = vec[:-1], vec[-1]
        support = [k for k in range(n) if normal[k]]
        if not support:
            continue
        checks[support[-1]].append((normal, neg_rhs * d))

    found = []
    y = [0] * n

    def walk(i, partial):
        # partial[k] = sum_{j < i} h[j][k] * c_j for k >= i
        diag = h[i][i]
        s = partial[i]
        c_lo = ceil((d * lo[i] - s) / diag)
        c_hi = floor((d * hi[i] - s) / diag)
        for c in range(c_lo, c_hi + 1):
            y[i] = s + diag * c
            if not all(sum(a * b for a, b in zip(normal, y[:i + 1])) + offset >= 0
                       for normal, offset in checks[i]):
                continue
            if i == n - 1:
                found.append(tuple(y))
                if len(found) > cap:
                    raise ResourceLimit(f"more than {cap} lattice points")
                continue
            nxt = [partial[k] + h[i][k] * c if k > i else 0 for k in range(n)]
            walk(i + 1, nxt)

    walk(0, [0] * n)
    points = sorted(tuple(Fraction(x, d) for x in pt) for pt in found)
    logger.debug("%d lattice points in dimension %d", len(points), n)
    return points
