"""
Exact vertex enumeration through cddlib.

A row (n, b) means n·x >= b, which cdd stores as the inequality row
[-b, n]. The Polyhedron conversion runs cdd's double description in
exact rational arithmetic; generator rows with a leading 1 are vertices,
leading 0 are recession rays, and rows in lin_set are lines.
"""
import logging
from fractions import Fraction
from itertools import combinations

import cdd

from common.errors import Infeasible, Unbounded
from common.rational import dot, integer_direction, matrix_rank, solve_square, to_fraction

logger = logging.getLogger(__name__)


def _inequality_matrix(rows, dim):
    data = [[-to_fraction(b)] + [to_fraction(x) for x in n] for n, b in rows]
    if not data:
        # cdd needs at least one row to know the dimension
        data = [[Fraction(0)] * (dim + 1)]
    mat = cdd.Matrix(data, number_type="fraction")
    mat.rep_type = cdd.RepType.INEQUALITY
    return mat


def generators(rows, dim):
    """(points, rays, lines) of {x : n·x >= b} straight from cdd, as Fraction tuples."""
    poly = cdd.Polyhedron(_inequality_matrix(rows, dim))
    gen = poly.get_generators()
    lin = gen.lin_set
    points, rays, lines = [], [], []
    for i in range(gen.row_size):
        row = [Fraction(x) for x in gen[i]]
        if i in lin:
            lines.append(tuple(row[1:]))
        elif row[0] != 0:
            points.append(tuple(x / row[0] for x in row[1:]))
        else:
            rays.append(tuple(row[1:]))
    logger.debug("cdd: %d points, %d rays, %d lines in dimension %d",
                 len(points), len(rays), len(lines), dim)
    return points, rays, lines


def enumerate_vertices(rows, dim):
    """(vertices, recession rays) of {x : n·x >= b} as Fraction tuples.

    Raises Infeasible for an empty polyhedron and Unbounded when it contains
    a line (no vertices exist). Recession rays are primitive integer directions.
    """
    points, rays, lines = generators(rows, dim)
    if not points:
        raise Infeasible("the inequality system has no solution")
    if lines:
        raise Unbounded(f"the polyhedron contains a {len(lines)}-dimensional linear subspace")
    vertices = sorted(set(points))
    recession = sorted({tuple(Fraction(x) for x in integer_direction(r)) for r in rays})
    return vertices, recession


def brute_force_vertices(rows, dim):
    """Vertices by solving every dim-subset of rows. Test oracle for small dimension only."""
    rows = [(tuple(n), b) for n, b in rows]
    found = set()
    for subset in combinations(rows, dim):
        normals = [n for n, _ in subset]
        if matrix_rank(normals) < dim:
            continue
        x = solve_square(normals, [b for _, b in subset])
        if all(dot(n, x) >= b for n, b in rows):
            found.add(x)
    if not found:
        raise Infeasible("no basic feasible point")
    return sorted(found)
