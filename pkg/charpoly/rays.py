"""
Divisor ray data for the toric side.

The dual cone of the extended cone {(a, b) : a in P(Γ), a(l) <= b(l)} lives
in N_Γ x Z^F. Coordinates are laid out as the |E| edge coordinates b_e
followed by one coordinate d_l per free edge, in free-edge order.
"""
import logging
from dataclasses import dataclass

from charpoly.constructions import as_tree, cone_P, polytope_Q
from common.rational import format_vector, vector
from lattices.graph_lattice import n_lattice, primitive_scale
from polyhedra.operations import facets
from polyhedra.polytope import HPolytope, Row

logger = logging.getLogger(__name__)

TRIANGLE, BOUNDARY, FAMILY = "triangle", "boundary", "family"


@dataclass(frozen=True)
class DivisorRay:
    generator: tuple
    kind: str
    label: str
    primitive: bool = True

    def __post_init__(self):
        object.__setattr__(self, "generator", vector(self.generator))

    def to_json(self):
        return {"generator": format_vector(self.generator), "kind": self.kind,
                "label": self.label, "primitive": self.primitive}


def dual_cone_rays(g, t):
    """Family rays d_l - b_l, then (v, 0) for each primitive ray v of P(Γ)^∨."""
    tree = as_tree(g, t)
    free = tree.free_list
    n_edges = g.edge_count
    lattice = n_lattice(g)
    rays = []
    for i, ell in enumerate(free):
        gen = [0] * (n_edges + len(free))
        gen[ell] = -1
        gen[n_edges + i] = 1
        rays.append(DivisorRay(tuple(gen), FAMILY, f"fam:e{ell}"))
    for row in facets(cone_P(g)):
        v = primitive_scale(lattice, row.normal)
        rays.append(DivisorRay(tuple(v) + (0,) * len(free), TRIANGLE, row.label))
    logger.debug("%s: %d dual cone rays", g.label(), len(rays))
    return rays


def anticanonical_rays(g, t):
    """Ray generators of the torus-invariant prime divisors, read off the rows of Q(Γ, T).

    Triangle rows give (±b_e ± b_f ± b_h)/2, boundary rows give -b_l; each is
    checked for primitivity in N_Γ and flagged if it is not.
    """
    lattice = n_lattice(g)
    rays = []
    for row in polytope_Q(g, t).rows:
        kind = BOUNDARY if row.label.startswith("bnd:") else TRIANGLE
        primitive = primitive_scale(lattice, row.normal) == row.normal
        if not primitive:
            logger.warning("%s: ray %s is not primitive in N", g.label(), row.label)
        rays.append(DivisorRay(row.normal, kind, row.label, primitive))
    return rays


def polytope_from_rays(rays, ambient_dim):
    """{x : <ray, x> >= -1 for every triangle and boundary ray}."""
    rows = tuple(Row(r.generator, -1, r.label) for r in rays if r.kind in (TRIANGLE, BOUNDARY))
    return HPolytope(ambient_dim, rows)
