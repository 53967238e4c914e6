"""
Reflexivity of Q(Γ, T).

Q is reflexive when the origin is interior, every vertex of Q lies in M_Γ
and every vertex of the polar dual lies in N_Γ. The three checks are
recorded separately.
"""
import logging
from dataclasses import dataclass, field

from charpoly.constructions import polytope_Q
from common.rational import format_vector
from lattices.graph_lattice import contains, m_lattice, n_lattice, parity_defects
from polyhedra.operations import origin_interior, polar_dual, vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReflexivityResult:
    reflexive: bool
    non_lattice_vertices: tuple = ()
    dual_check: bool = False
    origin_interior: bool = False
    vertex_count: int = 0
    parity_defects: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {
            "reflexive": self.reflexive,
            "non_lattice_vertices": [format_vector(v) for v in self.non_lattice_vertices],
            "dual_check": self.dual_check,
            "origin_interior": self.origin_interior,
            "vertex_count": self.vertex_count,
            "parity_defects": {",".join(format_vector(v)): d for v, d in self.parity_defects.items()},
        }


def check_reflexive(g, t, q_builder=polytope_Q):
    q = q_builder(g, t)
    verts = vertices(q).vertices
    m = m_lattice(g)
    outside = tuple(v for v in verts if not contains(m, v))
    # vertices with integer coordinates but odd vertex sums
    defects = {v: parity_defects(g, v) for v in outside if all(x.denominator == 1 for x in v)}
    interior = origin_interior(q)
    dual_ok = False
    if interior:
        n = n_lattice(g)
        dual_ok = all(contains(n, y) for y in polar_dual(q).vertices)
    result = ReflexivityResult(
        reflexive=interior and dual_ok and not outside,
        non_lattice_vertices=outside,
        dual_check=dual_ok,
        origin_interior=interior,
        vertex_count=len(verts),
        parity_defects=defects,
    )
    logger.debug("%s: reflexive=%s (%d vertices, %d outside M)",
                 g.label(), result.reflexive, len(verts), len(outside))
    return result
