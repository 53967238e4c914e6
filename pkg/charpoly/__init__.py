"""The cone P(Γ), the polytopes P(Γ,T), Q(Γ,T), Δ(T) and their divisor rays."""
from charpoly.constructions import (
    cone_P,
    delta_lattice,
    polytope_Delta,
    polytope_P,
    polytope_Q,
    triangle_rows,
)
from charpoly.rays import DivisorRay, anticanonical_rays, dual_cone_rays, polytope_from_rays

__all__ = [
    "DivisorRay",
    "anticanonical_rays",
    "cone_P",
    "delta_lattice",
    "dual_cone_rays",
    "polytope_Delta",
    "polytope_P",
    "polytope_Q",
    "polytope_from_rays",
    "triangle_rows",
]
