"""Exact rational polytopes: H/V representations, double description and lattice points."""
from polyhedra.lattice_points import DEFAULT_POINT_CAP, lattice_points
from polyhedra.operations import (
    dilate,
    dim,
    face,
    facets,
    origin_interior,
    polar_dual,
    polar_hrep,
    tight_rank,
    translate,
    vertices,
)
from polyhedra.polytope import HPolytope, Row, VPolytope

__all__ = [
    "DEFAULT_POINT_CAP",
    "HPolytope",
    "Row",
    "VPolytope",
    "dilate",
    "dim",
    "face",
    "facets",
    "lattice_points",
    "origin_interior",
    "polar_dual",
    "polar_hrep",
    "tight_rank",
    "translate",
    "vertices",
]
