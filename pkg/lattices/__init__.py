"""The parity lattice M_Γ, its dual N_Γ and membership tests."""
from lattices.graph_lattice import (
    GraphLattice,
    contains,
    dual_lattice,
    even_lattice,
    incidence_matrix,
    integer_lattice,
    lattice_equal,
    m_lattice,
    n_lattice,
    parity_defects,
    primitive_scale,
)

__all__ = [
    "GraphLattice",
    "contains",
    "dual_lattice",
    "even_lattice",
    "incidence_matrix",
    "integer_lattice",
    "lattice_equal",
    "m_lattice",
    "n_lattice",
    "parity_defects",
    "primitive_scale",
]
