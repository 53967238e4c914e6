"""
The graph lattices M_Γ and N_Γ.

A lattice is stored as (1/d)·B·Z^n with B a square integer matrix whose
columns generate; M_Γ has d = 1 and N_Γ = Hom(M_Γ, Z) is its
inverse-transpose. Membership solves B·x = d·p exactly and checks that x is
integral.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import lcm

import numpy as np
import sympy as sp

from common.errors import DimensionMismatch, ZeroVector
from common.rational import is_integral, rational_gcd, to_fraction, vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphLattice:
    ambient_dim: int
    denominator: int
    basis: tuple  # columns, each a tuple of ints

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in col) for col in self.basis)
        object.__setattr__(self, "basis", cols)
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if len(cols) != self.ambient_dim or any(len(c) != self.ambient_dim for c in cols):
            raise DimensionMismatch(f"basis must be {self.ambient_dim} columns of length {self.ambient_dim}")
        if self.ambient_dim and self.matrix.det() == 0:
            raise ValueError("lattice basis is singular")

    @property
    def matrix(self):
        """B as a sympy matrix (columns are generators)."""
        return sp.Matrix(self.ambient_dim, self.ambient_dim,
                         lambda i, j: self.basis[j][i])

    @cached_property
    def inverse(self):
        inv = self.matrix.inv()
        return tuple(tuple(to_fraction(inv[i, j]) for j in range(self.ambient_dim))
                     for i in range(self.ambient_dim))

    @property
    def generators(self):
        """Basis columns as rational vectors, with the denominator applied."""
        return [tuple(Fraction(x, self.denominator) for x in col) for col in self.basis]

    def coordinates(self, p):
        """Coefficients x with (1/d)·B·x = p."""
        p = vector(p)
        if len(p) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(p)} in a lattice of rank {self.ambient_dim}")
        scaled = [x * self.denominator for x in p]
        return tuple(sum((a * b for a, b in zip(row, scaled)), Fraction(0)) for row in self.inverse)

    def index(self):
        """Covolume relative to Z^n: |det B| / d^n."""
        return Fraction(abs(int(self.matrix.det())), self.denominator ** self.ambient_dim)

    def to_json(self):
        return {"denominator": self.denominator, "basis": [list(col) for col in self.basis]}

    @classmethod
    def from_json(cls, data):
        basis = data["basis"]
        return cls(len(basis), int(data["denominator"]), tuple(tuple(col) for col in basis))


# --- Parity system ---

def incidence_matrix(g):
    """|V| x |E| integer matrix of endpoint counts; a loop contributes 2."""
    m = np.zeros((g.vertex_count, g.edge_count), dtype=np.int64)
    for eid, (a, b) in enumerate(g.edges):
        m[a, eid] += 1
        m[b, eid] += 1
    return m


def _row_reduce_gf2(m):
    """Reduced row echelon form over GF(2); returns (rows, pivot columns)."""
    m = (m % 2).astype(np.uint8)
    pivots = []
    r = 0
    for c in range(m.shape[1]):
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        m[[r, p]] = m[[p, r]]
        for i in np.nonzero(m[:, c])[0]:
            if i != r:
                m[i] ^= m[r]
        pivots.append(c)
        r += 1
        if r == m.shape[0]:
            break
    return m[:r], pivots


def parity_defects(g, a):
    """Vertices where the incident sum of a (loops twice) is not an even integer."""
    a = vector(a)
    if len(a) != g.edge_count:
        raise DimensionMismatch(f"edge vector of length {len(a)} for {g.edge_count} edges")
    m = incidence_matrix(g)
    defects = []
    for v in range(g.vertex_count):
        total = sum((int(m[v, e]) * a[e] for e in g.edge_ids), Fraction(0))
        if total.denominator != 1 or total.numerator % 2:
            defects.append(v)
    return defects


# --- Constructors ---

def m_lattice(g):
    """M_Γ: integer edge vectors with an even incident sum at every vertex.

    Free columns of the GF(2) parity system contribute kernel vectors, pivot
    columns contribute 2·e_p, so |det B| = 2^rank.
    """
    g.require_connected()
    rows, pivots = _row_reduce_gf2(incidence_matrix(g))
    n = g.edge_count
    columns = []
    for j in range(n):
        col = [0] * n
        if j in pivots:
            col[j] = 2
        else:
            col[j] = 1
            for r, p in enumerate(pivots):
                col[p] = int(rows[r, j])
        columns.append(tuple(col))
    logger.debug("M lattice of %s: parity rank %d", g.label(), len(pivots))
    return GraphLattice(n, 1, tuple(columns))


def dual_lattice(l):
    """{y : <x, y> in Z for all x in l}, i.e. d·B^{-T}."""
    inv = l.inverse
    n = l.ambient_dim
    # column j of B^{-T} is row j of B^{-1}
    cols = [[inv[j][i] * l.denominator for i in range(n)] for j in range(n)]
    d = reduce(lcm, (x.denominator for col in cols for x in col), 1)
    return GraphLattice(n, d, tuple(tuple(int(x * d) for x in col) for col in cols))


def n_lattice(g):
    return dual_lattice(m_lattice(g))


def integer_lattice(n):
    return GraphLattice(n, 1, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))


def even_lattice(n):
    """(2Z)^n, the lattice M_T used for Δ(T)."""
    return GraphLattice(n, 1, tuple(tuple(2 * int(i == j) for i in range(n)) for j in range(n)))


# --- Queries ---

def contains(l, p):
    return is_integral(l.coordinates(p))


def lattice_equal(a, b):
    """Equal as sets: every generator of each lies in the other."""
    if a.ambient_dim != b.ambient_dim:
        return False
    return all(contains(b, g) for g in a.generators) and all(contains(a, g) for g in b.generators)


def primitive_scale(l, v):
    """The positive multiple of v that is primitive in l."""
    v = vector(v)
    coords = l.coordinates(v)
    step = rational_gcd(coords)
    if step == 0:
        raise ZeroVector("the zero vector has no primitive multiple")
    return tuple(x / step for x in v)
