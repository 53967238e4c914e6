"""
Unit tests for the graph lattices M and N.
"""
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from common.errors import DimensionMismatch, DisconnectedGraph, ZeroVector
from common.rational import dot, sub, vector
from graphs.multigraph import Multigraph
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


def diagonal(entries, denominator=1):
    n = len(entries)
    return GraphLattice(n, denominator, tuple(tuple(entries[j] * int(i == j) for i in range(n)) for j in range(n)))


def residue_count(lattice, n):
    """Classes of Z^n modulo a lattice containing 2Z^n, found by pairwise membership of 0/1 vectors."""
    reps = []
    for x in product((0, 1), repeat=n):
        if not any(contains(lattice, sub(x, r)) for r in reps):
            reps.append(x)
    return len(reps)


class TestMLattice:
    """Tests for M, the even-vertex-sum lattice."""

    def test_incidence_counts_loops_twice(self, dumbbell):
        """Test that a loop puts 2 in the incidence matrix."""
        g, _ = dumbbell
        assert incidence_matrix(g).tolist() == [[2, 0, 1], [0, 2, 1]]

    def test_dumbbell(self, dumbbell):
        """Test that M of the dumbbell is Z x Z x 2Z."""
        g, _ = dumbbell
        m = m_lattice(g)
        assert lattice_equal(m, diagonal((1, 1, 2)))
        assert m.index() == 2
        assert contains(m, (-2, -2, -2))
        assert not contains(m, (0, 0, 1))

    def test_k4_index(self, k4_star):
        """Test that the parity system of K4 has rank 3."""
        g, _ = k4_star
        assert m_lattice(g).index() == 8

    @pytest.mark.parametrize("pair", ["dumbbell", "theta", "k4_star", "star3"])
    def test_index_matches_residue_count(self, pair, request):
        """Test the index of M against a direct count of residues of Z^E."""
        g, _ = request.getfixturevalue(pair)
        m = m_lattice(g)
        assert residue_count(m, g.edge_count) == m.index()

    def test_membership_matches_parity(self, k4_star):
        """Test that seeded integer points lie in M exactly when every vertex sum is even."""
        g, _ = k4_star
        m = m_lattice(g)
        rng = np.random.default_rng(3)
        for row in rng.integers(-4, 5, size=(40, g.edge_count)):
            x = tuple(int(v) for v in row)
            assert contains(m, x) == (not parity_defects(g, x))

    def test_k4_odd_vertex(self, k4_star):
        """Test that the integer point with odd sums at two vertices is outside M."""
        g, _ = k4_star
        red = (1, 1, 1, -2, 1, 1)
        assert not contains(m_lattice(g), red)
        assert parity_defects(g, red) == [1, 2]

    def test_half_integral_point_outside(self, dumbbell):
        """Test that a fractional point is never in M."""
        g, _ = dumbbell
        assert not contains(m_lattice(g), (Fraction(1, 2), 0, 0))
        assert parity_defects(g, (Fraction(1, 2), 0, 0)) == [0]

    def test_disconnected_rejected(self):
        """Test that M needs a connected graph."""
        with pytest.raises(DisconnectedGraph):
            m_lattice(Multigraph(2, ((0, 0), (1, 1))))

    def test_wrong_length(self, dumbbell):
        """Test that membership checks the vector length."""
        g, _ = dumbbell
        with pytest.raises(DimensionMismatch):
            contains(m_lattice(g), (0, 0))


class TestNLattice:
    """Tests for N = Hom(M, Z)."""

    def test_dumbbell(self, dumbbell):
        """Test that N of the dumbbell is Z x Z x (1/2)Z."""
        g, _ = dumbbell
        assert lattice_equal(n_lattice(g), diagonal((2, 2, 1), denominator=2))

    def test_star3_halves_tree_edges(self, star3):
        """Test that N of a loop-tree is integral on loops and half-integral on tree edges."""
        g, _ = star3
        n = n_lattice(g)
        assert contains(n, (Fraction(1, 2), 0, 0, 0, 0, 0))
        assert not contains(n, (0, 0, 0, Fraction(1, 2), 0, 0))

    def test_pairing_integral(self, k4_star):
        """Test that every generator of N pairs integrally with every generator of M."""
        g, _ = k4_star
        m, n = m_lattice(g), n_lattice(g)
        assert all(dot(a, b).denominator == 1 for a in m.generators for b in n.generators)

    def test_double_dual(self, k4_star):
        """Test that the dual of N is M again."""
        g, _ = k4_star
        assert lattice_equal(dual_lattice(n_lattice(g)), m_lattice(g))

    def test_m_inside_n(self, star3):
        """Test that M is a sublattice of N."""
        g, _ = star3
        n = n_lattice(g)
        assert all(contains(n, x) for x in m_lattice(g).generators)


class TestPrimitiveScale:
    """Tests for primitive_scale."""

    def test_dumbbell_example(self, dumbbell):
        """Test the primitive multiple of (2, 0, -1) in N of the dumbbell."""
        g, _ = dumbbell
        assert primitive_scale(n_lattice(g), (2, 0, -1)) == vector((1, 0, Fraction(-1, 2)))

    def test_integer_lattice(self):
        """Test that the content is divided out in Z^n."""
        assert primitive_scale(integer_lattice(3), (2, 4, 6)) == vector((1, 2, 3))

    def test_scale_invariant(self, dumbbell):
        """Test that positive multiples have the same primitive vector."""
        g, _ = dumbbell
        n = n_lattice(g)
        v = (2, 0, -1)
        assert primitive_scale(n, tuple(Fraction(3, 7) * x for x in v)) == primitive_scale(n, v)

    def test_zero_vector(self):
        """Test that the zero vector has no primitive multiple."""
        with pytest.raises(ZeroVector):
            primitive_scale(integer_lattice(2), (0, 0))


class TestGraphLattice:
    """Tests for the GraphLattice container."""

    def test_even_lattice(self):
        """Test membership in (2Z)^n."""
        lattice = even_lattice(2)
        assert contains(lattice, (2, -4))
        assert not contains(lattice, (1, 0))

    def test_singular_basis_rejected(self):
        """Test that a singular basis raises ValueError."""
        with pytest.raises(ValueError):
            GraphLattice(2, 1, ((1, 1), (2, 2)))

    def test_json_round_trip(self, k4_star):
        """Test that a lattice survives JSON serialisation."""
        g, _ = k4_star
        n = n_lattice(g)
        assert GraphLattice.from_json(n.to_json()) == n
