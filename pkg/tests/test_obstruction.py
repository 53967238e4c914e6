"""
Unit tests for the non-reflexivity witness.
"""
from fractions import Fraction

import pytest

from analysis.obstruction import obstruction_edges, obstruction_witness
from analysis.reflexivity import check_reflexive
from charpoly.constructions import polytope_P
from common.errors import ObstructionNotApplicable
from graphs.builtins import builtin_graph, default_tree
from graphs.enumeration import enumerate_trivalent
from graphs.isomorphism import tree_classes
from lattices.graph_lattice import contains, m_lattice
from polyhedra.operations import dilate, tight_rank


class TestObstructionWitness:
    """Tests for obstruction_witness and obstruction_edges."""

    def test_pendant_triangle_edge(self, pendant_triangle):
        """Test that the free triangle edge is the only applicable edge."""
        assert obstruction_edges(*pendant_triangle) == [2]

    def test_pendant_triangle_witness(self, pendant_triangle):
        """Test the witness point: 3 on the path, 3/2 on its two loops."""
        g, t = pendant_triangle
        v = obstruction_witness(g, t, 2)
        half = Fraction(3, 2)
        assert v == (3, 0, 3, 0, 3, 3, 0, half, half)

    def test_witness_is_vertex_outside_m(self, pendant_triangle):
        """Test that the witness is a vertex of 3P that is not in M."""
        g, t = pendant_triangle
        v = obstruction_witness(g, t, 2)
        p3 = dilate(polytope_P(g, t), 3)
        assert p3.contains(v)
        assert tight_rank(p3, v) == g.edge_count
        assert not contains(m_lattice(g), v)

    def test_pendant_triangle_not_reflexive(self, pendant_triangle):
        """Test that the obstruction agrees with the direct reflexivity check."""
        assert not check_reflexive(*pendant_triangle).reflexive

    def test_no_loops(self, k4_path):
        """Test that a loopless graph does not meet the hypotheses."""
        g, t = k4_path
        assert obstruction_edges(g, t) == []
        with pytest.raises(ObstructionNotApplicable):
            obstruction_witness(g, t, 0)

    def test_single_loop(self):
        """Test that one loop is not enough."""
        g, t = builtin_graph("rattle"), default_tree("rattle")
        assert obstruction_edges(g, t) == []
        with pytest.raises(ObstructionNotApplicable):
            obstruction_witness(g, t, 4)

    def test_tree_edge_rejected(self, pendant_triangle):
        """Test that a tree edge is never a witness edge."""
        g, t = pendant_triangle
        with pytest.raises(ObstructionNotApplicable):
            obstruction_witness(g, t, 0)

    @pytest.mark.slow
    def test_genus_four_sweep(self):
        """Test that every applicable genus-4 pair has a verified witness and is not reflexive."""
        for g in enumerate_trivalent(4):
            for t in tree_classes(g):
                edges = obstruction_edges(g, t)
                for f in edges:
                    obstruction_witness(g, t, f)
                if edges:
                    assert not check_reflexive(g, t).reflexive
