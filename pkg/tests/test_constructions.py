"""
Unit tests for the graph polytope constructions.
"""
from fractions import Fraction

import pytest

from charpoly.constructions import (
    all_twos,
    as_tree,
    cone_P,
    delta_lattice,
    polytope_Delta,
    polytope_P,
    polytope_Q,
    triangle_rows,
)
from common.errors import InvalidTree, NotTrivalent, NotTrivalentTree, Unbounded
from common.rational import vector
from graphs.enumeration import enumerate_trivalent
from graphs.isomorphism import tree_classes
from graphs.multigraph import Multigraph, betti, contract_split
from lattices.graph_lattice import contains, m_lattice
from polyhedra.lattice_points import lattice_points
from polyhedra.operations import dilate, dim, face, origin_interior, translate, vertices


def vertex_set(rows):
    return {vector(r) for r in rows}


class TestTriangleRows:
    """Tests for the triangle inequalities."""

    def test_k4_has_twelve(self, k4_star):
        """Test that K4 has three distinct rows at each of its four vertices."""
        g, _ = k4_star
        assert len(triangle_rows(g)) == 12

    def test_loop_vertex_duplicate_removed(self, dumbbell):
        """Test that the repeated a(e) >= 0 row at a loop vertex is emitted once."""
        g, _ = dumbbell
        rows = triangle_rows(g)
        assert len(rows) == 3
        assert len(triangle_rows(g, dedup=False)) == 6
        assert {r.normal for r in rows} == {vector((0, 0, 1)), vector((2, 0, -1)), vector((0, 2, -1))}

    def test_theta_rows_shared(self, theta):
        """Test that both theta vertices produce the same three rows."""
        g, _ = theta
        assert len(triangle_rows(g)) == 3

    def test_labels(self, dumbbell):
        """Test the row labels of P."""
        p = polytope_P(*dumbbell)
        assert p.labels == ["tri:v0:++-", "tri:v0:+-+", "tri:v1:++-", "bnd:e0", "bnd:e1"]

    def test_not_trivalent(self):
        """Test that a non-trivalent graph is rejected."""
        with pytest.raises(NotTrivalent):
            triangle_rows(Multigraph(2, ((0, 1), (0, 1))))

    def test_as_tree_rejects_garbage(self, dumbbell):
        """Test that an unreadable tree raises InvalidTree."""
        g, _ = dumbbell
        with pytest.raises(InvalidTree):
            as_tree(g, None)


class TestGenusTwo:
    """Tests for P and Q on the two genus-2 graphs."""

    def test_dumbbell_q(self, dumbbell):
        """Test the vertices of Q for the dumbbell."""
        q = polytope_Q(*dumbbell)
        expected = [(-2, -2, -2), (1, -2, -2), (-2, 1, -2), (1, 1, -2), (1, 1, 4)]
        assert vertices(q).vertex_set == vertex_set(expected)

    def test_theta_q(self, theta):
        """Test the vertices of Q for the theta graph."""
        q = polytope_Q(*theta)
        expected = [(-2, -2, -2), (1, 1, -2), (1, -2, 1), (-2, 1, 1), (1, 1, 4)]
        assert vertices(q).vertex_set == vertex_set(expected)

    def test_dumbbell_third_dilate(self, dumbbell):
        """Test the vertices of 3P for the dumbbell."""
        p3 = dilate(polytope_P(*dumbbell), 3)
        expected = [(0, 0, 0), (3, 0, 0), (0, 3, 0), (3, 3, 0), (3, 3, 6)]
        assert vertices(p3).vertex_set == vertex_set(expected)

    def test_origin_interior(self, theta):
        """Test that 0 is interior to Q."""
        assert origin_interior(polytope_Q(*theta))


class TestTranslation:
    """Tests for Q + 2 = 3P."""

    @pytest.mark.parametrize("genus", [2, 3])
    def test_translation(self, genus):
        """Test that Q shifted by the all-twos vector has the vertices of 3P."""
        for g in enumerate_trivalent(genus):
            for t in tree_classes(g):
                shifted = vertices(translate(polytope_Q(g, t), all_twos(g))).vertex_set
                assert shifted == vertices(dilate(polytope_P(g, t), 3)).vertex_set

    def test_dimension(self, k4_star):
        """Test that P has dimension 3g - 3."""
        g, t = k4_star
        assert dim(polytope_P(g, t)) == 3 * betti(g) - 3 == g.edge_count

    @pytest.mark.parametrize("genus", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_dimension_every_pair(self, genus):
        """Test dim P = 3g - 3 for every graph and tree class of the genus."""
        for g in enumerate_trivalent(genus):
            for t in tree_classes(g):
                assert dim(polytope_P(g, t)) == 3 * genus - 3, (g.label(), t.tree_list)

    def test_interior_point(self, dumbbell):
        """Test that (2/3, 2/3, 2/3) is strictly inside P."""
        p = polytope_P(*dumbbell)
        x = vector([Fraction(2, 3)] * 3)
        assert all(row.slack(x) > 0 for row in p.rows)

    def test_cone_unbounded(self, k4_star):
        """Test that the triangle cone has a ray for each unbounded direction."""
        g, _ = k4_star
        v = vertices(cone_P(g))
        assert v.vertices == (vector([0] * 6),)
        assert v.rays


class TestK4:
    """Tests for the two K4 trees."""

    def test_star_tree(self, k4_star):
        """Test that the trivalent tree gives fifteen vertices, all in M."""
        g, t = k4_star
        verts = vertices(polytope_Q(g, t)).vertices
        m = m_lattice(g)
        assert len(verts) == 15
        assert all(contains(m, v) for v in verts)

    def test_path_tree(self, k4_path):
        """Test that the path tree gives sixteen vertices, one outside M."""
        g, t = k4_path
        verts = vertices(polytope_Q(g, t)).vertices
        assert len(verts) == 16
        assert vector((1, 1, 1, -2, 1, 1)) in verts


class TestFaces:
    """Tests for the product structure of loop-tree faces."""

    def test_star3_leaf_face(self, star3):
        """Test that the face a(0) = 0 of 3P(star3) counts as [0, 3] times 3P(dumbbell)."""
        g, t = star3
        p3 = dilate(polytope_P(g, t), 3)
        face_count = len(lattice_points(face(p3, {"tri:v1:++-"}), m_lattice(g)))
        first, second = contract_split(g, t, 0)
        side = first if first.genus == 2 else second
        side_count = len(lattice_points(dilate(polytope_P(side.graph, side.tree), 3), m_lattice(side.graph)))
        assert side_count == 30
        assert face_count == 4 * side_count


class TestDelta:
    """Tests for Δ(T) of a trivalent tree."""

    def test_single_edge(self):
        """Test that the single-edge tree gives the even points of [0, 2]."""
        t = Multigraph(2, ((0, 1),))
        points = lattice_points(polytope_Delta(t), delta_lattice(t))
        assert points == [vector((0,)), vector((2,))]

    def test_single_edge_without_nonnegativity(self):
        """Test that without w >= 0 the single-edge Δ is a half-line."""
        t = Multigraph(2, ((0, 1),))
        with pytest.raises(Unbounded):
            lattice_points(polytope_Delta(t, leaf_nonnegativity=False), delta_lattice(t))

    def test_star(self):
        """Test the five even points of Δ for the three-edge star."""
        t = Multigraph(4, ((0, 1), (0, 2), (0, 3)))
        points = lattice_points(polytope_Delta(t), delta_lattice(t))
        assert len(points) == 5
        assert vector((2, 0, 0)) not in points

    def test_two_internal_vertices(self, h_tree):
        """Test the thirteen even points of Δ for the tree with two internal vertices."""
        assert len(lattice_points(polytope_Delta(h_tree), delta_lattice(h_tree))) == 13

    def test_leaf_rows_redundant_with_internal_vertex(self, h_tree):
        """Test that w >= 0 on leaves changes nothing once the tree has an internal vertex."""
        with_rows = vertices(polytope_Delta(h_tree)).vertex_set
        without = vertices(polytope_Delta(h_tree, leaf_nonnegativity=False)).vertex_set
        assert with_rows == without

    def test_not_trivalent(self):
        """Test that a path with a degree-2 vertex is rejected."""
        with pytest.raises(NotTrivalentTree):
            polytope_Delta(Multigraph(3, ((0, 1), (1, 2))))
