"""
Pytest configuration and shared fixtures for the graph polytope test suite.
"""
import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from graphs.builtins import K4_PATH_TREE, builtin_graph, default_tree  # noqa: E402
from graphs.multigraph import Multigraph, SpanningTree  # noqa: E402
from polyhedra.polytope import HPolytope, Row  # noqa: E402


@pytest.fixture
def dumbbell():
    """Two loops joined by a bridge; edges (l1, l2, e)."""
    return builtin_graph("dumbbell"), default_tree("dumbbell")


@pytest.fixture
def theta():
    """Three parallel edges between two vertices, tree {2}."""
    return builtin_graph("theta"), default_tree("theta")


@pytest.fixture
def k4_star():
    """K4 with the trivalent (star) spanning tree {3, 4, 5}."""
    return builtin_graph("k4"), default_tree("k4")


@pytest.fixture
def k4_path():
    """K4 with the path spanning tree {1, 3, 5}."""
    g = builtin_graph("k4")
    return g, SpanningTree.of(g, K4_PATH_TREE)


@pytest.fixture
def star3():
    """The genus-3 loop-tree over the three-edge star."""
    return builtin_graph("star3"), default_tree("star3")


@pytest.fixture
def pendant_triangle():
    """Genus-4 triangle with a pendant loop at each corner."""
    return builtin_graph("pendant_triangle"), default_tree("pendant_triangle")


@pytest.fixture
def h_tree():
    """Trivalent tree with two internal vertices 0 and 1 joined by edge 0."""
    return Multigraph(6, ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5)), name="h_tree")


def box(lo, hi, dim):
    rows = []
    for i in range(dim):
        unit = tuple(int(i == j) for j in range(dim))
        rows.append(Row(unit, lo, f"lo{i}"))
        rows.append(Row(tuple(-x for x in unit), -hi, f"hi{i}"))
    return HPolytope(dim, tuple(rows))


@pytest.fixture
def unit_cube():
    """[0, 1]^3 as six labelled rows."""
    return box(0, 1, 3)


@pytest.fixture
def symmetric_cube():
    """[-1, 1]^3."""
    return box(-1, 1, 3)
