"""
Named graphs with their standard spanning trees.

Edge orders are fixed: the dumbbell and theta graph use (l1, l2, e) with
T = {e}; K4 uses (l1, l2, l3, e4, e5, e6), so the trivalent tree is
{3, 4, 5} and the path tree is {1, 3, 5}.
"""
from common.errors import UsageError
from graphs.multigraph import Multigraph, SpanningTree


def dumbbell():
    return Multigraph(2, ((0, 0), (1, 1), (0, 1)), name="dumbbell")


def theta():
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)), name="theta")


def k4():
    return Multigraph(4, ((0, 2), (0, 1), (1, 2), (0, 3), (1, 3), (2, 3)), name="k4")


def rattle():
    # loop at 0, bridge 0-1, tree edges 1-2 and 1-3, two parallel free edges 2-3
    return Multigraph(4, ((0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)), name="rattle")


def star3():
    return Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3)), name="star3")


def pendant_triangle():
    # triangle 0-1-2 with a pendant loop vertex at each corner
    return Multigraph(6, ((0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 3), (4, 4), (5, 5)),
                      name="pendant_triangle")


def petersen():
    outer = tuple((i, (i + 1) % 5) for i in range(5))
    spokes = tuple((i, i + 5) for i in range(5))
    inner = tuple((5 + i, 5 + (i + 2) % 5) for i in range(5))
    return Multigraph(10, outer + spokes + inner, name="petersen")


def k33():
    return Multigraph(6, tuple((a, b) for a in range(3) for b in range(3, 6)), name="k33")


BUILTIN_GRAPHS = {
    "dumbbell": dumbbell,
    "theta": theta,
    "k4": k4,
    "rattle": rattle,
    "star3": star3,
    "pendant_triangle": pendant_triangle,
    "petersen": petersen,
    "k33": k33,
}

DEFAULT_TREES = {
    "dumbbell": (2,),
    "theta": (2,),
    "k4": (3, 4, 5),
    "rattle": (1, 2, 3),
    "star3": (0, 1, 2),
    "pendant_triangle": (0, 1, 3, 4, 5),
    "petersen": (0, 1, 2, 3, 5, 6, 7, 8, 9),
    "k33": (0, 1, 2, 3, 6),
}

K4_PATH_TREE = (1, 3, 5)


def builtin_graph(name):
    try:
        return BUILTIN_GRAPHS[name]()
    except KeyError:
        raise UsageError(f"unknown builtin graph {name!r}; choose from {', '.join(sorted(BUILTIN_GRAPHS))}") from None


def default_tree(name):
    graph = builtin_graph(name)
    return SpanningTree.of(graph, DEFAULT_TREES[name])
