"""
Integer decomposition property up to a fixed dilate.

For k = 2..k_max, the k-fold sumset of the lattice points of p is compared
with the lattice points of k·p. Points of k·p outside the sumset are
failures. When an enumeration exceeds the point cap the verdict is
indeterminate, never false.
"""
import logging
from dataclasses import dataclass

from charpoly.constructions import as_tree, polytope_P
from common.errors import NoDecomposition, PointOutsideDilate, ResourceLimit
from common.rational import add, format_vector, sub, vector, zero_vector
from lattices.graph_lattice import contains, m_lattice
from polyhedra.lattice_points import DEFAULT_POINT_CAP, lattice_points
from polyhedra.operations import dilate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalityResult:
    normal_up_to: int
    failures: tuple = ()
    indeterminate: bool = False
    point_counts: tuple = ()  # lattice points of p, 2p, ..., as far as computed

    @property
    def normal(self):
        return not self.failures and not self.indeterminate

    def to_json(self):
        return {
            "normal_up_to": self.normal_up_to,
            "failures": [{"degree": k, "point": format_vector(p)} for k, p in self.failures],
            "indeterminate": self.indeterminate,
            "point_counts": list(self.point_counts),
        }


def check_idp_polytope(p, lattice, k_max=3, cap=DEFAULT_POINT_CAP):
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    failures, counts = [], []
    try:
        base = lattice_points(p, lattice, cap)
        counts.append(len(base))
        sums = set(base)
        for k in range(2, k_max + 1):
            sums = {add(a, b) for a in sums for b in base}
            if len(sums) > cap:
                raise ResourceLimit(f"sumset of degree {k} exceeds {cap} points")
            target = lattice_points(dilate(p, k), lattice, cap)
            counts.append(len(target))
            missing = sorted(set(target) - sums)
            failures.extend((k, x) for x in missing)
            logger.debug("degree %d: %d points, %d not decomposable", k, len(target), len(missing))
    except ResourceLimit as exc:
        logger.info("IDP check indeterminate: %s", exc)
        return NormalityResult(k_max, tuple(failures), True, tuple(counts))
    return NormalityResult(k_max, tuple(failures), False, tuple(counts))


def check_idp(g, t, k_max=3, cap=DEFAULT_POINT_CAP):
    return check_idp_polytope(polytope_P(g, t), m_lattice(g), k_max, cap)


def decompose(w, k, g, t, cap=DEFAULT_POINT_CAP):
    """k lattice points of P(Γ, T) summing to w.

    Depth-first over degree-1 points in non-increasing order, preferring
    large values on tree edges; a remainder is only explored if it lies in
    the matching dilate, and dead (remainder, degree, position) states are
    remembered.
    """
    tree = as_tree(g, t)
    w = vector(w)
    lattice = m_lattice(g)
    p = polytope_P(g, tree)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not dilate(p, k).contains(w) or not contains(lattice, w):
        raise PointOutsideDilate(f"{format_vector(w)} is not a lattice point of {k}P")
    tree_ids, free_ids = tree.tree_list, tree.free_list
    points = sorted(lattice_points(p, lattice, cap),
                    key=lambda x: (tuple(-x[e] for e in tree_ids), tuple(-x[e] for e in free_ids)))
    dilates = {j: dilate(p, j) for j in range(1, k)}
    zero = zero_vector(g.edge_count)
    dead = set()

    def inside(rest, j):
        return rest == zero if j == 0 else dilates[j].contains(rest)

    def search(rest, j, start):
        if j == 0:
            return [] if rest == zero else None
        if (rest, j, start) in dead:
            return None
        for i in range(start, len(points)):
            remainder = sub(rest, points[i])
            if inside(remainder, j - 1):
                found = search(remainder, j - 1, i)
                if found is not None:
                    return [points[i]] + found
        dead.add((rest, j, start))
        return None

    result = search(w, k, 0)
    if result is None:
        raise NoDecomposition(f"{format_vector(w)} is not a sum of {k} lattice points of P")
    return result
