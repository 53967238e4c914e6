"""
Verification suite for the known vertex matrices, lattices and genus classifications.

Each check returns (passed, detail). The core tier runs in seconds; `full`
adds the genus-4 sweeps and K_{3,3}; `stretch` adds the Petersen graph in a
separate process with a time budget, reported as indeterminate when the
budget runs out.
"""
import logging
import multiprocessing
import time
from dataclasses import dataclass

from analysis.classify import classify
from analysis.normality import check_idp, decompose
from analysis.obstruction import obstruction_edges, obstruction_witness
from analysis.reflexivity import check_reflexive
from charpoly.constructions import all_twos, polytope_P, polytope_Q
from charpoly.rays import anticanonical_rays, polytope_from_rays
from common.errors import CharpolyError, ObstructionNotApplicable
from common.rational import format_vector, vector
from graphs.builtins import K4_PATH_TREE, builtin_graph, default_tree
from graphs.enumeration import enumerate_trivalent
from graphs.isomorphism import pair_key, tree_classes
from graphs.multigraph import SpanningTree, is_loop_tree
from lattices.graph_lattice import GraphLattice, contains, lattice_equal, m_lattice, n_lattice
from polyhedra.lattice_points import lattice_points
from polyhedra.operations import dilate, dim, translate, vertices

logger = logging.getLogger(__name__)

DUMBBELL_Q = [(-2, -2, -2), (1, -2, -2), (-2, 1, -2), (1, 1, -2), (1, 1, 4)]
THETA_Q = [(-2, -2, -2), (1, 1, -2), (1, -2, 1), (-2, 1, 1), (1, 1, 4)]
DUMBBELL_3P = [(0, 0, 0), (3, 0, 0), (0, 3, 0), (3, 3, 0), (3, 3, 6)]
THETA_3P = [(0, 0, 0), (3, 3, 0), (3, 0, 3), (0, 3, 3), (3, 3, 6)]
DUMBBELL_P_POINTS = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 2)]
K4_RED_VERTEX = (1, 1, 1, -2, 1, 1)
GENUS3_REFLEXIVE = ("rattle", "star3", "k4")
STRETCH_BUDGET_SECONDS = 30 * 60


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    indeterminate: bool = False
    seconds: float = None

    @property
    def status(self):
        if self.indeterminate:
            return "INDETERMINATE"
        return "PASS" if self.passed else "FAIL"

    def to_json(self, timings=False):
        data = {"name": self.name, "status": self.status, "detail": self.detail}
        if timings:
            data["seconds"] = round(self.seconds or 0.0, 3)
        return data


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self):
        """Indeterminate checks do not fail the suite."""
        return all(c.passed or c.indeterminate for c in self.checks)

    def checklist(self):
        lines = [f"[{c.status}] {c.name}" + (f": {c.detail}" if c.detail else "") for c in self.checks]
        failed = sum(1 for c in self.checks if not (c.passed or c.indeterminate))
        lines.append(f"{len(self.checks) - failed}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_json(self, timings=False):
        return {"passed": self.passed, "checks": [c.to_json(timings) for c in self.checks]}


def _points(rows):
    return frozenset(vector(r) for r in rows)


def _diff(expected, actual):
    missing = sorted(expected - actual)
    extra = sorted(actual - expected)
    if not missing and not extra:
        return ""
    return (f"missing {[format_vector(x) for x in missing]} "
            f"unexpected {[format_vector(x) for x in extra]}")


def _pairs(genus):
    for graph in enumerate_trivalent(genus):
        for tree in tree_classes(graph):
            yield graph, tree


# --- Core checks ---

def check_genus2_vertices(q_builder):
    details = []
    for name, golden in (("dumbbell", DUMBBELL_Q), ("theta", THETA_Q)):
        g = builtin_graph(name)
        actual = vertices(q_builder(g, default_tree(name))).vertex_set
        diff = _diff(_points(golden), actual)
        if diff:
            details.append(f"{name}: {diff}")
        m = m_lattice(g)
        odd = [v for v in actual if not contains(m, v)]
        if odd:
            details.append(f"{name}: {len(odd)} vertices outside M")
    return not details, "; ".join(details)


def check_genus2_dilates(q_builder):
    details = []
    for name, golden in (("dumbbell", DUMBBELL_3P), ("theta", THETA_3P)):
        g, t = builtin_graph(name), default_tree(name)
        p3 = vertices(dilate(polytope_P(g, t), 3)).vertex_set
        shifted = vertices(translate(q_builder(g, t), all_twos(g))).vertex_set
        diff = _diff(_points(golden), p3)
        if diff:
            details.append(f"{name} 3P: {diff}")
        if shifted != p3:
            details.append(f"{name}: Q + 2 differs from 3P")
    return not details, "; ".join(details)


def check_dumbbell_lattice(q_builder):
    g = builtin_graph("dumbbell")
    expected = GraphLattice(3, 1, ((1, 0, 0), (0, 1, 0), (0, 0, 2)))
    points = _points(DUMBBELL_P_POINTS)
    actual = frozenset(lattice_points(polytope_P(g, default_tree("dumbbell")), m_lattice(g)))
    details = []
    if not lattice_equal(m_lattice(g), expected):
        details.append("M is not Z + Z + 2Z")
    diff = _diff(points, actual)
    if diff:
        details.append(f"P lattice points: {diff}")
    return not details, "; ".join(details)


def check_loop_tree_lattices(q_builder):
    g, t = builtin_graph("star3"), default_tree("star3")
    n = g.edge_count
    m_cols = tuple(tuple((2 if e in t.tree_edges else 1) * int(i == e) for i in range(n)) for e in range(n))
    n_cols = tuple(tuple((1 if e in t.tree_edges else 2) * int(i == e) for i in range(n)) for e in range(n))
    m_ok = lattice_equal(m_lattice(g), GraphLattice(n, 1, m_cols))
    n_ok = lattice_equal(n_lattice(g), GraphLattice(n, 2, n_cols))
    return m_ok and n_ok, "" if m_ok and n_ok else f"M matches: {m_ok}, N matches: {n_ok}"


def check_k4(q_builder):
    g = builtin_graph("k4")
    m = m_lattice(g)
    star = vertices(q_builder(g, default_tree("k4"))).vertices
    path = vertices(q_builder(g, SpanningTree.of(g, K4_PATH_TREE))).vertices
    outside = [v for v in path if not contains(m, v)]
    details = []
    if len(star) != 15 or not all(contains(m, v) for v in star):
        details.append(f"trivalent tree: {len(star)} vertices")
    if len(path) != 16 or outside != [vector(K4_RED_VERTEX)]:
        details.append(f"path tree: {len(path)} vertices, outside M {[format_vector(v) for v in outside]}")
    return not details, "; ".join(details)


def check_translation_lemma(q_builder):
    bad = []
    for genus in (2, 3):
        for g, t in _pairs(genus):
            p3 = vertices(dilate(polytope_P(g, t), 3)).vertex_set
            if vertices(translate(q_builder(g, t), all_twos(g))).vertex_set != p3:
                bad.append(f"{g.label()} {t.tree_list}")
    return not bad, ", ".join(bad)


def check_dimension(q_builder):
    bad = []
    for genus in (2, 3):
        for g, t in _pairs(genus):
            if dim(polytope_P(g, t)) != 3 * genus - 3:
                bad.append(f"{g.label()} {t.tree_list}")
    return not bad, ", ".join(bad)


def check_classification(q_builder):
    details = []
    genus2 = classify(2, progress=False)
    if len(genus2) != 2 or not all(r.reflexive for r in genus2):
        details.append(f"genus 2: {sum(r.reflexive for r in genus2)}/{len(genus2)} reflexive")
    genus3 = classify(3, progress=False)
    found = {pair_key(r.graph, r.tree) for r in genus3 if r.reflexive}
    expected = {pair_key(builtin_graph(n), default_tree(n)) for n in GENUS3_REFLEXIVE}
    if found != expected:
        details.append(f"genus 3: {len(found)} reflexive classes, expected {len(expected)}")
    return not details, "; ".join(details)


def check_obstruction_gate(q_builder):
    g = builtin_graph("k4")
    try:
        obstruction_witness(g, SpanningTree.of(g, K4_PATH_TREE), 0)
    except ObstructionNotApplicable:
        pass
    else:
        return False, "K4 accepted as an obstruction instance"
    g, t = builtin_graph("pendant_triangle"), default_tree("pendant_triangle")
    obstruction_witness(g, t, 2)
    verdict = check_reflexive(g, t, q_builder)
    return not verdict.reflexive, "" if not verdict.reflexive else "pendant triangle tested reflexive"


def check_anticanonical_rays(q_builder):
    bad = []
    for name in ("dumbbell", "theta", "k4", "star3"):
        g, t = builtin_graph(name), default_tree(name)
        rays = anticanonical_rays(g, t)
        rebuilt = vertices(polytope_from_rays(rays, g.edge_count)).vertex_set
        if rebuilt != vertices(q_builder(g, t)).vertex_set:
            bad.append(f"{name}: rebuilt polytope differs")
        if not all(r.primitive for r in rays):
            bad.append(f"{name}: non-primitive ray")
    return not bad, "; ".join(bad)


def check_normality_small(q_builder):
    details = []
    for name in ("dumbbell", "star3"):
        result = check_idp(builtin_graph(name), default_tree(name), 3)
        if not result.normal:
            details.append(f"{name}: {len(result.failures)} failures")
    g, t = builtin_graph("dumbbell"), default_tree("dumbbell")
    pieces = decompose((2, 2, 2), 2, g, t)
    if sorted(pieces) != sorted(_points([(1, 1, 2), (1, 1, 0)])):
        details.append(f"decompose(2,2,2) gave {[format_vector(p) for p in pieces]}")
    return not details, "; ".join(details)


# --- Full checks ---

def check_loop_trees(q_builder):
    bad, seen = [], 0
    for genus in (2, 3, 4):
        for g, t in _pairs(genus):
            if not is_loop_tree(g, t):
                continue
            seen += 1
            if not check_reflexive(g, t, q_builder).reflexive:
                bad.append(f"{g.label()} {t.tree_list} not reflexive")
            if not check_idp(g, t, 3).normal:
                bad.append(f"{g.label()} {t.tree_list} fails IDP")
    return not bad and seen > 0, "; ".join(bad) or f"{seen} loop-trees"


def check_obstruction_sweep(q_builder):
    bad, seen = [], 0
    for g, t in _pairs(4):
        edges = obstruction_edges(g, t)
        if not edges:
            continue
        seen += 1
        for f in edges:
            try:
                obstruction_witness(g, t, f)
            except CharpolyError as exc:
                bad.append(f"{g.label()} {t.tree_list} f={f}: {exc}")
        if check_reflexive(g, t, q_builder).reflexive:
            bad.append(f"{g.label()} {t.tree_list} reflexive despite obstruction")
    return not bad and seen > 0, "; ".join(bad) or f"{seen} pairs with a witness"


def check_k33(q_builder):
    g = builtin_graph("k33")
    trees = tree_classes(g)
    reflexive = [t.tree_list for t in trees if check_reflexive(g, t, q_builder).reflexive]
    return not reflexive, f"{len(trees)} tree classes" + (f", reflexive: {reflexive}" if reflexive else "")


# --- Stretch ---

def _petersen_verdict():
    return check_reflexive(builtin_graph("petersen"), default_tree("petersen")).reflexive


def check_petersen(q_builder, budget=STRETCH_BUDGET_SECONDS):
    with multiprocessing.Pool(1) as pool:
        pending = pool.apply_async(_petersen_verdict)
        try:
            reflexive = pending.get(timeout=budget)
        except multiprocessing.TimeoutError:
            pool.terminate()
            return None, f"no verdict within {budget} s"
    return not reflexive, "" if not reflexive else "Petersen tested reflexive"


CORE_CHECKS = (
    ("genus-2 vertex matrices of Q", check_genus2_vertices),
    ("genus-2 third dilates equal Q + 2", check_genus2_dilates),
    ("dumbbell lattice and lattice points", check_dumbbell_lattice),
    ("loop-tree M and N lattices", check_loop_tree_lattices),
    ("K4 vertex matrices for both trees", check_k4),
    ("translation lemma for genus <= 3", check_translation_lemma),
    ("dim P = 3g - 3 for genus <= 3", check_dimension),
    ("genus 2 and 3 classification", check_classification),
    ("obstruction gate and pendant triangle", check_obstruction_gate),
    ("anticanonical rays rebuild Q", check_anticanonical_rays),
    ("IDP for small loop-trees", check_normality_small),
)

FULL_CHECKS = (
    ("loop-trees of genus <= 4 are reflexive and IDP", check_loop_trees),
    ("genus-4 obstruction witnesses", check_obstruction_sweep),
    ("K_{3,3} is never reflexive", check_k33),
)

STRETCH_CHECKS = (
    ("Petersen graph is not reflexive", check_petersen),
)


def run_verification(full=False, stretch=False, q_builder=polytope_Q):
    """Run the suite; q_builder lets a test substitute a deliberately broken Q."""
    selected = list(CORE_CHECKS)
    if full:
        selected += FULL_CHECKS
    if stretch:
        selected += STRETCH_CHECKS
    results = []
    for name, check in selected:
        started = time.perf_counter()
        try:
            passed, detail = check(q_builder)
        except CharpolyError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - started
        indeterminate = passed is None
        results.append(CheckResult(name, bool(passed), detail, indeterminate, elapsed))
        logger.info("%s: %s", name, results[-1].status)
    return VerificationReport(tuple(results))
