"""
Genus classification of (graph, spanning tree) pairs.

Every trivalent graph of the genus is paired with one spanning tree per
automorphism class, and each pair gets a reflexivity verdict, optionally an
IDP verdict, and the obstruction flag. Records come back in the order of
the graph enumeration and tree_classes, whatever the worker count.
"""
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from tqdm import tqdm

from analysis.normality import check_idp
from analysis.obstruction import obstruction_edges, obstruction_witness
from analysis.reflexivity import check_reflexive
from common.errors import GenusOutOfRange
from graphs.builtins import BUILTIN_GRAPHS
from graphs.enumeration import enumerate_trivalent
from graphs.isomorphism import canonical_form, tree_classes
from graphs.multigraph import Multigraph, is_loop_tree
from polyhedra.lattice_points import DEFAULT_POINT_CAP

logger = logging.getLogger(__name__)

MAX_DEFAULT_GENUS = 4
MAX_GENUS = 5


@dataclass(frozen=True)
class ClassificationRecord:
    graph: object
    tree: object
    reflexivity: object
    normality: object = None
    q_vertex_count: int = 0
    obstruction_applicable: bool = False
    obstruction_edges: tuple = ()
    obstruction_witnesses: tuple = ()
    loop_tree: bool = False
    seconds: float = field(default=None, compare=False)

    @property
    def reflexive(self):
        return self.reflexivity.reflexive


def classify_pair(task):
    """One record for a (graph, tree, k_max, point_cap, with_normality) task."""
    graph, tree, k_max, point_cap, with_normality = task
    started = time.perf_counter()
    reflexivity = check_reflexive(graph, tree)
    normality = check_idp(graph, tree, k_max, point_cap) if with_normality else None
    edges = tuple(obstruction_edges(graph, tree))
    witnesses = tuple(obstruction_witness(graph, tree, f) for f in edges)
    if edges and reflexivity.reflexive:
        logger.error("%s %s: obstruction applies but Q tested reflexive", graph.label(), tree.tree_list)
    return ClassificationRecord(
        graph=graph,
        tree=tree,
        reflexivity=reflexivity,
        normality=normality,
        q_vertex_count=reflexivity.vertex_count,
        obstruction_applicable=bool(edges),
        obstruction_edges=edges,
        obstruction_witnesses=witnesses,
        loop_tree=is_loop_tree(graph, tree),
        seconds=time.perf_counter() - started,
    )


def _known_name(graph):
    form = None
    for name, build in BUILTIN_GRAPHS.items():
        known = build()
        if (known.vertex_count, known.edge_count) != (graph.vertex_count, graph.edge_count):
            continue
        form = form or canonical_form(graph)
        if canonical_form(known) == form:
            return name
    return None


def classification_tasks(genus, k_max=3, point_cap=DEFAULT_POINT_CAP, with_normality=False):
    tasks = []
    for i, graph in enumerate(enumerate_trivalent(genus)):
        graph = Multigraph(graph.vertex_count, graph.edges, name=_known_name(graph) or f"g{genus}_{i}")
        for tree in tree_classes(graph):
            tasks.append((graph, tree, k_max, point_cap, with_normality))
    return tasks


def classify(genus, with_normality=False, k_max=3, workers=1, point_cap=DEFAULT_POINT_CAP,
             allow_genus_5=False, progress=None):
    """ClassificationRecord for every (Γ, T) of the genus, up to isomorphism."""
    limit = MAX_GENUS if allow_genus_5 else MAX_DEFAULT_GENUS
    if not 2 <= genus <= limit:
        raise GenusOutOfRange(f"classification supports genus 2..{limit}, got {genus}")
    tasks = classification_tasks(genus, k_max, point_cap, with_normality)
    logger.info("genus %d: %d (graph, tree) classes", genus, len(tasks))
    if progress is None:
        progress = sys.stderr.isatty()
    bar = dict(total=len(tasks), desc=f"genus {genus}", disable=not progress)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(tqdm(pool.map(classify_pair, tasks), **bar))
    else:
        records = [classify_pair(task) for task in tqdm(tasks, **bar)]
    logger.info("genus %d: %d reflexive of %d", genus, sum(r.reflexive for r in records), len(records))
    return records
