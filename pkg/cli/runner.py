"""
Command-line surface.

    python main.py vertices --graph dumbbell
    python main.py reflexive --graph k4 --tree 3,4,5
    python main.py classify --genus 3 --format table
    python main.py verify-paper --full

Exit status: 0 on success, 1 when the verification suite fails, 2 on a
usage or input error.
"""
import argparse
import logging
import os
import sys

from pydantic import ValidationError

from analysis.classify import classify
from analysis.normality import check_idp_polytope
from analysis.verification import run_verification
from analysis.reflexivity import check_reflexive
from charpoly.constructions import as_tree, cone_P, delta_lattice, polytope_Delta, polytope_P, polytope_Q
from charpoly.rays import anticanonical_rays, dual_cone_rays
from cli.config import COMMANDS, load_config
from cli.report import dumps, frame_text, points_frame, record_to_json, records_frame, rows_frame, write_output
from common.errors import CharpolyError, UsageError
from common.log import configure_logging
from common.rational import format_vector
from graphs.builtins import BUILTIN_GRAPHS, builtin_graph, default_tree
from graphs.isomorphism import tree_classes
from graphs.multigraph import tree_subgraph
from graphs.text_format import read_graph
from lattices.graph_lattice import m_lattice
from polyhedra.lattice_points import lattice_points
from polyhedra.operations import vertices

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="charpoly",
        description="Exact polytopes P(Γ,T), Q(Γ,T) and Δ(T) of trivalent graphs: vertices, "
                    "lattice points, reflexivity, IDP and genus classification.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--graph", help=f"graph file or builtin name ({', '.join(BUILTIN_GRAPHS)})")
    parser.add_argument("--tree", help='comma-separated tree edge ids, or "all" for one tree per class')
    parser.add_argument("--polytope", choices=("P", "Q", "Delta", "cone"),
                        help="polytope to work on (default Q for build and vertices, P for lattice-points and idp)")
    parser.add_argument("--k-max", type=int, dest="k_max", help="highest dilate for IDP (default 3)")
    parser.add_argument("--genus", type=int)
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.add_argument("--format", choices=("json", "table"))
    parser.add_argument("--workers", type=int, help="worker processes for classify")
    parser.add_argument("--point-cap", type=int, dest="point_cap")
    parser.add_argument("--normality", action="store_true", default=None,
                        help="also run the IDP check in classify")
    parser.add_argument("--allow-genus-5", action="store_true", dest="allow_genus_5", default=None)
    parser.add_argument("--no-leaf-nonnegativity", action="store_false", dest="leaf_nonnegativity",
                        default=None, help="drop w(e) >= 0 on leaf edges of Δ(T)")
    parser.add_argument("--full", action="store_true", default=None)
    parser.add_argument("--stretch", action="store_true", default=None)
    parser.add_argument("--timings", action="store_true", default=None)
    parser.add_argument("--log-level", dest="log_level")
    return parser


# --- Input resolution ---

def resolve_graph(spec):
    """(graph, tree ids from the file or the builtin default, or None)."""
    if spec in BUILTIN_GRAPHS:
        return builtin_graph(spec), default_tree(spec).tree_list
    if os.path.exists(spec):
        try:
            return read_graph(spec)
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"--graph {spec!r} could not be read: {exc}") from None
    raise UsageError(f"--graph {spec!r} is neither a builtin graph nor a readable file")


def resolve_trees(graph, file_tree, spec):
    if spec == "all":
        return tree_classes(graph)
    if spec:
        try:
            ids = [int(x) for x in spec.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--tree {spec!r} is not a list of edge ids") from None
        return [as_tree(graph, ids)]
    if file_tree is None:
        raise UsageError(f"{graph.label()} has no tree line; pass --tree")
    return [as_tree(graph, file_tree)]


def _polytope(config, graph, tree, default="Q"):
    """(polytope, lattice) for --polytope, or the command's default."""
    kind = config.polytope or default
    if kind == "P":
        return polytope_P(graph, tree), m_lattice(graph)
    if kind == "cone":
        return cone_P(graph), m_lattice(graph)
    if kind == "Delta":
        t = tree_subgraph(graph, tree)
        return polytope_Delta(t, config.leaf_nonnegativity), delta_lattice(t)
    return polytope_Q(graph, tree), m_lattice(graph)


# --- Commands ---

def _per_tree(config, fn):
    graph, file_tree = resolve_graph(config.graph)
    trees = resolve_trees(graph, file_tree, config.tree)
    return graph, [(tree, fn(graph, tree)) for tree in trees]


def _cmd_build(config):
    graph, results = _per_tree(config, lambda g, t: _polytope(config, g, t)[0])
    if config.format == "table":
        return "".join(f"tree {t.tree_list}\n" + frame_text(rows_frame(p)) for t, p in results), EXIT_OK
    return dumps([{"tree": list(t.tree_list), "polytope": p.to_json()} for t, p in results]), EXIT_OK


def _cmd_vertices(config):
    graph, results = _per_tree(config, lambda g, t: vertices(_polytope(config, g, t)[0]))
    if config.format == "table":
        return "".join(f"tree {t.tree_list}\n" + frame_text(points_frame(v.vertices)) for t, v in results), EXIT_OK
    return dumps([{"tree": list(t.tree_list), "vertices": v.to_json()} for t, v in results]), EXIT_OK


def _cmd_lattice_points(config):
    def points(g, t):
        p, lattice = _polytope(config, g, t, default="P")
        return lattice_points(p, lattice, config.point_cap)

    graph, results = _per_tree(config, points)
    if config.format == "table":
        return "".join(f"tree {t.tree_list}: {len(pts)} points\n" + frame_text(points_frame(pts))
                       for t, pts in results), EXIT_OK
    return dumps([{"tree": list(t.tree_list), "count": len(pts), "points": [format_vector(x) for x in pts]}
                  for t, pts in results]), EXIT_OK


def _cmd_reflexive(config):
    graph, results = _per_tree(config, check_reflexive)
    if config.format == "table":
        lines = [f"tree {t.tree_list}: reflexive={r.reflexive} vertices={r.vertex_count} "
                 f"outside_M={[format_vector(v) for v in r.non_lattice_vertices]}" for t, r in results]
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps([{"tree": list(t.tree_list), **r.to_json()} for t, r in results]), EXIT_OK


def _cmd_idp(config):
    def idp(g, t):
        p, lattice = _polytope(config, g, t, default="P")
        return check_idp_polytope(p, lattice, config.k_max, config.point_cap)

    graph, results = _per_tree(config, idp)
    if config.format == "table":
        lines = [f"tree {t.tree_list}: normal={r.normal} indeterminate={r.indeterminate} "
                 f"failures={len(r.failures)} counts={list(r.point_counts)}" for t, r in results]
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps([{"tree": list(t.tree_list), **r.to_json()} for t, r in results]), EXIT_OK


def _cmd_rays(config):
    graph, results = _per_tree(config, lambda g, t: (dual_cone_rays(g, t), anticanonical_rays(g, t)))
    if config.format == "table":
        out = []
        for t, (dual, anti) in results:
            for title, rays in (("dual cone", dual), ("anticanonical", anti)):
                frame = points_frame([r.generator for r in rays])
                if not frame.empty:
                    frame.index = [f"{r.kind}:{r.label}" for r in rays]
                out.append(f"tree {t.tree_list} {title} rays\n" + frame_text(frame))
        return "".join(out), EXIT_OK
    return dumps([{"tree": list(t.tree_list),
                   "dual_cone": [r.to_json() for r in dual],
                   "anticanonical": [r.to_json() for r in anti]} for t, (dual, anti) in results]), EXIT_OK


def _cmd_classify(config):
    records = classify(config.genus, with_normality=config.normality, k_max=config.k_max,
                       workers=config.workers, point_cap=config.point_cap,
                       allow_genus_5=config.allow_genus_5)
    if config.format == "table":
        return frame_text(records_frame(records)), EXIT_OK
    return dumps({"genus": config.genus,
                  "records": [record_to_json(r, config.timings) for r in records]}), EXIT_OK


def _cmd_verify(config):
    report = run_verification(full=config.full, stretch=config.stretch)
    status = EXIT_OK if report.passed else EXIT_FAILED
    if config.format == "table":
        return report.checklist() + "\n", status
    return dumps(report.to_json(config.timings)), status


HANDLERS = {
    "build": _cmd_build,
    "vertices": _cmd_vertices,
    "lattice-points": _cmd_lattice_points,
    "reflexive": _cmd_reflexive,
    "idp": _cmd_idp,
    "rays": _cmd_rays,
    "classify": _cmd_classify,
    "verify-paper": _cmd_verify,
}


def run(config, stdout=None):
    """Execute config.command; returns the exit status."""
    stdout = stdout or sys.stdout
    text, status = HANDLERS[config.command](config)
    write_output(text, config.output, stdout)
    return status


def main(argv=None, stdout=None, stderr=None):
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        config = load_config(**vars(args))
    except ValidationError as exc:
        for err in exc.errors():
            field = ".".join(str(x) for x in err["loc"]) or "config"
            stderr.write(f"usage error: {field}: {err['msg']}\n")
        return EXIT_USAGE
    configure_logging(config.log_level)
    try:
        return run(config, stdout)
    except CharpolyError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
