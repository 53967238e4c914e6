"""JSON and table rendering for command results. JSON is the machine contract."""
import json

import pandas as pd

from common.rational import format_vector
from graphs.text_format import format_graph


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def record_to_json(record, timings=False):
    data = {
        "graph": format_graph(record.graph, record.tree),
        "name": record.graph.name,
        "tree": list(record.tree.tree_list),
        "loop_tree": record.loop_tree,
        "q_vertex_count": record.q_vertex_count,
        "reflexivity": record.reflexivity.to_json(),
        "normality": record.normality.to_json() if record.normality else None,
        "obstruction_applicable": record.obstruction_applicable,
        "obstruction_edges": list(record.obstruction_edges),
        "obstruction_witnesses": [
            {"edge": f, "witness": format_vector(w)}
            for f, w in zip(record.obstruction_edges, record.obstruction_witnesses)
        ],
    }
    if timings:
        data["seconds"] = round(record.seconds or 0.0, 3)
    return data


def records_frame(records):
    rows = []
    for r in records:
        rows.append({
            "graph": r.graph.name,
            "tree": ",".join(str(e) for e in r.tree.tree_list),
            "loop_tree": r.loop_tree,
            "vertices": r.q_vertex_count,
            "reflexive": r.reflexive,
            "outside_M": len(r.reflexivity.non_lattice_vertices),
            "normal": None if r.normality is None else r.normality.normal,
            "obstruction": r.obstruction_applicable,
        })
    return pd.DataFrame(rows)


def points_frame(points, labels=None):
    """One row per point, one column per edge; entries printed as p/q."""
    data = [format_vector(p) for p in points]
    frame = pd.DataFrame(data, columns=labels)
    return frame


def rows_frame(polytope):
    frame = pd.DataFrame([format_vector(r.normal) + [r.to_json()["rhs"]] for r in polytope.rows],
                         columns=[f"e{i}" for i in range(polytope.ambient_dim)] + ["rhs"])
    frame.index = polytope.labels
    return frame


def frame_text(frame):
    if frame.empty:
        return "(none)\n"
    return frame.to_string() + "\n"


def write_output(text, path=None, stream=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        stream.write(text)
