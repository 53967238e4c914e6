"""
Exact inequality and vertex representations.

Rows read normal·x >= rhs. Labels identify where a row came from so that
facets and divisor reports can be traced back:

- "tri:v<vertex>:<signs>"  triangle inequality at a vertex
- "bnd:e<edge>"            boundary inequality on a free edge
- "leaf:e<edge>"           leaf bound of Δ(T)
- anything else            custom rows (cubes, faces, polars)
"""
from dataclasses import dataclass, field
from fractions import Fraction

from common.errors import DimensionMismatch, UnknownLabel
from common.rational import dot, format_rational, format_vector, to_fraction, vector


@dataclass(frozen=True)
class Row:
    normal: tuple
    rhs: Fraction
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "normal", vector(self.normal))
        object.__setattr__(self, "rhs", to_fraction(self.rhs))

    def slack(self, x):
        return dot(self.normal, x) - self.rhs

    def holds(self, x):
        return self.slack(x) >= 0

    def is_tight(self, x):
        return self.slack(x) == 0

    def to_json(self):
        return {"normal": format_vector(self.normal), "rhs": format_rational(self.rhs), "label": self.label}


@dataclass(frozen=True)
class HPolytope:
    ambient_dim: int
    rows: tuple = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        for row in rows:
            if len(row.normal) != self.ambient_dim:
                raise DimensionMismatch(
                    f"row {row.label!r} has {len(row.normal)} coordinates, expected {self.ambient_dim}")

    @property
    def labels(self):
        return [row.label for row in self.rows]

    def row(self, label):
        for r in self.rows:
            if r.label == label:
                return r
        raise UnknownLabel(f"no row labelled {label!r}")

    def contains(self, x):
        x = vector(x)
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.ambient_dim}")
        return all(row.holds(x) for row in self.rows)

    def tight_rows(self, x):
        x = vector(x)
        return [row for row in self.rows if row.is_tight(x)]

    def with_rows(self, rows):
        return HPolytope(self.ambient_dim, tuple(rows))

    def to_json(self):
        return {"dim": self.ambient_dim, "rows": [row.to_json() for row in self.rows]}

    @classmethod
    def from_json(cls, data):
        rows = tuple(Row(tuple(r["normal"]), r["rhs"], r.get("label", "")) for r in data["rows"])
        return cls(int(data["dim"]), rows)


@dataclass(frozen=True)
class VPolytope:
    ambient_dim: int
    vertices: tuple = ()
    rays: tuple = field(default=())

    def __post_init__(self):
        verts = tuple(sorted(vector(v) for v in self.vertices))
        rays = tuple(sorted(vector(r) for r in self.rays))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rays", rays)
        for p in verts + rays:
            if len(p) != self.ambient_dim:
                raise DimensionMismatch(f"point of length {len(p)} in dimension {self.ambient_dim}")

    @property
    def is_bounded(self):
        return not self.rays

    @property
    def vertex_set(self):
        return frozenset(self.vertices)

    def to_json(self):
        return {
            "dim": self.ambient_dim,
            "vertices": [format_vector(v) for v in self.vertices],
            "rays": [format_vector(r) for r in self.rays],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["dim"]), tuple(tuple(v) for v in data["vertices"]),
                   tuple(tuple(r) for r in data.get("rays", [])))
