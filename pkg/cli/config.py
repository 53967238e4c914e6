"""
Run configuration.

Values come from the command line, then the environment (a .env file is
read if present), then the defaults below.

    CHARPOLY_WORKERS     worker processes for classify
    CHARPOLY_POINT_CAP   lattice-point cap before a verdict turns indeterminate
    CHARPOLY_LOG_LEVEL   logging level name
"""
import os
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, field_validator, model_validator

from polyhedra.lattice_points import DEFAULT_POINT_CAP

COMMANDS = ("build", "vertices", "lattice-points", "reflexive", "idp", "rays", "classify", "verify-paper")
GRAPH_COMMANDS = ("build", "vertices", "lattice-points", "reflexive", "idp", "rays")

Command = Literal["build", "vertices", "lattice-points", "reflexive", "idp", "rays", "classify", "verify-paper"]


# --- Pydantic Schemas ---
class RunConfig(BaseModel):
    command: Command
    graph: Optional[str] = None
    tree: Optional[str] = None
    polytope: Optional[Literal["P", "Q", "Delta", "cone"]] = None
    k_max: int = 3
    genus: Optional[int] = None
    output: Optional[str] = None
    format: Literal["json", "table"] = "json"
    workers: int = 1
    point_cap: int = DEFAULT_POINT_CAP
    normality: bool = False
    allow_genus_5: bool = False
    leaf_nonnegativity: bool = True
    full: bool = False
    stretch: bool = False
    timings: bool = False
    log_level: Optional[str] = None

    @field_validator("point_cap")
    @classmethod
    def _positive_cap(cls, value):
        if value <= 0:
            raise ValueError("point_cap must be positive")
        return value

    @field_validator("k_max", "workers")
    @classmethod
    def _at_least_one(cls, value):
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @model_validator(mode="after")
    def _required_fields(self):
        if self.command in GRAPH_COMMANDS and not self.graph:
            raise ValueError(f"--graph is required for {self.command}")
        if self.command == "classify" and self.genus is None:
            raise ValueError("--genus is required for classify")
        return self


def load_config(**values):
    """RunConfig from explicit values, falling back to the environment for unset ones."""
    load_dotenv()
    values = {k: v for k, v in values.items() if v is not None}
    if "workers" not in values and os.getenv("CHARPOLY_WORKERS"):
        values["workers"] = int(os.environ["CHARPOLY_WORKERS"])
    if "point_cap" not in values and os.getenv("CHARPOLY_POINT_CAP"):
        values["point_cap"] = int(os.environ["CHARPOLY_POINT_CAP"])
    if "log_level" not in values and os.getenv("CHARPOLY_LOG_LEVEL"):
        values["log_level"] = os.environ["CHARPOLY_LOG_LEVEL"]
    return RunConfig(**values)
