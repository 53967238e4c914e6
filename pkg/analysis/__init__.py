"""Verdicts on the graph polytopes: reflexivity, IDP, obstruction witnesses and classification."""
from analysis.classify import ClassificationRecord, classify
from analysis.normality import NormalityResult, check_idp, check_idp_polytope, decompose
from analysis.obstruction import obstruction_edges, obstruction_witness
from analysis.reflexivity import ReflexivityResult, check_reflexive
from analysis.verification import run_verification

__all__ = [
    "ClassificationRecord",
    "NormalityResult",
    "ReflexivityResult",
    "check_idp",
    "check_idp_polytope",
    "check_reflexive",
    "classify",
    "decompose",
    "obstruction_edges",
    "obstruction_witness",
    "run_verification",
]
