"""Certifying recognition of normal Helly circular-arc graphs.

Every answer comes with a certificate: an arc model in which no three arcs
cover the circle, or an induced copy of a minimal forbidden graph.
"""

from .builder import InternalContradiction, build_nhca_model
from .catalog import CatalogEntry, Family, FamilyId, interval_members, make, nhca_members
from .detector import (
    LeftRightVerdict,
    ObstructionWitness,
    check_left_right,
    find_interval_obstruction,
    find_nhca_obstruction,
    is_end_vertex,
)
from .graph import Graph, GraphError, parse_graph6, write_graph6
from .models import ArcModel, IntervalModel, verify_nhca_model

__all__ = [
    "ArcModel",
    "CatalogEntry",
    "Family",
    "FamilyId",
    "Graph",
    "GraphError",
    "IntervalModel",
    "InternalContradiction",
    "LeftRightVerdict",
    "ObstructionWitness",
    "build_nhca_model",
    "check_left_right",
    "find_interval_obstruction",
    "find_nhca_obstruction",
    "interval_members",
    "is_end_vertex",
    "make",
    "nhca_members",
    "parse_graph6",
    "verify_nhca_model",
    "write_graph6",
]
