"""Fat graphs (ribbon graphs) and the filling curve systems they encode."""

from .constructions import (
    connect_sum_gamma,
    f2_two_disc_pair,
    filling_pair,
    g2_pair,
    g3_pair,
    gamma,
    normal_labeling,
    predict_boundaries,
    theta,
    theta_bar,
)
from .core import EDGE_FIRST, VERTEX_FIRST, FatGraph, build, disjoint_union
from .enumeration import EnumFilter, classify_table, enumerate_graphs
from .errors import FatGraphError
from .io import dumps_graph, loads_graph, read_graph, run_report, to_dot, write_graph
from .iso import are_isomorphic, canonical_code, relabel

__version__ = "0.1.0"
