"""Reconfiguration of simple s,t Hamiltonian paths in rectangular grids by square-switches."""

from .analysis import (
    Form,
    InternalSubpath,
    Kind,
    SubpathDecomposition,
    canonical_kind,
    classify_form,
    decompose,
    is_simple,
    visits_alpha_first,
)
from .errors import *  # noqa: F401,F403
from .grid import EdgeBoard, GridDims, HamPath, Vertex, from_moves, make_canonical, parse_path_text, validate
from .oracle import HPGraph, build_hp_graph, enumerate_simple, enumerate_st_hamiltonian, graph_stats
from .reconfig import (
    Phase,
    SwitchTrace,
    parse_trace,
    reconfig_canonical_to_canonical,
    reconfig_to_canonical,
    reconfigure,
    replay,
)
from .switching import Square, SwitchRecord, Zipline, is_switchable_square, square_switch
from .zips import zip_s_to_n, zip_w_to_e

__all__ = [
    "EdgeBoard",
    "Form",
    "GridDims",
    "HPGraph",
    "HamPath",
    "InternalSubpath",
    "Kind",
    "Phase",
    "Square",
    "SubpathDecomposition",
    "SwitchRecord",
    "SwitchTrace",
    "Vertex",
    "Zipline",
    "build_hp_graph",
    "canonical_kind",
    "classify_form",
    "decompose",
    "enumerate_simple",
    "enumerate_st_hamiltonian",
    "from_moves",
    "graph_stats",
    "is_simple",
    "is_switchable_square",
    "make_canonical",
    "parse_path_text",
    "parse_trace",
    "reconfig_canonical_to_canonical",
    "reconfig_to_canonical",
    "reconfigure",
    "replay",
    "square_switch",
    "validate",
    "visits_alpha_first",
    "zip_s_to_n",
    "zip_w_to_e",
]
