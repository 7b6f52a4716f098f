"""Turan numbers of complete Berge-hypergraphs: constructions, detection and desk verification."""

from .berge import (
    BergeWitness,
    IncidenceGraph,
    berge_clique_on_core,
    contains_berge_clique,
    incidence_graph,
    is_berge_free,
    max_matching,
    verify_witness,
)
from .constructions import PartiteStructure, build_complete, build_expansion, build_turan_partite, turan_count
from .extremal import (
    Budget,
    BudgetExceeded,
    NodeBudgetExceeded,
    TimeBudgetExceeded,
    VerificationFailure,
    brute_force_ex,
    recognize_complete_partite,
    saturation_check,
    verify_theorem_desk,
)
from .hypergraph import Hypergraph
from .sdr import HallViolator, find_sdr, verify_sdr_lemma

__all__ = [
    "BergeWitness",
    "Budget",
    "BudgetExceeded",
    "HallViolator",
    "Hypergraph",
    "IncidenceGraph",
    "NodeBudgetExceeded",
    "PartiteStructure",
    "TimeBudgetExceeded",
    "VerificationFailure",
    "berge_clique_on_core",
    "brute_force_ex",
    "build_complete",
    "build_expansion",
    "build_turan_partite",
    "contains_berge_clique",
    "find_sdr",
    "incidence_graph",
    "is_berge_free",
    "max_matching",
    "recognize_complete_partite",
    "saturation_check",
    "turan_count",
    "verify_sdr_lemma",
    "verify_theorem_desk",
    "verify_witness",
]
