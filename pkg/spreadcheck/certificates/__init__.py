"""
Case analysis and certificate audits.
"""

from .base import (
    CaseData,
    CaseTag,
    Certificate,
    Check,
    CheckStatus,
    DeepCheckReport,
    EqualityWitness,
    StarSubgraph,
    Theorem2Report,
)
from .case_analysis import build_case_data, deep_check_step22, eq8_bound, eq10_bound
from .lemmas import (
    is_join_of_cone_and_disconnected,
    lemma_diameter_check,
    lemma_disconnected_check,
    lemma_identity_check,
    neighbor_bound_check,
    step1_bound,
)
from .paths import disjoint_length3_paths, max_disjoint_length3_paths_bruteforce
from .theorems import (
    MinMaxReport,
    PairAnalysis,
    audit_graph,
    audit_theorem1,
    audit_theorem2,
    minmax_report,
    theorem2_floor,
)

__all__ = [
    "CaseData",
    "CaseTag",
    "Certificate",
    "Check",
    "CheckStatus",
    "DeepCheckReport",
    "EqualityWitness",
    "MinMaxReport",
    "PairAnalysis",
    "StarSubgraph",
    "Theorem2Report",
    "audit_graph",
    "audit_theorem1",
    "audit_theorem2",
    "build_case_data",
    "deep_check_step22",
    "disjoint_length3_paths",
    "eq8_bound",
    "eq10_bound",
    "is_join_of_cone_and_disconnected",
    "lemma_diameter_check",
    "lemma_disconnected_check",
    "lemma_identity_check",
    "max_disjoint_length3_paths_bruteforce",
    "minmax_report",
    "neighbor_bound_check",
    "step1_bound",
    "theorem2_floor",
]
