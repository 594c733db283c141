"""Exact offensive-alliance numbers, proof-derived witnesses, and bound certification."""

from .alliance import (AllianceKind, PredicateCertificate, Violation, boundary, check_alliance,
                       is_minimal_alliance)
from .bounds import BoundRecord, evaluate_all_bounds, tightness_survey, violations
from .constructions import (WitnessReport, independent_complement_alliance,
                            maxcut_refined_alliance)
from .errors import (AllianceError, CapacityError, DomainError, GenerationError,
                     HypothesisError, InputError, ModeError, ParseError)
from .graph import Graph
from .params import (CutPartition, SpectralResult, connected_domination_number,
                     domination_number, independence_number, k_domination_number,
                     laplacian_spectral_radius, max_cut_partition)
from .solvers import (SolveResult, enumerate_minimal_global_alliances, min_alliance,
                      min_connected_alliance)

__all__ = [
    "AllianceError", "AllianceKind", "BoundRecord", "CapacityError", "CutPartition",
    "DomainError", "GenerationError", "Graph", "HypothesisError", "InputError", "ModeError",
    "ParseError", "PredicateCertificate", "SolveResult", "SpectralResult", "Violation",
    "WitnessReport", "boundary", "check_alliance", "connected_domination_number",
    "domination_number", "enumerate_minimal_global_alliances", "evaluate_all_bounds",
    "independence_number", "independent_complement_alliance", "is_minimal_alliance",
    "k_domination_number", "laplacian_spectral_radius", "max_cut_partition",
    "maxcut_refined_alliance", "min_alliance", "min_connected_alliance", "tightness_survey",
    "violations",
]
