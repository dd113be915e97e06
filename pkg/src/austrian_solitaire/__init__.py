"""Austrian Solitaire as an exact dynamical system on integer partitions."""

from fractions import Fraction

from .balance import (
    Infeasible,
    PeriodicSequence,
    balanced_offset,
    gamma,
    is_balanced,
    maximal_rotation,
    partial_sums,
    phi,
    phi_inverse,
)
from .dynamics import CycleReport, cycle_min_bank_state, find_cycle, normalize, step, step_general
from .explorer import ConnectivityReport, export_state_graph, sweep, verify_connectivity
from .farey import FareyEntry, first_index, full_farey, index_to_fraction, multiplicity
from .partition import AustrianPartition, GeneralPartition, enumerate_all, from_parts, to_parts, total
from .predictor import CyclePrediction, min_bank_partition, predict_cycle

__all__ = [
    "AustrianPartition", "ConnectivityReport", "CyclePrediction", "CycleReport", "FareyEntry",
    "Fraction", "GeneralPartition", "Infeasible", "PeriodicSequence", "balanced_offset",
    "cycle_min_bank_state", "enumerate_all", "export_state_graph", "find_cycle", "first_index",
    "from_parts", "full_farey", "gamma", "index_to_fraction", "is_balanced", "maximal_rotation",
    "min_bank_partition", "multiplicity", "normalize", "partial_sums", "phi", "phi_inverse",
    "predict_cycle", "step", "step_general", "sweep", "to_parts", "total", "verify_connectivity",
]
