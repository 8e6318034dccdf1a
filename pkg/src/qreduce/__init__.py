"""Quantum reduction-postulate toolkit.

Compares the projective (Lueders) state-update rule against an
anticommutator-based alternative that stays compatible with unitary
evolution when measurement outcomes are discarded, quantifies decoherence
in an exactly solvable qubit-environment model, and assigns probabilities
to families of time-ordered projector histories.
"""

from .errors import (
    CapExceededError,
    ConfigError,
    ConvergenceError,
    NumericalContractError,
)
from .linalg import (
    EigenSystem,
    HAVE_COMPILED_KERNEL,
    anticommutator,
    backend_name,
    frobenius_distance,
    hermitian_eigensystem,
    unitary_exp,
)
from .states import (
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    DensityMatrix,
    Observable,
    PositivityClass,
    Projector,
    ProjectorFamily,
    bloch_vector,
    density_distance,
    event_probability,
    evolve,
    make_density,
    partial_trace,
    pure_state_density,
    spectral_projectors,
)
from .reduction import (
    EventStatus,
    Postulate,
    ReductionOutcome,
    event_condition,
    postulate_distance,
    reduce_lambda,
    reduce_modified,
    reduce_standard,
    unread_mixture_lambda,
    unread_mixture_standard,
)
from .decoherence import (
    BitByBitModel,
    build_joint_state,
    damping_ratio,
    decohered_state,
    evolve_and_trace,
    interference_amplitude,
    suppression_sweep,
)
from .histories import (
    ConsistencyReport,
    History,
    HistoryEvent,
    HistoryFamily,
    additivity_residual,
    check_consistency,
    heisenberg_projector,
    history_probability_modified,
    history_probability_standard,
    marginalization_residual,
)
from .histories import Violation

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ConfigError",
    "ConvergenceError",
    "NumericalContractError",
    "EigenSystem",
    "HAVE_COMPILED_KERNEL",
    "anticommutator",
    "backend_name",
    "frobenius_distance",
    "hermitian_eigensystem",
    "unitary_exp",
    "IDENTITY_2",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "DensityMatrix",
    "Observable",
    "PositivityClass",
    "Projector",
    "ProjectorFamily",
    "bloch_vector",
    "density_distance",
    "event_probability",
    "evolve",
    "make_density",
    "partial_trace",
    "pure_state_density",
    "spectral_projectors",
    "EventStatus",
    "Postulate",
    "ReductionOutcome",
    "event_condition",
    "postulate_distance",
    "reduce_lambda",
    "reduce_modified",
    "reduce_standard",
    "unread_mixture_lambda",
    "unread_mixture_standard",
    "BitByBitModel",
    "build_joint_state",
    "damping_ratio",
    "decohered_state",
    "evolve_and_trace",
    "interference_amplitude",
    "suppression_sweep",
    "ConsistencyReport",
    "History",
    "HistoryEvent",
    "HistoryFamily",
    "additivity_residual",
    "check_consistency",
    "heisenberg_projector",
    "history_probability_modified",
    "history_probability_standard",
    "marginalization_residual",
    "Violation",
]
