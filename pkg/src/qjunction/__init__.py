"""Steady-state heat transport and quantum correlations of two coupled
qubits held between two thermal reservoirs.

The package solves the secular population dynamics of an XY-coupled qubit
pair in closed form, evaluates the steady-state heat current, and computes
concurrence, mutual information, classical correlation and quantum discord
of the resulting X state, for boson or spin reservoirs of arbitrary
temperatures and coupling asymmetry.
"""

from .baths import BathKind, BathSpec, occupation, rate_pair
from .correlations import (
    CorrelationReport,
    classical_correlation,
    classical_correlation_grid,
    concurrence,
    concurrence_brute_force,
    correlation_report,
    discord,
    k_coefficient,
    mutual_information,
    wootters_concurrence,
)
from .experiments import (
    RectificationPoint,
    SweepRow,
    SweepSpec,
    SweepVariable,
    rectification_scan,
    run_sweep,
    solve_point,
    sudden_death_temperature,
)
from .model import (
    CHANNEL_TABLE,
    DegeneratePhysicsError,
    EigenSystem,
    SystemParams,
    Transition,
    density_matrix_uncoupled,
    eigensystem,
    ground_state_index,
)
from .solver import (
    ChannelRates,
    NonUniqueSteadyStateError,
    Populations,
    RateSet,
    channel_rates,
    heat_current,
    null_space_populations,
    rate_matrix,
    steady_populations,
)

__version__ = "0.1.0"

__all__ = [
    "BathKind",
    "BathSpec",
    "CHANNEL_TABLE",
    "ChannelRates",
    "CorrelationReport",
    "DegeneratePhysicsError",
    "EigenSystem",
    "NonUniqueSteadyStateError",
    "Populations",
    "RateSet",
    "RectificationPoint",
    "SweepRow",
    "SweepSpec",
    "SweepVariable",
    "SystemParams",
    "Transition",
    "channel_rates",
    "classical_correlation",
    "classical_correlation_grid",
    "concurrence",
    "concurrence_brute_force",
    "correlation_report",
    "density_matrix_uncoupled",
    "discord",
    "eigensystem",
    "ground_state_index",
    "heat_current",
    "k_coefficient",
    "mutual_information",
    "null_space_populations",
    "occupation",
    "rate_matrix",
    "rate_pair",
    "rectification_scan",
    "run_sweep",
    "solve_point",
    "steady_populations",
    "sudden_death_temperature",
    "wootters_concurrence",
]
