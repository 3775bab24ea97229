"""Kicked Ising chain: fast state-vector evolution, multipartite entanglement
measures, and the matching closed-form solutions."""

from .analytic import (
    DegenerateModeError,
    JWMode,
    JWModeSet,
    cluster_n_tangle,
    cluster_nn_concurrence,
    cluster_q,
    jw_modes,
    jw_q_vacuum,
    jw_sz_profile,
    sym_cluster_n_tangle,
)
from .harness import (
    AxisSpec,
    NoAnalyticOracleError,
    RunConfig,
    SweepConfig,
    SweepPointError,
    compare_numeric_analytic,
    initial_state,
    run_time_series,
    sweep_grid,
    time_average,
)
from .measures import (
    MeasureReport,
    concurrence,
    n_tangle,
    one_tangle,
    q_measure,
    rdm_pair,
    rdm_single,
    report,
    residual_tangle,
)
from .statevec import (
    ChainParams,
    PureState,
    apply_field_kick,
    apply_ising_kick,
    fwht_inplace,
    make_basis_state,
    make_ghz,
    make_vacuum,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "AxisSpec",
    "ChainParams",
    "DegenerateModeError",
    "JWMode",
    "JWModeSet",
    "MeasureReport",
    "NoAnalyticOracleError",
    "PureState",
    "RunConfig",
    "SweepConfig",
    "SweepPointError",
    "apply_field_kick",
    "apply_ising_kick",
    "cluster_n_tangle",
    "cluster_nn_concurrence",
    "cluster_q",
    "compare_numeric_analytic",
    "concurrence",
    "fwht_inplace",
    "initial_state",
    "jw_modes",
    "jw_q_vacuum",
    "jw_sz_profile",
    "make_basis_state",
    "make_ghz",
    "make_vacuum",
    "n_tangle",
    "one_tangle",
    "q_measure",
    "rdm_pair",
    "rdm_single",
    "report",
    "residual_tangle",
    "run_time_series",
    "step",
    "sweep_grid",
    "sym_cluster_n_tangle",
    "time_average",
]
