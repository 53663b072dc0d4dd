"""Multi-domain sparse signal recovery."""

from ._msl1 import (
    SolveReport,
    compressibility,
    generate_signal,
    make_measurement_matrix,
    rmse,
    run_sweep_csv,
    solve_f_l1,
    solve_l1_l1,
    solve_ls_baseline,
    solve_t_l1,
    unitary_dft,
)

__all__ = [
    "SolveReport",
    "compressibility",
    "generate_signal",
    "make_measurement_matrix",
    "rmse",
    "run_sweep_csv",
    "solve_f_l1",
    "solve_l1_l1",
    "solve_ls_baseline",
    "solve_t_l1",
    "unitary_dft",
]
