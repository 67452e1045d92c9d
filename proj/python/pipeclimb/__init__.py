"""Design-optimization pipeline for a compliant three-module in-pipe climbing robot.

The heavy lifting lives in the C++ extension ``pipeclimb._core``; this
package re-exports its public surface.
"""

from pipeclimb._core import (  # noqa: F401
    BendPose,
    Config,
    EquilibriumSolution,
    FrictionResult,
    InfeasibleError,
    InfeasibleGeometryError,
    MuRow,
    ParseError,
    PipeSpec,
    RobotParams,
    SpringDesign,
    SpringSet,
    StaticSystem,
    StationFailure,
    StraightPose,
    SweepResult,
    ValidationError,
    __version__,
    assemble_bend,
    assemble_straight,
    bend_pose,
    dump_matrix,
    load_config,
    mu_vs_mu_lim,
    reference_deflections,
    reference_springs,
    residual,
    run_sweep,
    save_config,
    solve_friction_limit,
    solve_spring_lp,
    spring_torque,
    straight_pose,
    sweep_stations,
)
