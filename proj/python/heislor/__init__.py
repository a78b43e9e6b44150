"""Left-invariant Lorentzian structures on the Heisenberg group."""

from ._core import (  # noqa: F401
    ChartSingular,
    Error,
    IllConditioned,
    InvalidArgument,
    NoConvergence,
    NotAdmissible,
    NotCausal,
    OutsideCausalShadow,
    PlanFailure,
    attain0,
    attain1,
    boundary_height,
    discrepancy_report,
    distance1,
    exp0,
    exp1,
    exp2,
    exp_convergence,
    group_inverse,
    group_mul,
    invert1,
    jacobian1,
    oracle_endpoint,
    periodic_plan,
    reach_plan,
    run_cli,
)

__version__ = "0.3.0"
