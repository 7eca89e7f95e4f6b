"""Maximum-entropy solutions of ill-posed linear inverse problems y = Xp.

Thin wrapper around the native extension. The main entry points are
``solve_ml_scalar``, ``solve_maxent_coherent`` and ``solve_inverse``, with
``grid_ml`` / ``grid_maxent`` as brute-force references and
``most_probable_coherent_type`` for the type-class concentration demo.
"""

from maxent._core import (  # noqa: F401
    ConstraintSystem,
    DualSolution,
    EnumerationTooLarge,
    Error,
    DimensionMismatch,
    InvalidInput,
    InvalidRange,
    NoCoherentType,
    NoFeasiblePoint,
    Pmf,
    Potential,
    Sample,
    SimplexGrid,
    SolveStatus,
    SolverConfig,
    SupportMismatch,
    TypeClass,
    __version__,
    coherence,
    composition_count,
    default_coherence_window,
    dist,
    dual_gradient,
    dual_objective,
    entropy_of_potential,
    grid_maxent,
    grid_ml,
    list_types,
    log_likelihood,
    log_multiplicity,
    log_partition,
    mean_value,
    most_probable_coherent_type,
    orthogonality_check,
    scale,
    shannon_entropy,
    shift,
    solve_inverse,
    solve_maxent_coherent,
    solve_ml_scalar,
)

__all__ = [name for name in dir() if not name.startswith("_")]
