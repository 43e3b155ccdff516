"""Closed-form dynamics, quantum geometry and entanglement of two spins
coupled by XXZ or DM exchange in a z-axis field.

Every closed form in the package is paired with an independent numerical
oracle; ``python -m twospin verify`` runs the full cross-check suite.
"""

from .algebra import (
    ATOL,
    IDENTITY2,
    IDENTITY4,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    fidelity,
    hermitian_expm,
    inner,
    is_hermitian,
    kron2,
)
from .entanglement import (
    ConcurrenceScan,
    Pattern,
    ProductStateAngles,
    concurrence,
    concurrence_dm_family,
    concurrence_evolved,
    concurrence_pm_family,
    concurrence_pp_family,
    constant_entanglement_radius,
    product_state,
    scan_concurrence,
    theta_max_entanglement,
)
from .errors import (
    AngleOutOfRange,
    BadRange,
    DegenerateCoupling,
    NonCommutingGenerators,
    NonHermitianInput,
    NotNormalized,
    StepOutOfRange,
    TwoSpinError,
)
from .evolution import (
    PERIODICITY_TOL,
    EvolutionParams,
    PeriodicityReport,
    PhaseShift,
    TwoSpinState,
    dm_equivalent_state,
    evolve,
    params_from_time,
    periodicity_case,
    propagator,
    verify_periodicity,
)
from .geometry import (
    FD_STEP_DEFAULT,
    FD_STEP_MAX,
    FD_STEP_MIN,
    GeneratorPair,
    ManifoldClass,
    ManifoldKind,
    MetricTensor,
    StateInvariants,
    classify_manifold,
    generator_pair,
    invariants_of,
    metric_analytic,
    metric_finite_difference,
    metric_from_variances,
)
from .model import (
    Anisotropy,
    EigenSystem,
    ModelKind,
    ModelParams,
    as_anisotropy,
    build_hamiltonian,
    dm_conjugation,
    dm_coupling,
    eigensystem,
    field_term,
    xx_coupling,
    zz_coupling,
)

__version__ = "0.1.0"

__all__ = [
    "ATOL",
    "IDENTITY2",
    "IDENTITY4",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "fidelity",
    "hermitian_expm",
    "inner",
    "is_hermitian",
    "kron2",
    "ConcurrenceScan",
    "Pattern",
    "ProductStateAngles",
    "concurrence",
    "concurrence_dm_family",
    "concurrence_evolved",
    "concurrence_pm_family",
    "concurrence_pp_family",
    "constant_entanglement_radius",
    "product_state",
    "scan_concurrence",
    "theta_max_entanglement",
    "AngleOutOfRange",
    "BadRange",
    "DegenerateCoupling",
    "NonCommutingGenerators",
    "NonHermitianInput",
    "NotNormalized",
    "StepOutOfRange",
    "TwoSpinError",
    "PERIODICITY_TOL",
    "EvolutionParams",
    "PeriodicityReport",
    "PhaseShift",
    "TwoSpinState",
    "dm_equivalent_state",
    "evolve",
    "params_from_time",
    "periodicity_case",
    "propagator",
    "verify_periodicity",
    "FD_STEP_DEFAULT",
    "FD_STEP_MAX",
    "FD_STEP_MIN",
    "GeneratorPair",
    "ManifoldClass",
    "ManifoldKind",
    "MetricTensor",
    "StateInvariants",
    "classify_manifold",
    "generator_pair",
    "invariants_of",
    "metric_analytic",
    "metric_finite_difference",
    "metric_from_variances",
    "Anisotropy",
    "EigenSystem",
    "ModelKind",
    "ModelParams",
    "as_anisotropy",
    "build_hamiltonian",
    "dm_conjugation",
    "dm_coupling",
    "eigensystem",
    "field_term",
    "xx_coupling",
    "zz_coupling",
    "__version__",
]
