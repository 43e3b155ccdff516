"""Oracle cross-check suites behind the command-line ``verify``.

Each suite pits a closed form against an independent numerical route
(matrix exponential, dense eigensolver, finite differences, generator
variances, direct evolution) over seeded random draws and reports the
worst defect seen.  Draw ranges: J in [0.1, 3], alpha in [-3, 3], h_z in
[-2, 2], t in [0, 5].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import hermitian_expm
from .entanglement import (
    ProductStateAngles,
    concurrence,
    concurrence_dm_family,
    concurrence_evolved,
    concurrence_pm_family,
    concurrence_pp_family,
    product_state,
)
from .evolution import (
    PERIODICITY_TOL,
    EvolutionParams,
    TwoSpinState,
    evolve,
    propagator,
    verify_periodicity,
)
from .geometry import (
    generator_pair,
    invariants_of,
    metric_analytic,
    metric_finite_difference,
    metric_from_variances,
)
from .model import (
    Anisotropy,
    ModelKind,
    ModelParams,
    build_hamiltonian,
    dm_conjugation,
    eigensystem,
)

PROPAGATOR_TOL = 1e-12
EIGENSYSTEM_TOL = 1e-12
CONJUGATION_TOL = 1e-12
METRIC_VARIANCE_TOL = 1e-12
METRIC_FD_TOL = 1e-7
# Halving the step must move the finite-difference metric by less than
# this, or the h^2 truncation model is wrong.
METRIC_RICHARDSON_TOL = 1e-6
CONCURRENCE_TOL = 1e-12

J_RANGE = (0.1, 3.0)
ALPHA_RANGE = (-3.0, 3.0)
HZ_RANGE = (-2.0, 2.0)
T_RANGE = (0.0, 5.0)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    max_defect: float
    threshold: float
    passed: bool


def _result(name: str, defect: float, threshold: float) -> SuiteResult:
    return SuiteResult(name, float(defect), threshold, float(defect) <= threshold)


def random_state(rng: np.random.Generator) -> TwoSpinState:
    """Haar-style random pure state from eight normal deviates."""
    vec = rng.normal(size=4) + 1j * rng.normal(size=4)
    return TwoSpinState.normalized(*vec)


def random_params(rng: np.random.Generator, kind: ModelKind) -> ModelParams:
    return ModelParams(
        J=rng.uniform(*J_RANGE),
        alpha=Anisotropy.real(rng.uniform(*ALPHA_RANGE)),
        h_z=rng.uniform(*HZ_RANGE),
        kind=kind,
    )


def propagator_defect(kind: ModelKind, rng: np.random.Generator, draws: int) -> float:
    """Closed-form U(t) against exp(-i H t) from the eigen-oracle."""
    worst = 0.0
    for _ in range(draws):
        params = random_params(rng, kind)
        t = rng.uniform(*T_RANGE)
        u_closed = propagator(params, t)
        u_oracle = hermitian_expm(build_hamiltonian(params), t)
        worst = max(worst, float(np.max(np.abs(u_closed - u_oracle))))
    return worst


def eigensystem_defect(kind: ModelKind, rng: np.random.Generator, draws: int) -> float:
    """Residual |H v - lambda v| plus eigenvalue-multiset agreement."""
    worst = 0.0
    for _ in range(draws):
        params = random_params(rng, kind)
        h = build_hamiltonian(params)
        system = eigensystem(params)
        for value, vec in system.pairs():
            worst = max(worst, float(np.max(np.abs(h @ vec - value * vec))))
        dense = np.linalg.eigvalsh(h)
        worst = max(
            worst, float(np.max(np.abs(np.sort(system.values) - np.sort(dense))))
        )
    return worst


def conjugation_defect(rng: np.random.Generator, draws: int) -> float:
    """V H V^dag against the directly built DM Hamiltonian."""
    worst = 0.0
    for _ in range(draws):
        heis = random_params(rng, ModelKind.HEISENBERG)
        dm = ModelParams(heis.J, heis.alpha, heis.h_z, ModelKind.DM)
        defect = np.max(
            np.abs(dm_conjugation(build_hamiltonian(heis)) - build_hamiltonian(dm))
        )
        worst = max(worst, float(defect))
    return worst


def metric_defects(
    kind: ModelKind, rng: np.random.Generator, draws: int
) -> tuple[float, float, float]:
    """(analytic vs variance, analytic vs finite difference, step-halving move)."""
    worst_var = 0.0
    worst_fd = 0.0
    worst_move = 0.0
    for _ in range(draws):
        params = random_params(rng, kind)
        state = random_state(rng)
        at = EvolutionParams(rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0))
        closed = metric_analytic(invariants_of(state, kind), params.alpha)
        var = metric_from_variances(state, generator_pair(params))
        fd = metric_finite_difference(state, params.alpha, kind, at, h=1e-4)
        fd_half = metric_finite_difference(state, params.alpha, kind, at, h=5e-5)
        for name in ("g_tt", "g_pp", "g_tp"):
            a = getattr(closed, name)
            worst_var = max(worst_var, abs(a - getattr(var, name)))
            worst_fd = max(worst_fd, abs(a - getattr(fd, name)))
            worst_move = max(worst_move, abs(getattr(fd, name) - getattr(fd_half, name)))
    return worst_var, worst_fd, worst_move


def concurrence_defect(kind: ModelKind, rng: np.random.Generator, draws: int) -> float:
    """Closed-form concurrences against concurrence of the evolved state."""
    worst = 0.0
    for _ in range(draws):
        state = random_state(rng)
        alpha = Anisotropy.real(rng.uniform(*ALPHA_RANGE))
        theta = rng.uniform(0.0, 2.0 * math.pi)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        oracle = concurrence(evolve(state, EvolutionParams(theta, phi), alpha, kind))
        worst = max(
            worst, abs(concurrence_evolved(state, alpha, theta, kind) - oracle)
        )

        chi = rng.uniform(0.0, math.pi)
        azimuth = rng.uniform(0.0, 2.0 * math.pi)
        if kind is ModelKind.DM:
            families = ((concurrence_dm_family, "pm"),)
        else:
            families = ((concurrence_pm_family, "pm"), (concurrence_pp_family, "pp"))
        for closed_form, pattern in families:
            start = product_state(ProductStateAngles(chi, azimuth, pattern))
            oracle = concurrence(
                evolve(start, EvolutionParams(theta, phi), alpha, kind)
            )
            worst = max(worst, abs(closed_form(chi, alpha, theta) - oracle))
    return worst


def _canonical_periodicity_configs(
    kind: ModelKind, alpha: Anisotropy
) -> list[tuple[TwoSpinState, Anisotropy]]:
    """One representative per periodicity case, honoring the model's
    central-amplitude condition (c = b for XXZ, c = -ib for DM)."""
    r = 1.0 / math.sqrt(2.0)
    center_only = TwoSpinState(0.0, 1.0, 0.0, 0.0)
    corners_only = TwoSpinState(r, 0.0, 0.0, r)
    if kind is ModelKind.DM:
        aligned = TwoSpinState(0.5, 0.5, -0.5j, 0.5)
    else:
        aligned = TwoSpinState(0.5, 0.5, 0.5, 0.5)
    generic = TwoSpinState(0.5, 0.3, 0.4, math.sqrt(0.5))
    return [
        (center_only, alpha),
        (corners_only, alpha),
        (aligned, Anisotropy.rational(1)),
        (aligned, Anisotropy.rational(2)),
        (generic, Anisotropy.rational(1, 3)),
        (generic, Anisotropy.real(math.sqrt(2.0))),
    ]


def periodicity_defect(
    kind: ModelKind, alpha: Anisotropy, initial: TwoSpinState
) -> float:
    """Worst shift-relation defect over the six canonical cases plus the
    caller's own configuration."""
    configs = _canonical_periodicity_configs(kind, alpha)
    configs.append((initial, alpha))
    worst = 0.0
    for state, al in configs:
        report = verify_periodicity(state, al, kind)
        worst = max(worst, report.max_fidelity_defect)
    return worst


def run_verify(
    params: ModelParams,
    initial: TwoSpinState,
    *,
    draws: int = 60,
    seed: int = 2026,
    inject_defect: str | None = None,
) -> dict:
    """Run every suite for one configuration; report defects and verdicts.

    ``inject_defect`` names a suite whose measured defect is bumped above
    threshold before the verdict; it exists so the failure path of the
    command-line wrapper stays testable against a correct library.
    """
    rng = np.random.default_rng(seed)
    kind = params.kind
    results = [
        _result("propagator", propagator_defect(kind, rng, draws), PROPAGATOR_TOL),
        _result("eigensystem", eigensystem_defect(kind, rng, draws), EIGENSYSTEM_TOL),
    ]
    if kind is ModelKind.DM:
        results.append(
            _result("dm_conjugation", conjugation_defect(rng, draws), CONJUGATION_TOL)
        )
    var_defect, fd_defect, move = metric_defects(kind, rng, max(10, draws // 2))
    results.append(_result("metric_variance", var_defect, METRIC_VARIANCE_TOL))
    results.append(_result("metric_finite_difference", fd_defect, METRIC_FD_TOL))
    results.append(_result("metric_step_halving", move, METRIC_RICHARDSON_TOL))
    results.append(
        _result("concurrence", concurrence_defect(kind, rng, draws), CONCURRENCE_TOL)
    )
    results.append(
        _result(
            "periodicity",
            periodicity_defect(kind, params.alpha, initial),
            PERIODICITY_TOL,
        )
    )
    if inject_defect is not None:
        bumped = []
        known = {r.name for r in results}
        if inject_defect not in known:
            raise ValueError(f"unknown suite {inject_defect!r}")
        for r in results:
            if r.name == inject_defect:
                r = _result(r.name, r.max_defect + 1e-3, r.threshold)
            bumped.append(r)
        results = bumped
    frac = params.alpha.as_rational()
    return {
        "schema_version": 1,
        "model": kind.value,
        "J": params.J,
        "alpha": {
            "value": params.alpha.value,
            "exact": None if frac is None else f"{frac.numerator}/{frac.denominator}",
        },
        "h_z": params.h_z,
        "draws": draws,
        "seed": seed,
        "suites": [
            {
                "name": r.name,
                "max_defect": r.max_defect,
                "threshold": r.threshold,
                "passed": r.passed,
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
