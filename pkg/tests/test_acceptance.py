"""Acceptance suite: one test per advertised package guarantee.

Each test checks one headline guarantee at its contractual tolerance and
prints a single PASS line with the measured defect.  Run

    pytest tests/test_acceptance.py -v -s

to see every line.  The tolerances here are part of the package contract
and must not be loosened.
"""

import cmath
import math
import time

import numpy as np

from twospin import (
    Anisotropy,
    EvolutionParams,
    ManifoldKind,
    ModelKind,
    ModelParams,
    Pattern,
    ProductStateAngles,
    TwoSpinState,
    build_hamiltonian,
    classify_manifold,
    concurrence,
    concurrence_dm_family,
    concurrence_evolved,
    concurrence_pm_family,
    concurrence_pp_family,
    dm_conjugation,
    eigensystem,
    evolve,
    generator_pair,
    hermitian_expm,
    invariants_of,
    metric_analytic,
    metric_finite_difference,
    metric_from_variances,
    product_state,
    propagator,
    theta_max_entanglement,
    verify_periodicity,
)

KINDS = (ModelKind.HEISENBERG, ModelKind.DM)
J_RANGE = (0.1, 3.0)
ALPHA_RANGE = (-3.0, 3.0)
HZ_RANGE = (-2.0, 2.0)
T_RANGE = (0.0, 5.0)


def _pass(line: str) -> None:
    print(f"PASS {line}")


def random_params(rng, kind):
    return ModelParams(
        J=rng.uniform(*J_RANGE),
        alpha=Anisotropy.real(rng.uniform(*ALPHA_RANGE)),
        h_z=rng.uniform(*HZ_RANGE),
        kind=kind,
    )


def random_state(rng):
    vec = rng.normal(size=4) + 1j * rng.normal(size=4)
    return TwoSpinState.normalized(*vec)


def test_propagator_matches_exponential_oracle():
    rng = np.random.default_rng(101)
    worst = 0.0
    start = time.perf_counter()
    for kind in KINDS:
        for _ in range(200):
            params = random_params(rng, kind)
            t = rng.uniform(*T_RANGE)
            oracle = hermitian_expm(build_hamiltonian(params), t)
            defect = np.max(np.abs(propagator(params, t) - oracle))
            worst = max(worst, float(defect))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-12
    assert elapsed < 1.0
    _pass(
        "closed-form propagator vs matrix exponential, 200 draws per model: "
        f"max defect {worst:.3e}, {elapsed * 1e3:.0f} ms"
    )


def test_eigensystem_pairs_and_spectrum():
    rng = np.random.default_rng(102)
    worst = 0.0
    for kind in KINDS:
        for _ in range(100):
            params = random_params(rng, kind)
            h = build_hamiltonian(params)
            system = eigensystem(params)
            for value, vec in system.pairs():
                worst = max(worst, float(np.max(np.abs(h @ vec - value * vec))))
            aJ = params.alpha.value * params.J
            formulas = np.sort(
                [
                    aJ + 2.0 * params.h_z,
                    aJ - 2.0 * params.h_z,
                    -aJ + 2.0 * params.J,
                    -aJ - 2.0 * params.J,
                ]
            )
            sorted_values = np.sort(system.values)
            worst = max(worst, float(np.max(np.abs(sorted_values - formulas))))
            worst = max(
                worst, float(np.max(np.abs(sorted_values - np.linalg.eigvalsh(h))))
            )
    assert worst <= 1e-12
    _pass(
        "analytic eigenpairs: residuals and spectrum vs dense solver, "
        f"100 draws per model: max defect {worst:.3e}"
    )


def test_dm_rotation_identity():
    rng = np.random.default_rng(103)
    worst = 0.0
    for _ in range(100):
        heis = random_params(rng, ModelKind.HEISENBERG)
        dm = ModelParams(heis.J, heis.alpha, heis.h_z, ModelKind.DM)
        defect = np.max(
            np.abs(dm_conjugation(build_hamiltonian(heis)) - build_hamiltonian(dm))
        )
        worst = max(worst, float(defect))
    assert worst <= 1e-12
    _pass(
        "single-spin z-rotation maps the XXZ Hamiltonian onto the DM one, "
        f"100 draws: max defect {worst:.3e}"
    )


def test_metric_three_route_agreement():
    rng = np.random.default_rng(104)
    worst_var = 0.0
    worst_fd = 0.0
    for kind in KINDS:
        for _ in range(200):
            params = random_params(rng, kind)
            state = random_state(rng)
            at = EvolutionParams(rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0))
            closed = metric_analytic(invariants_of(state, kind), params.alpha)
            var = metric_from_variances(state, generator_pair(params))
            fd = metric_finite_difference(state, params.alpha, kind, at, h=1e-4)
            for name in ("g_tt", "g_pp", "g_tp"):
                a = getattr(closed, name)
                worst_var = max(worst_var, abs(a - getattr(var, name)))
                worst_fd = max(worst_fd, abs(a - getattr(fd, name)))
    assert worst_var <= 1e-12
    assert worst_fd <= 1e-7
    _pass(
        "metric three ways, 200 (state, alpha) draws per model: "
        f"analytic vs variance {worst_var:.3e}, vs finite difference {worst_fd:.3e}"
    )


def test_metric_flat_across_the_manifold():
    rng = np.random.default_rng(105)
    worst = 0.0
    for _ in range(50):
        kind = KINDS[int(rng.integers(2))]
        state = random_state(rng)
        alpha = Anisotropy.real(rng.uniform(*ALPHA_RANGE))
        thetas = rng.uniform(0.0, 2.0) + np.linspace(0.0, 2.0, 5)
        phis = rng.uniform(0.0, 2.0) + np.linspace(0.0, 2.0, 5)
        grid = [
            metric_finite_difference(state, alpha, kind, EvolutionParams(th, ph))
            for th in thetas
            for ph in phis
        ]
        for name in ("g_tt", "g_pp", "g_tp"):
            values = [getattr(g, name) for g in grid]
            worst = max(worst, max(values) - min(values))
    assert worst < 1e-9
    _pass(
        "finite-difference metric constant on a 5x5 grid, 50 random "
        f"configurations: max component spread {worst:.3e}"
    )


def test_isotropic_metric_reduction():
    rng = np.random.default_rng(106)
    worst = 0.0
    for _ in range(100):
        kind = KINDS[int(rng.integers(2))]
        gamma = float(rng.choice([1.0, math.sqrt(2.0), 2.0]))
        inv = invariants_of(random_state(rng), kind)
        g = metric_analytic(inv, 1.0, gamma)
        g2 = gamma * gamma
        worst = max(worst, abs(g.g_tt - g2 * inv.B * (2.0 - inv.B)))
        worst = max(worst, abs(g.g_pp - g2 * (inv.A - inv.D**2)))
        # cross coefficient of the line element, 2 g_tp = 2 B D gamma^2
        worst = max(worst, abs(2.0 * g.g_tp - 2.0 * g2 * inv.B * inv.D))
    assert worst <= 1e-12
    _pass(
        "alpha = 1 metric reduces to gamma^2 [B(2-B), A-D^2, 2BD], "
        f"100 random states: max defect {worst:.3e}"
    )


def test_periodicity_all_six_cases():
    r = 1.0 / math.sqrt(2.0)
    third = Anisotropy.rational(1, 3)
    worst = 0.0
    for kind in KINDS:
        aligned = (
            TwoSpinState(0.5, 0.5, -0.5j, 0.5)
            if kind is ModelKind.DM
            else TwoSpinState(0.5, 0.5, 0.5, 0.5)
        )
        generic = TwoSpinState(0.5, 0.3, 0.4, math.sqrt(0.5))
        configs = (
            (TwoSpinState(0, 1, 0, 0), Anisotropy.real(1.7), 1),
            (TwoSpinState(r, 0, 0, r), Anisotropy.real(1.7), 2),
            (aligned, Anisotropy.rational(1), 3),
            (aligned, Anisotropy.rational(2), 4),
            (generic, third, 5),
            (generic, Anisotropy.real(math.sqrt(2.0)), 6),
        )
        for state, alpha, expected_case in configs:
            report = verify_periodicity(state, alpha, kind)
            assert report.case_id == expected_case
            assert report.verified
            assert report.max_fidelity_defect < 1e-10
            worst = max(worst, report.max_fidelity_defect)
        # odd/odd rational case in closed form: shifting theta by 3 pi
        # multiplies the alpha = 1/3 family by exp(-i pi / 2)
        for theta0, phi0 in ((0.731, 0.529), (0.2, 1.1)):
            base = evolve(generic, EvolutionParams(theta0, phi0), third, kind)
            moved = evolve(
                generic, EvolutionParams(theta0 + 3.0 * math.pi, phi0), third, kind
            )
            defect = np.max(
                np.abs(moved.vector - cmath.exp(-0.5j * math.pi) * base.vector)
            )
            assert defect < 1e-10
            worst = max(worst, float(defect))
    assert worst < 1e-10
    _pass(
        "all six periodicity cases verified at 8 random base points per "
        f"model, plus the explicit 3 pi shift at alpha = 1/3: max defect {worst:.3e}"
    )


def test_concurrence_closed_forms_match_evolution():
    rng = np.random.default_rng(108)
    worst = 0.0
    for kind in KINDS:
        for _ in range(1000):
            state = random_state(rng)
            alpha = rng.uniform(*ALPHA_RANGE)
            theta = rng.uniform(0.0, 2.0 * math.pi)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            oracle = concurrence(evolve(state, EvolutionParams(theta, phi), alpha, kind))
            worst = max(worst, abs(concurrence_evolved(state, alpha, theta, kind) - oracle))
    families = (
        (concurrence_pm_family, Pattern.PLUS_MINUS, ModelKind.HEISENBERG),
        (concurrence_pp_family, Pattern.PLUS_PLUS, ModelKind.HEISENBERG),
        (concurrence_dm_family, Pattern.PLUS_MINUS, ModelKind.DM),
    )
    for closed_form, pattern, kind in families:
        for _ in range(1000):
            chi = rng.uniform(0.0, math.pi)
            azimuth = rng.uniform(0.0, 2.0 * math.pi)
            alpha = rng.uniform(*ALPHA_RANGE)
            theta = rng.uniform(0.0, 2.0 * math.pi)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            start = product_state(ProductStateAngles(chi, azimuth, pattern))
            oracle = concurrence(evolve(start, EvolutionParams(theta, phi), alpha, kind))
            worst = max(worst, abs(closed_form(chi, alpha, theta) - oracle))
    assert worst <= 1e-12
    _pass(
        "concurrence closed forms vs direct evolution, 1000 draws for the "
        f"general form per model and per product family: max defect {worst:.3e}"
    )


def test_maximal_entanglement_schedule():
    worst = 0.0
    previous = math.inf
    for alpha in (0.0, 1.0, 2.0, 3.0, 5.0):
        theta_star = theta_max_entanglement(alpha, Pattern.PLUS_MINUS)
        assert abs(theta_star - math.pi / (2.0 * (alpha + 1.0))) < 1e-15
        defect = abs(concurrence_pm_family(math.pi / 2.0, alpha, theta_star) - 1.0)
        assert defect <= 1e-12
        worst = max(worst, defect)
        assert theta_star < previous
        previous = theta_star
    _pass(
        "equatorial +- family reaches C = 1 at pi/(2(alpha+1)) for alpha in "
        f"{{0,1,2,3,5}}, strictly earlier as alpha grows: max defect {worst:.3e}"
    )


def test_known_concurrence_points():
    ud = TwoSpinState(0, 1, 0, 0)
    worst = 0.0
    for alpha in np.linspace(-3.0, 3.0, 13):
        for kind in KINDS:
            defect = abs(concurrence_evolved(ud, float(alpha), math.pi / 4.0, kind) - 1.0)
            assert defect <= 1e-12
            worst = max(worst, defect)
    for theta in np.linspace(0.0, 2.0 * math.pi, 100):
        value = concurrence_pm_family(math.pi / 2.0, -1.0, float(theta))
        assert value <= 1e-12
        worst = max(worst, value)
    grid = np.linspace(0.0, math.pi, 10_000)
    peak = max(concurrence_dm_family(math.pi / 2.0, 1.0, float(t)) for t in grid)
    assert abs(peak - 0.5) < 1e-6
    _pass(
        "known points: C = 1 at theta = pi/4 from the up-down state, the "
        "alpha = -1 equatorial +- family stays at 0, and the equatorial DM "
        f"curve at alpha = 1 peaks at 1/2 on a 10^4 grid (peak {peak:.9f})"
    )


def test_manifold_classification_golden_set():
    r = 1.0 / math.sqrt(2.0)
    heis = ModelKind.HEISENBERG

    m = classify_manifold(TwoSpinState(0, 1, 0, 0), 2.0, heis)
    assert m.kind is ManifoldKind.CIRCLE and m.case_id == 1
    assert abs(m.radius - 0.5) <= 1e-12
    assert abs(m.theta_period - math.pi) <= 1e-12

    m = classify_manifold(TwoSpinState(r, 0, 0, r), 2.5, heis)
    assert m.kind is ManifoldKind.CIRCLE and m.case_id == 2
    assert abs(m.radius - 0.5) <= 1e-12
    assert abs(m.phi_period - math.pi) <= 1e-12

    m = classify_manifold(TwoSpinState(r, 0.5, 0.5, 0), 1.0, heis)
    assert m.kind is ManifoldKind.CIRCLE and m.case_id == 3
    assert abs(m.radius - 0.5) <= 1e-12
    assert abs(m.phi_period - 2.0 * math.pi) <= 1e-12

    m = classify_manifold(TwoSpinState(0.5, 0.5, 0.5, 0.5), 2.0, heis)
    assert m.kind is ManifoldKind.TWISTED_TORUS and m.case_id == 4
    assert abs(m.theta_period - math.pi) <= 1e-12
    assert abs(m.phi_period - 2.0 * math.pi) <= 1e-12
    assert abs(m.twist.phase - 1.0) <= 1e-12

    generic = TwoSpinState(0.5, 0.3, 0.4, math.sqrt(0.5))
    m = classify_manifold(generic, Anisotropy.rational(1, 3), heis)
    assert m.kind is ManifoldKind.TORUS and m.case_id == 5
    assert abs(m.theta_period - 3.0 * math.pi) <= 1e-12
    assert abs(m.phi_period - 2.0 * math.pi) <= 1e-12
    assert m.twist is None

    m = classify_manifold(generic, math.sqrt(2.0), heis)
    assert m.kind is ManifoldKind.CYLINDER and m.case_id == 6
    assert m.theta_period is None
    assert abs(m.phi_period - 2.0 * math.pi) <= 1e-12

    for point in (TwoSpinState(0, r, r, 0), TwoSpinState(1, 0, 0, 0)):
        m = classify_manifold(point, 1.7, heis)
        assert m.kind is ManifoldKind.POINT

    _pass(
        "manifold classification golden set: six worked examples plus both "
        "degenerate points, radii and periods within 1e-12"
    )
