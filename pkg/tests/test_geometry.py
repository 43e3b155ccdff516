"""Tests for the metric computed three ways and the manifold classifier."""

import math

import numpy as np
import pytest

from twospin import (
    Anisotropy,
    EvolutionParams,
    GeneratorPair,
    IDENTITY2,
    ManifoldKind,
    ModelKind,
    ModelParams,
    NonCommutingGenerators,
    NonHermitianInput,
    SIGMA_X,
    SIGMA_Z,
    StateInvariants,
    StepOutOfRange,
    TwoSpinState,
    classify_manifold,
    generator_pair,
    invariants_of,
    kron2,
    metric_analytic,
    metric_finite_difference,
    metric_from_variances,
    product_state,
    ProductStateAngles,
)

R = 1.0 / math.sqrt(2.0)
KINDS = (ModelKind.HEISENBERG, ModelKind.DM)
COMPONENTS = ("g_tt", "g_pp", "g_tp")


def random_state(rng):
    vec = rng.normal(size=4) + 1j * rng.normal(size=4)
    return TwoSpinState.normalized(*vec)


def random_params(rng, kind):
    return ModelParams(
        J=rng.uniform(0.1, 3.0),
        alpha=Anisotropy.real(rng.uniform(-3.0, 3.0)),
        h_z=rng.uniform(-2.0, 2.0),
        kind=kind,
    )


class TestInvariants:
    def test_center_only_state(self):
        inv = invariants_of(TwoSpinState(0, 1, 0, 0), ModelKind.HEISENBERG)
        assert (inv.A, inv.B, inv.D) == (0.0, 1.0, 0.0)

    def test_corner_state(self):
        inv = invariants_of(TwoSpinState(R, 0, 0, R), ModelKind.HEISENBERG)
        assert abs(inv.A - 1.0) < 1e-15
        assert inv.B == 0.0
        assert abs(inv.D) < 1e-15

    def test_b_depends_on_model(self):
        s = TwoSpinState(0, R, R, 0)
        assert invariants_of(s, ModelKind.HEISENBERG).B < 1e-15
        # DM compares b against ic: |b - ic|^2 = |r - ir|^2 = 1
        assert abs(invariants_of(s, ModelKind.DM).B - 1.0) < 1e-15

    def test_ranges(self):
        rng = np.random.default_rng(41)
        for kind in KINDS:
            for _ in range(100):
                inv = invariants_of(random_state(rng), kind)
                assert -1e-15 <= inv.A <= 1.0 + 1e-12
                assert -1e-15 <= inv.B <= 2.0 + 1e-12
                assert abs(inv.D) <= inv.A + 1e-15


class TestMetricAnalytic:
    def test_center_only_example(self):
        g = metric_analytic(StateInvariants(0.0, 1.0, 0.0), 2.0)
        assert (g.g_tt, g.g_pp, g.g_tp) == (1.0, 0.0, 0.0)

    def test_corner_example_any_alpha(self):
        for alpha in (-2.0, 0.3, 1.0, 4.5):
            g = metric_analytic(StateInvariants(1.0, 0.0, 0.0), alpha)
            assert abs(g.g_tt) < 1e-15
            assert g.g_pp == 1.0
            assert g.g_tp == 0.0

    def test_gamma_scales_quadratically(self):
        inv = StateInvariants(0.4, 0.9, 0.1)
        g1 = metric_analytic(inv, 1.7, gamma=1.0)
        g3 = metric_analytic(inv, 1.7, gamma=3.0)
        for name in COMPONENTS:
            assert abs(getattr(g3, name) - 9.0 * getattr(g1, name)) < 1e-12

    def test_isotropic_reduction(self):
        # alpha = 1: g = gamma^2 [B(2-B), A - D^2, B D]
        rng = np.random.default_rng(42)
        for kind in KINDS:
            for _ in range(100):
                s = random_state(rng)
                inv = invariants_of(s, kind)
                g = metric_analytic(inv, 1.0)
                assert abs(g.g_tt - inv.B * (2.0 - inv.B)) < 1e-12
                assert abs(g.g_pp - (inv.A - inv.D**2)) < 1e-12
                assert abs(g.g_tp - inv.B * inv.D) < 1e-12

    def test_positive_semidefinite(self):
        rng = np.random.default_rng(43)
        for kind in KINDS:
            for _ in range(1000):
                s = random_state(rng)
                g = metric_analytic(invariants_of(s, kind), rng.uniform(-3, 3))
                assert g.g_tt >= -1e-12
                assert g.g_pp >= -1e-12
                assert g.det() >= -1e-12


class TestMetricRoutes:
    def test_three_routes_agree(self):
        rng = np.random.default_rng(44)
        for kind in KINDS:
            for _ in range(60):
                params = random_params(rng, kind)
                s = random_state(rng)
                closed = metric_analytic(invariants_of(s, kind), params.alpha)
                var = metric_from_variances(s, generator_pair(params))
                at = EvolutionParams(rng.uniform(0, 3), rng.uniform(0, 3))
                fd = metric_finite_difference(s, params.alpha, kind, at)
                for name in COMPONENTS:
                    assert abs(getattr(closed, name) - getattr(var, name)) < 1e-12
                    assert abs(getattr(closed, name) - getattr(fd, name)) < 1e-7

    def test_variance_of_field_generator_is_a_minus_d_squared(self):
        rng = np.random.default_rng(45)
        params = ModelParams(1.0, Anisotropy.rational(2), 0.0, ModelKind.HEISENBERG)
        gen = generator_pair(params)
        for _ in range(50):
            s = random_state(rng)
            inv = invariants_of(s, ModelKind.HEISENBERG)
            g = metric_from_variances(s, gen)
            assert abs(g.g_pp - (inv.A - inv.D**2)) < 1e-12

    def test_finite_difference_flat_across_base_points(self):
        rng = np.random.default_rng(46)
        s = random_state(rng)
        alpha = Anisotropy.real(1.9)
        grid = [
            metric_finite_difference(
                s, alpha, ModelKind.HEISENBERG, EvolutionParams(th, ph)
            )
            for th in np.linspace(0.0, 2.0, 5)
            for ph in np.linspace(0.0, 2.0, 5)
        ]
        for name in COMPONENTS:
            values = [getattr(g, name) for g in grid]
            assert max(values) - min(values) < 1e-9

    def test_finite_difference_product_state_example(self):
        # chi = pi/2 product family: A = sin^2(chi)/2 = 1/2, D = 0, so g_pp = 1/2
        s = product_state(ProductStateAngles(math.pi / 2.0, 0.3, "pm"))
        fd = metric_finite_difference(s, 2.0, ModelKind.HEISENBERG, EvolutionParams(0.4, 0.9))
        assert abs(fd.g_pp - 0.5) < 1e-7

    def test_step_window_enforced(self):
        s = TwoSpinState(0, 1, 0, 0)
        for h in (1e-7, 0.1, 0.0, -1e-4):
            with pytest.raises(StepOutOfRange):
                metric_finite_difference(s, 1.0, ModelKind.HEISENBERG, EvolutionParams(0, 0), h=h)

    def test_step_window_bounds_accepted(self):
        s = TwoSpinState(0, 1, 0, 0)
        for h in (1e-6, 1e-2):
            metric_finite_difference(s, 1.0, ModelKind.HEISENBERG, EvolutionParams(0, 0), h=h)


class TestGeneratorPair:
    def test_built_pair_commutes_and_is_hermitian(self):
        rng = np.random.default_rng(47)
        for kind in KINDS:
            gen = generator_pair(random_params(rng, kind))
            assert np.max(np.abs(gen.h1 - gen.h1.conj().T)) < 1e-12
            assert np.max(np.abs(gen.h1 @ gen.h2 - gen.h2 @ gen.h1)) < 1e-12

    def test_j_cancels_from_first_generator(self):
        alpha = Anisotropy.real(-1.3)
        g_small = generator_pair(ModelParams(0.17, alpha, 0.0, ModelKind.HEISENBERG))
        g_large = generator_pair(ModelParams(2.9, alpha, 0.0, ModelKind.HEISENBERG))
        assert np.max(np.abs(g_small.h1 - g_large.h1)) < 1e-12

    def test_rejects_non_commuting(self):
        with pytest.raises(NonCommutingGenerators):
            GeneratorPair(kron2(SIGMA_X, IDENTITY2), kron2(SIGMA_Z, IDENTITY2))

    def test_rejects_non_hermitian(self):
        bad = np.zeros((4, 4), dtype=complex)
        bad[0, 1] = 1.0
        with pytest.raises(NonHermitianInput):
            GeneratorPair(bad, np.eye(4, dtype=complex))


class TestClassification:
    def test_case_1_circle_over_theta(self):
        m = classify_manifold(TwoSpinState(0, 1, 0, 0), 2.0, ModelKind.HEISENBERG)
        assert m.kind is ManifoldKind.CIRCLE
        assert m.case_id == 1
        assert m.coordinate == "theta"
        # (gamma/2) sqrt(B (2 - B)) with B = 1
        assert abs(m.radius - 0.5) < 1e-12
        assert abs(m.theta_period - math.pi) < 1e-15

    def test_case_2_circle_over_phi(self):
        m = classify_manifold(TwoSpinState(R, 0, 0, R), 2.5, ModelKind.HEISENBERG)
        assert m.kind is ManifoldKind.CIRCLE
        assert m.case_id == 2
        assert m.coordinate == "phi"
        # (gamma/2) sqrt(1 - D^2) with D = 0
        assert abs(m.radius - 0.5) < 1e-12
        assert abs(m.phi_period - math.pi) < 1e-15

    def test_case_3_circle_radius(self):
        m = classify_manifold(TwoSpinState(R, 0.5, 0.5, 0), 1.0, ModelKind.HEISENBERG)
        assert m.kind is ManifoldKind.CIRCLE
        assert m.case_id == 3
        # gamma sqrt(A - D^2) with A = D = 1/2
        assert abs(m.radius - 0.5) < 1e-12
        assert abs(m.phi_period - 2 * math.pi) < 1e-15

    def test_case_4_twisted_torus(self):
        m = classify_manifold(TwoSpinState(0.5, 0.5, 0.5, 0.5), 2.0, ModelKind.HEISENBERG)
        assert m.kind is ManifoldKind.TWISTED_TORUS
        assert m.case_id == 4
        assert abs(m.theta_period - math.pi) < 1e-12
        assert abs(m.phi_period - 2 * math.pi) < 1e-15
        assert m.twist is not None
        assert abs(m.twist.phase - 1.0) < 1e-14

    def test_case_5_torus(self):
        m = classify_manifold(
            TwoSpinState(0.5, 0.3, 0.4, math.sqrt(0.5)),
            Anisotropy.rational(1, 3),
            ModelKind.HEISENBERG,
        )
        assert m.kind is ManifoldKind.TORUS
        assert m.case_id == 5
        assert abs(m.theta_period - 3 * math.pi) < 1e-12
        assert m.twist is None

    def test_case_5_twisted_when_one_even(self):
        m = classify_manifold(
            TwoSpinState(0.5, 0.3, 0.4, math.sqrt(0.5)),
            Anisotropy.rational(1, 2),
            ModelKind.HEISENBERG,
        )
        assert m.kind is ManifoldKind.TWISTED_TORUS
        assert abs(m.theta_period - 2 * math.pi) < 1e-12
        assert abs(m.twist.phase - 1j) < 1e-14

    def test_case_6_cylinder(self):
        m = classify_manifold(
            TwoSpinState(0.5, 0.3, 0.4, math.sqrt(0.5)),
            Anisotropy.real(math.sqrt(2.0)),
            ModelKind.HEISENBERG,
        )
        assert m.kind is ManifoldKind.CYLINDER
        assert m.theta_period is None
        assert abs(m.phi_period - 2 * math.pi) < 1e-15

    def test_point_degeneracies(self):
        for s in (TwoSpinState(0, R, R, 0), TwoSpinState(1, 0, 0, 0)):
            m = classify_manifold(s, 1.7, ModelKind.HEISENBERG)
            assert m.kind is ManifoldKind.POINT
            assert m.radius is None

    def test_point_metric_vanishes(self):
        for s in (
            TwoSpinState(0, R, R, 0),
            TwoSpinState(0, R, -R, 0),
            TwoSpinState(1, 0, 0, 0),
            TwoSpinState(0, 0, 0, 1),
        ):
            for kind in (ModelKind.HEISENBERG,):
                g = metric_analytic(invariants_of(s, kind), 1.7)
                assert max(abs(g.g_tt), abs(g.g_pp), abs(g.g_tp)) < 1e-12

    def test_phi_circles_have_no_theta_metric(self):
        for s, alpha in ((TwoSpinState(R, 0, 0, R), 2.5), (TwoSpinState(R, 0.5, 0.5, 0), 1.0)):
            m = classify_manifold(s, alpha, ModelKind.HEISENBERG)
            assert m.coordinate == "phi"
            g = metric_analytic(invariants_of(s, ModelKind.HEISENBERG), alpha)
            assert abs(g.g_tt) < 1e-12
            assert abs(g.g_tp) < 1e-12

    def test_dm_point_uses_rotated_condition(self):
        # b = ic makes the DM-rotated center aligned; with a = d = 0 it is a point
        s = TwoSpinState(0, 1j * R, R, 0)
        m = classify_manifold(s, 0.7, ModelKind.DM)
        assert m.kind is ManifoldKind.POINT
        # the same state is a genuine circle for the XXZ model
        m = classify_manifold(s, 0.7, ModelKind.HEISENBERG)
        assert m.kind is ManifoldKind.CIRCLE

    def test_gamma_scales_radius(self):
        m1 = classify_manifold(TwoSpinState(0, 1, 0, 0), 2.0, ModelKind.HEISENBERG, gamma=1.0)
        m2 = classify_manifold(TwoSpinState(0, 1, 0, 0), 2.0, ModelKind.HEISENBERG, gamma=2.0)
        assert abs(m2.radius - 2.0 * m1.radius) < 1e-12
