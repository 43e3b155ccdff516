"""Quantum geometry of the evolution manifold.

The evolved-state family psi(theta, phi) carries the Fubini-Study metric

    g_mn = gamma^2 Re( <d_m psi | d_n psi> - <d_m psi|psi><psi|d_n psi> )

with an overall scale gamma.  For either model the metric depends on the
initial state only through three invariants,

    A = |a|^2 + |d|^2
    B = |b - c|^2          (XXZ)     or     |b - i c|^2   (DM)
    D = |a|^2 - |d|^2

and is independent of theta and phi (the manifold is flat):

    g_tt = gamma^2 [ (alpha^2 - 1) A + 1 - ((alpha - 1) A + 1 - B)^2 ]
    g_pp = gamma^2 [ A - D^2 ]
    g_tp = gamma^2 D [ alpha - ((alpha - 1) A + 1 - B) ]

Three independent routes to these numbers are provided: the closed form
above, central finite differences of the evolved state, and the
variance/covariance of the commuting generator pair

    H1 = (exchange + axial) / (2J)        H2 = (sz1 + sz2) / 2

in the initial state.  Global geometry (point, circle, torus, twisted
torus, cylinder) follows from the periodicity case together with metric
radii; a circle's radius is its metric length divided by 2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import ATOL, _c128, _frozen, is_hermitian
from .errors import NonCommutingGenerators, NonHermitianInput, StepOutOfRange
from .evolution import (
    EvolutionParams,
    PhaseShift,
    TwoSpinState,
    _effective_amplitudes,
    evolve,
    periodicity_case,
)
from .model import (
    ModelKind,
    ModelParams,
    as_anisotropy,
    dm_coupling,
    field_term,
    xx_coupling,
    zz_coupling,
)

# Central-difference window: below it rounding noise dominates, above it
# the O(h^2) truncation term does.
FD_STEP_MIN = 1e-6
FD_STEP_MAX = 1e-2
FD_STEP_DEFAULT = 1e-4


@dataclass(frozen=True)
class StateInvariants:
    """The three combinations of initial amplitudes the metric depends on."""

    A: float
    B: float
    D: float


@dataclass(frozen=True)
class MetricTensor:
    """Constant Fubini-Study metric components on (theta, phi)."""

    g_tt: float
    g_pp: float
    g_tp: float
    gamma: float = 1.0

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.g_tt, self.g_tp], [self.g_tp, self.g_pp]])

    def det(self) -> float:
        return self.g_tt * self.g_pp - self.g_tp**2


class ManifoldKind(Enum):
    POINT = "point"
    CIRCLE = "circle"
    TORUS = "torus"
    TWISTED_TORUS = "twisted_torus"
    CYLINDER = "cylinder"


@dataclass(frozen=True)
class ManifoldClass:
    """Global geometry of the trajectory manifold.

    ``case_id`` records which periodicity case produced the class.  For a
    circle, ``coordinate`` names the coordinate that traces it and the
    matching period field holds its length in coordinate units.  A
    twisted torus stores the diagonal identification as ``twist``.
    """

    kind: ManifoldKind
    case_id: int
    radius: float | None = None
    coordinate: str | None = None
    theta_period: float | None = None
    phi_period: float | None = None
    twist: PhaseShift | None = None


@dataclass(frozen=True)
class GeneratorPair:
    """Commuting Hermitian generators of the theta and phi directions."""

    h1: np.ndarray
    h2: np.ndarray

    def __post_init__(self):
        h1, h2 = _c128(self.h1), _c128(self.h2)
        if h1.shape != (4, 4) or h2.shape != (4, 4):
            raise ValueError("generators must be 4x4")
        if not (is_hermitian(h1) and is_hermitian(h2)):
            raise NonHermitianInput("generators must be Hermitian")
        if np.max(np.abs(h1 @ h2 - h2 @ h1)) > ATOL:
            raise NonCommutingGenerators(
                "variance formula requires commuting generators"
            )
        object.__setattr__(self, "h1", _frozen(h1))
        object.__setattr__(self, "h2", _frozen(h2))


def generator_pair(params: ModelParams) -> GeneratorPair:
    """Build (exchange + axial)/(2J) and (sz1 + sz2)/2 for the model."""
    if params.kind is ModelKind.DM:
        exchange = dm_coupling(params.J)
    else:
        exchange = xx_coupling(params.J)
    h1 = (exchange + zz_coupling(params.J, params.alpha.value)) / (2.0 * params.J)
    h2 = field_term(0.5)
    return GeneratorPair(h1, h2)


def invariants_of(initial: TwoSpinState, kind: ModelKind | str) -> StateInvariants:
    """Metric invariants A, B, D of an initial state.

    B compares the central amplitudes the way the model's exchange
    rotation mixes them: |b - c|^2 for XXZ, |b - ic|^2 for DM.
    """
    kind = ModelKind.coerce(kind)
    a, b, c, d = _effective_amplitudes(initial, kind)
    return StateInvariants(
        A=abs(a) ** 2 + abs(d) ** 2,
        B=abs(b - c) ** 2,
        D=abs(a) ** 2 - abs(d) ** 2,
    )


def metric_analytic(
    inv: StateInvariants, alpha, gamma: float = 1.0
) -> MetricTensor:
    """Closed-form metric from the invariants."""
    al = as_anisotropy(alpha).value
    gamma = float(gamma)
    a_, b_, d_ = inv.A, inv.B, inv.D
    w = (al - 1.0) * a_ + 1.0 - b_
    g2 = gamma * gamma
    return MetricTensor(
        g_tt=g2 * ((al * al - 1.0) * a_ + 1.0 - w * w),
        g_pp=g2 * (a_ - d_ * d_),
        g_tp=g2 * d_ * (al - w),
        gamma=gamma,
    )


def metric_finite_difference(
    initial: TwoSpinState,
    alpha,
    kind: ModelKind | str,
    at: EvolutionParams = EvolutionParams(0.0, 0.0),
    gamma: float = 1.0,
    h: float = FD_STEP_DEFAULT,
) -> MetricTensor:
    """Metric by central differences of the full evolved state.

    Second-order accurate in h; gauge-invariant because the projector
    term removes the component of each tangent along psi itself, so the
    global phase convention of :func:`evolve` drops out.
    """
    h = float(h)
    if not (FD_STEP_MIN <= h <= FD_STEP_MAX):
        raise StepOutOfRange(
            f"step {h!r} outside [{FD_STEP_MIN}, {FD_STEP_MAX}]"
        )
    gamma = float(gamma)

    def state(theta: float, phi: float) -> np.ndarray:
        return evolve(initial, EvolutionParams(theta, phi), alpha, kind).vector

    th, ph = at.theta, at.phi
    psi = state(th, ph)
    d_theta = (state(th + h, ph) - state(th - h, ph)) / (2.0 * h)
    d_phi = (state(th, ph + h) - state(th, ph - h)) / (2.0 * h)

    def component(u: np.ndarray, v: np.ndarray) -> float:
        raw = np.vdot(u, v) - np.vdot(u, psi) * np.vdot(psi, v)
        return gamma * gamma * float(raw.real)

    return MetricTensor(
        g_tt=component(d_theta, d_theta),
        g_pp=component(d_phi, d_phi),
        g_tp=component(d_theta, d_phi),
        gamma=gamma,
    )


def metric_from_variances(
    initial: TwoSpinState,
    gen: GeneratorPair,
    gamma: float = 1.0,
) -> MetricTensor:
    """Metric as generator variances and covariance in the initial state.

    For commuting generators the family is psi = exp(-i theta H1
    - i phi H2) psi_0, so g_tt = gamma^2 Var(H1), g_pp = gamma^2 Var(H2)
    and g_tp = gamma^2 Cov(H1, H2), all evaluated in psi_0.
    """
    gamma = float(gamma)
    psi = initial.vector
    v1 = gen.h1 @ psi
    v2 = gen.h2 @ psi
    e1 = float(np.vdot(psi, v1).real)
    e2 = float(np.vdot(psi, v2).real)
    g2 = gamma * gamma
    return MetricTensor(
        g_tt=g2 * (float(np.vdot(v1, v1).real) - e1 * e1),
        g_pp=g2 * (float(np.vdot(v2, v2).real) - e2 * e2),
        g_tp=g2 * (float(np.vdot(v1, v2).real) - e1 * e2),
        gamma=gamma,
    )


def classify_manifold(
    initial: TwoSpinState,
    alpha,
    kind: ModelKind | str,
    gamma: float = 1.0,
) -> ManifoldClass:
    """Global geometry of the trajectory manifold of an initial state.

    Dispatch follows :func:`periodicity_case`; radii come from the metric
    via length / (2 pi):

    1 degenerate   point                       (a = d = 0, b = +/- c)
    2 degenerate   point                       (only one corner amplitude)
    1              circle over theta in [0, pi],  radius (gamma/2) sqrt(B (2 - B))
    2              circle over phi in [0, pi],    radius (gamma/2) sqrt(1 - D^2)
    3              circle over phi in [0, 2 pi],  radius gamma sqrt(A - D^2)
    4              twisted torus, theta-period pi/|alpha -+ 1|, phi-period 2 pi
    5              torus (q pi, 2 pi); twisted when exactly one of p, q is even
    6              cylinder, phi-period 2 pi, theta unbounded
    """
    alpha = as_anisotropy(alpha)
    kind = ModelKind.coerce(kind)
    case_id, degenerate, shifts = periodicity_case(initial, alpha, kind)
    if degenerate:
        return ManifoldClass(kind=ManifoldKind.POINT, case_id=case_id)
    inv = invariants_of(initial, kind)
    g = metric_analytic(inv, alpha, gamma)
    if case_id == 1:
        return ManifoldClass(
            kind=ManifoldKind.CIRCLE,
            case_id=1,
            radius=math.sqrt(max(g.g_tt, 0.0)) * 0.5,
            coordinate="theta",
            theta_period=math.pi,
        )
    if case_id == 2:
        return ManifoldClass(
            kind=ManifoldKind.CIRCLE,
            case_id=2,
            radius=math.sqrt(max(g.g_pp, 0.0)) * 0.5,
            coordinate="phi",
            phi_period=math.pi,
        )
    if case_id == 3:
        return ManifoldClass(
            kind=ManifoldKind.CIRCLE,
            case_id=3,
            radius=math.sqrt(max(g.g_pp, 0.0)),
            coordinate="phi",
            phi_period=2.0 * math.pi,
        )
    if case_id == 4:
        twist = shifts[1]
        return ManifoldClass(
            kind=ManifoldKind.TWISTED_TORUS,
            case_id=4,
            theta_period=abs(twist.d_theta),
            phi_period=2.0 * math.pi,
            twist=twist,
        )
    if case_id == 5:
        frac = alpha.as_rational()
        twisted = (frac.numerator % 2 == 0) != (frac.denominator % 2 == 0)
        return ManifoldClass(
            kind=ManifoldKind.TWISTED_TORUS if twisted else ManifoldKind.TORUS,
            case_id=5,
            theta_period=frac.denominator * math.pi,
            phi_period=2.0 * math.pi,
            twist=shifts[1] if twisted else None,
        )
    return ManifoldClass(
        kind=ManifoldKind.CYLINDER,
        case_id=6,
        phi_period=2.0 * math.pi,
    )
