"""Concurrence along the evolution and the product-state families.

For a pure two-spin state the concurrence is C = 2 |a d - b c|.  Under
either model the field angle phi enters amplitudes only through opposite
corner phases, so C depends on theta alone:

    XXZ   C(theta) = 2 | a d e^{-2 i alpha theta} - b c cos 2theta
                         + (i/2)(b^2 + c^2) sin 2theta |
    DM    C(theta) = 2 | a d e^{-2 i alpha theta} - b c cos 2theta
                         + (1/2)(b^2 - c^2) sin 2theta |

Initial product states are parametrized by Bloch angles (chi, gamma) of
the single-spin kets

    |+> =  cos(chi/2) |u> + sin(chi/2) e^{i gamma} |d>
    |-> = -sin(chi/2) |u> + cos(chi/2) e^{i gamma} |d>

combined in the four patterns +-, -+, ++, --.  The resulting concurrence
curves collapse to closed forms in (chi, alpha, theta); the azimuth
gamma factors out of every one of them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import AngleOutOfRange
from .evolution import TwoSpinState
from .geometry import StateInvariants
from .model import Anisotropy, ModelKind, as_anisotropy


class Pattern(Enum):
    """Which single-spin kets the product state combines."""

    PLUS_MINUS = "pm"
    MINUS_PLUS = "mp"
    PLUS_PLUS = "pp"
    MINUS_MINUS = "mm"

    @classmethod
    def coerce(cls, pattern: "Pattern | str") -> "Pattern":
        if isinstance(pattern, cls):
            return pattern
        text = str(pattern).strip().lower().replace("-", "_")
        aliases = {
            "pm": cls.PLUS_MINUS,
            "plus_minus": cls.PLUS_MINUS,
            "mp": cls.MINUS_PLUS,
            "minus_plus": cls.MINUS_PLUS,
            "pp": cls.PLUS_PLUS,
            "plus_plus": cls.PLUS_PLUS,
            "mm": cls.MINUS_MINUS,
            "minus_minus": cls.MINUS_MINUS,
        }
        if text not in aliases:
            raise ValueError(f"unknown product pattern {pattern!r}")
        return aliases[text]


@dataclass(frozen=True)
class ProductStateAngles:
    """Bloch angles and pattern selecting an initial product state."""

    chi: float
    gamma_angle: float
    pattern: Pattern

    def __post_init__(self):
        object.__setattr__(self, "chi", float(self.chi))
        object.__setattr__(self, "gamma_angle", float(self.gamma_angle))
        object.__setattr__(self, "pattern", Pattern.coerce(self.pattern))
        if not 0.0 <= self.chi <= math.pi:
            raise AngleOutOfRange("chi must lie in [0, pi]")
        if not 0.0 <= self.gamma_angle <= 2.0 * math.pi:
            raise AngleOutOfRange("gamma must lie in [0, 2 pi]")


@dataclass(frozen=True)
class ConcurrenceScan:
    """Concurrence samples along theta for one configuration."""

    kind: ModelKind
    alpha: Anisotropy
    samples: tuple[tuple[float, float], ...]
    chi: float | None = None
    pattern: Pattern | None = None


def concurrence(state: TwoSpinState) -> float:
    """C = 2 |a d - b c| of a pure state."""
    return 2.0 * abs(state.a * state.d - state.b * state.c)


def concurrence_evolved(
    initial: TwoSpinState,
    alpha,
    theta: float,
    kind: ModelKind | str = ModelKind.HEISENBERG,
) -> float:
    """Closed-form concurrence of the evolved state; phi-independent."""
    al = as_anisotropy(alpha).value
    kind = ModelKind.coerce(kind)
    theta = float(theta)
    a, b, c, d = initial.a, initial.b, initial.c, initial.d
    corner = a * d * cmath.exp(-2j * al * theta)
    cos2 = math.cos(2.0 * theta)
    sin2 = math.sin(2.0 * theta)
    if kind is ModelKind.DM:
        center = -b * c * cos2 + 0.5 * (b * b - c * c) * sin2
    else:
        center = -b * c * cos2 + 0.5j * (b * b + c * c) * sin2
    return 2.0 * abs(corner + center)


def product_state(angles: ProductStateAngles) -> TwoSpinState:
    """Initial product state for the given Bloch angles and pattern."""
    half = 0.5 * angles.chi
    azimuth = cmath.exp(1j * angles.gamma_angle)
    plus = (math.cos(half), math.sin(half) * azimuth)
    minus = (-math.sin(half), math.cos(half) * azimuth)
    first, second = {
        Pattern.PLUS_MINUS: (plus, minus),
        Pattern.MINUS_PLUS: (minus, plus),
        Pattern.PLUS_PLUS: (plus, plus),
        Pattern.MINUS_MINUS: (minus, minus),
    }[angles.pattern]
    return TwoSpinState(
        first[0] * second[0],
        first[0] * second[1],
        first[1] * second[0],
        first[1] * second[1],
    )


def concurrence_pm_family(chi: float, alpha, theta: float) -> float:
    """XXZ concurrence of the +- (equivalently -+) product family:

    (1/2) sqrt( sin^4 chi (cos 2 alpha theta - cos 2 theta)^2
                + ((1 + cos^2 chi) sin 2 theta
                   + sin^2 chi sin 2 alpha theta)^2 )
    """
    al = as_anisotropy(alpha).value
    chi, theta = float(chi), float(theta)
    sin2chi = math.sin(chi) ** 2
    even = sin2chi * (math.cos(2.0 * al * theta) - math.cos(2.0 * theta))
    odd = (1.0 + math.cos(chi) ** 2) * math.sin(2.0 * theta) + sin2chi * math.sin(
        2.0 * al * theta
    )
    return 0.5 * math.hypot(even, odd)


def concurrence_pp_family(chi: float, alpha, theta: float) -> float:
    """XXZ concurrence of the ++ (equivalently --) product family:

    sin^2 chi |sin((alpha - 1) theta)|
    """
    al = as_anisotropy(alpha).value
    return math.sin(float(chi)) ** 2 * abs(math.sin((al - 1.0) * float(theta)))


def concurrence_dm_family(chi: float, alpha, theta: float) -> float:
    """DM concurrence of the +- product family:

    (1/2) sqrt( sin^4 chi sin^2 2 alpha theta
                + (sin^2 chi (cos 2 theta - cos 2 alpha theta)
                   + 2 cos chi sin 2 theta)^2 )
    """
    al = as_anisotropy(alpha).value
    chi, theta = float(chi), float(theta)
    sin2chi = math.sin(chi) ** 2
    odd = sin2chi * math.sin(2.0 * al * theta)
    even = sin2chi * (
        math.cos(2.0 * theta) - math.cos(2.0 * al * theta)
    ) + 2.0 * math.cos(chi) * math.sin(2.0 * theta)
    return 0.5 * math.hypot(odd, even)


def theta_max_entanglement(alpha, pattern: Pattern | str) -> float | None:
    """First positive theta where the chi = pi/2 family reaches C = 1.

    At chi = pi/2 the +-/-+ curve is |sin((alpha + 1) theta)| and the
    ++/-- curve is |sin((alpha - 1) theta)|, so the first unit maximum
    sits at pi / (2 |alpha +/- 1|).  None when the curve is identically
    zero (alpha = -1 for +-/-+, alpha = +1 for ++/--).
    """
    al = as_anisotropy(alpha).value
    pattern = Pattern.coerce(pattern)
    if pattern in (Pattern.PLUS_MINUS, Pattern.MINUS_PLUS):
        rate = al + 1.0
    else:
        rate = al - 1.0
    if abs(rate) <= 1e-12:
        return None
    return math.pi / (2.0 * abs(rate))


def constant_entanglement_radius(
    inv: StateInvariants, gamma: float, case_id: int
) -> float | None:
    """Radius gamma beta sqrt(A - D^2) of the constant-concurrence circle.

    The field angle phi changes no concurrence, so each periodicity case
    traces its phi-circle at constant entanglement: beta = 1/2 for case 2
    (phi-period pi) and beta = 1 for cases 3-6 (phi-period 2 pi).  Case 1
    has no phi motion at all, hence None.
    """
    if case_id not in (1, 2, 3, 4, 5, 6):
        raise ValueError(f"case_id must be 1..6, got {case_id!r}")
    if case_id == 1:
        return None
    beta = 0.5 if case_id == 2 else 1.0
    return float(gamma) * beta * math.sqrt(max(inv.A - inv.D**2, 0.0))


def scan_concurrence(
    initial: TwoSpinState,
    alpha,
    kind: ModelKind | str,
    thetas,
    chi: float | None = None,
    pattern: Pattern | str | None = None,
) -> ConcurrenceScan:
    """Sample the evolved concurrence on a theta grid."""
    alpha = as_anisotropy(alpha)
    kind = ModelKind.coerce(kind)
    samples = tuple(
        (float(t), concurrence_evolved(initial, alpha, float(t), kind))
        for t in thetas
    )
    return ConcurrenceScan(
        kind=kind,
        alpha=alpha,
        samples=samples,
        chi=None if chi is None else float(chi),
        pattern=None if pattern is None else Pattern.coerce(pattern),
    )
