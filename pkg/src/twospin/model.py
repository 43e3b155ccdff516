"""Two-spin Hamiltonians and their exact eigensystems.

Two interaction types are covered, both in a uniform z-axis field:

    XXZ exchange    H  = J (sx sx + sy sy) + alpha J sz sz + h_z (sz1 + sz2)
    DM exchange     H' = J (sx sy - sy sx) + alpha J sz sz + h_z (sz1 + sz2)

with sx sx shorthand for the tensor product of Pauli matrices on spins 1
and 2 (hbar = 1).  The three terms of either Hamiltonian commute
pairwise, so both models share the spectrum

    { alpha J + 2 h_z,  alpha J - 2 h_z,  -alpha J + 2J,  -alpha J - 2J }

and differ only through the central eigenvectors.  Conjugating the XXZ
Hamiltonian by a z-rotation of spin 1 through pi/2 yields the DM one,
and that rotation is exposed here as :func:`dm_conjugation`.

The anisotropy ratio alpha is carried exactly when supplied as a
fraction; periodicity analysis elsewhere depends on whether alpha is
rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .algebra import IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z, _c128, _frozen, kron2
from .errors import DegenerateCoupling

# Continued-fraction recovery of a rational alpha from a decimal is
# attempted up to this denominator and accepted at this tolerance.
RATIONAL_MAX_DENOMINATOR = 1000
RATIONAL_TOL = 1e-12


class ModelKind(Enum):
    """Which exchange term the Hamiltonian carries."""

    HEISENBERG = "heisenberg"
    DM = "dm"

    @classmethod
    def coerce(cls, kind: "ModelKind | str") -> "ModelKind":
        if isinstance(kind, cls):
            return kind
        return cls(str(kind).strip().lower())


@dataclass(frozen=True)
class Anisotropy:
    """Anisotropy ratio alpha, kept exact when supplied as a fraction.

    ``value`` is the float actually used in arithmetic; ``exact`` is the
    Fraction it came from, or None when alpha entered as a plain decimal.
    """

    value: float
    exact: Fraction | None = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError("anisotropy must be finite")

    @classmethod
    def rational(cls, p: int, q: int = 1) -> "Anisotropy":
        frac = Fraction(p, q)
        return cls(float(frac), frac)

    @classmethod
    def real(cls, x: float) -> "Anisotropy":
        return cls(float(x), None)

    @classmethod
    def parse(cls, text: str) -> "Anisotropy":
        """Parse 'p/q' or an integer as exact, anything else as decimal."""
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            return cls.rational(int(p), int(q))
        try:
            return cls.rational(int(text))
        except ValueError:
            return cls.real(float(text))

    def as_rational(self) -> Fraction | None:
        """Exact fraction if known, else a continued-fraction recovery.

        Decimal values are matched against fractions with denominator at
        most RATIONAL_MAX_DENOMINATOR and accepted only when they agree
        within RATIONAL_TOL; otherwise None (treated as irrational).
        """
        if self.exact is not None:
            return self.exact
        guess = Fraction(self.value).limit_denominator(RATIONAL_MAX_DENOMINATOR)
        if abs(self.value - float(guess)) <= RATIONAL_TOL:
            return guess
        return None

    def __float__(self) -> float:
        return self.value


def as_anisotropy(alpha) -> Anisotropy:
    """Coerce float / int / Fraction / str / Anisotropy to Anisotropy."""
    if isinstance(alpha, Anisotropy):
        return alpha
    if isinstance(alpha, Fraction):
        return Anisotropy(float(alpha), alpha)
    if isinstance(alpha, int):
        return Anisotropy.rational(alpha)
    if isinstance(alpha, str):
        return Anisotropy.parse(alpha)
    return Anisotropy.real(float(alpha))


@dataclass(frozen=True)
class ModelParams:
    """Physical configuration: coupling J, anisotropy, field, exchange type.

    J = 0 is rejected outright: the manifold coordinate theta = 2 J t
    degenerates with it.
    """

    J: float
    alpha: Anisotropy
    h_z: float
    kind: ModelKind

    def __post_init__(self):
        object.__setattr__(self, "J", float(self.J))
        object.__setattr__(self, "h_z", float(self.h_z))
        object.__setattr__(self, "alpha", as_anisotropy(self.alpha))
        object.__setattr__(self, "kind", ModelKind.coerce(self.kind))
        if not (math.isfinite(self.J) and math.isfinite(self.h_z)):
            raise ValueError("J and h_z must be finite")
        if self.J == 0.0:
            raise DegenerateCoupling("J = 0 leaves theta = 2Jt degenerate")


def xx_coupling(J: float) -> np.ndarray:
    """Planar exchange J (sx sx + sy sy); central block 2J off-diagonal."""
    return J * (kron2(SIGMA_X, SIGMA_X) + kron2(SIGMA_Y, SIGMA_Y))


def dm_coupling(J: float) -> np.ndarray:
    """Antisymmetric exchange J (sx sy - sy sx); central block +/- 2iJ."""
    return J * (kron2(SIGMA_X, SIGMA_Y) - kron2(SIGMA_Y, SIGMA_X))


def zz_coupling(J: float, alpha: float) -> np.ndarray:
    """Axial exchange alpha J sz sz."""
    return alpha * J * kron2(SIGMA_Z, SIGMA_Z)


def field_term(h_z: float) -> np.ndarray:
    """Zeeman term h_z (sz1 + sz2)."""
    return h_z * (kron2(SIGMA_Z, IDENTITY2) + kron2(IDENTITY2, SIGMA_Z))


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """Assemble the 4x4 Hamiltonian from its Pauli tensor-product terms."""
    if params.kind is ModelKind.DM:
        exchange = dm_coupling(params.J)
    else:
        exchange = xx_coupling(params.J)
    return exchange + zz_coupling(params.J, params.alpha.value) + field_term(params.h_z)


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues and matching eigenvector columns, in the fixed order

    alpha J + 2 h_z, alpha J - 2 h_z, -alpha J + 2J, -alpha J - 2J.
    """

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, dtype=float)))
        object.__setattr__(self, "vectors", _frozen(_c128(self.vectors)))

    def pairs(self) -> tuple[tuple[float, np.ndarray], ...]:
        return tuple(
            (float(self.values[i]), self.vectors[:, i]) for i in range(4)
        )


def eigensystem(params: ModelParams) -> EigenSystem:
    """Exact eigensystem of either model.

    The field-aligned states |uu> and |dd> are eigenvectors of both
    models.  The central pair is (|ud> +/- |du>)/sqrt(2) for XXZ and
    (|ud> -/+ i |du>)/sqrt(2) for DM, phased so the first non-zero
    component is real positive.
    """
    aJ = params.alpha.value * params.J
    values = np.array(
        [
            aJ + 2.0 * params.h_z,
            aJ - 2.0 * params.h_z,
            -aJ + 2.0 * params.J,
            -aJ - 2.0 * params.J,
        ]
    )
    r = 1.0 / math.sqrt(2.0)
    vectors = np.zeros((4, 4), dtype=np.complex128)
    vectors[0, 0] = 1.0
    vectors[3, 1] = 1.0
    if params.kind is ModelKind.DM:
        vectors[1, 2], vectors[2, 2] = r, -1j * r
        vectors[1, 3], vectors[2, 3] = r, 1j * r
    else:
        vectors[1, 2], vectors[2, 2] = r, r
        vectors[1, 3], vectors[2, 3] = r, -r
    return EigenSystem(values, vectors)


def dm_conjugation(h) -> np.ndarray:
    """Conjugate a Hamiltonian by the pi/2 z-rotation of spin 1.

    V = exp(i pi/4 sz1) maps the XXZ Hamiltonian onto the DM one at equal
    parameters: V H V^dag = H'.  Applying it twice flips the sign of the
    planar exchange while leaving the axial and field terms untouched.
    """
    phase = np.exp(0.25j * np.pi)
    v = kron2(np.diag([phase, phase.conjugate()]), IDENTITY2)
    return v @ _c128(h) @ v.conj().T
