"""Complex linear algebra on the four-dimensional two-spin space.

Everything acts in the product basis ordered |uu>, |ud>, |du>, |dd>, the
first label referring to spin 1.  The module supplies the Kronecker kernel
used to assemble Hamiltonians, scalar products, and a matrix exponential
built from a Hermitian eigendecomposition.  The exponential is the
numerical oracle against which every closed-form propagator in this
package is checked, so it deliberately shares no code with them.
"""

from __future__ import annotations

import numpy as np

from .errors import NonHermitianInput, NotNormalized

# Default absolute tolerance for closed-form comparisons throughout the package.
ATOL = 1e-12


def _c128(m) -> np.ndarray:
    return np.asarray(m, dtype=np.complex128)


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


IDENTITY2 = _frozen(np.eye(2, dtype=np.complex128))
IDENTITY4 = _frozen(np.eye(4, dtype=np.complex128))
SIGMA_X = _frozen(_c128([[0.0, 1.0], [1.0, 0.0]]))
SIGMA_Y = _frozen(_c128([[0.0, -1.0j], [1.0j, 0.0]]))
SIGMA_Z = _frozen(_c128([[1.0, 0.0], [0.0, -1.0]]))

# Entries that may be non-zero for the (1, 2, 1) block structure shared by
# all Hamiltonians in scope: both field-aligned corners plus the central
# 2x2 exchange block.
_BLOCK_ALLOWED = np.zeros((4, 4), dtype=bool)
for _i, _j in ((0, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 3)):
    _BLOCK_ALLOWED[_i, _j] = True


def kron2(m1, m2) -> np.ndarray:
    """Kronecker product of two single-spin operators, spin 1 slowest."""
    m1, m2 = _c128(m1), _c128(m2)
    if m1.shape != (2, 2) or m2.shape != (2, 2):
        raise ValueError("kron2 expects two 2x2 operators")
    return np.kron(m1, m2)


def inner(u, v) -> complex:
    """Scalar product <u|v>, conjugate-linear in the first argument."""
    u, v = _c128(u), _c128(v)
    if u.shape != (4,) or v.shape != (4,):
        raise ValueError("inner expects two 4-component vectors")
    return complex(np.vdot(u, v))


def fidelity(u, v) -> float:
    """Overlap magnitude |<u|v>| of two unit vectors.

    Insensitive to the global phase of either argument.  Raises
    NotNormalized when either vector deviates from unit norm by more
    than ATOL.
    """
    u, v = _c128(u), _c128(v)
    for w in (u, v):
        if abs(np.linalg.norm(w) - 1.0) > ATOL:
            raise NotNormalized("fidelity requires unit-norm vectors")
    return float(abs(np.vdot(u, v)))


def is_hermitian(m, atol: float = ATOL) -> bool:
    """True when m equals its conjugate transpose elementwise within atol."""
    m = _c128(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= atol)


def hermitian_expm(h, t: float) -> np.ndarray:
    """Unitary exp(-i h t) of a Hermitian 4x4 generator.

    Diagonalizes the central 2x2 block directly when h has the
    (1, 2, 1) block structure of the in-scope Hamiltonians, and falls
    back to a dense eigendecomposition otherwise.  Both paths reassemble
    exp(-i h t) from eigenpairs, independent of any closed-form
    propagator.

    Raises NonHermitianInput when h deviates from Hermiticity by more
    than ATOL elementwise.
    """
    h = _c128(h)
    if h.shape != (4, 4):
        raise ValueError("hermitian_expm expects a 4x4 matrix")
    if not is_hermitian(h):
        raise NonHermitianInput("generator is not Hermitian within 1e-12")
    t = float(t)
    if np.all(h[~_BLOCK_ALLOWED] == 0):
        u = np.zeros((4, 4), dtype=np.complex128)
        u[0, 0] = np.exp(-1j * h[0, 0].real * t)
        u[3, 3] = np.exp(-1j * h[3, 3].real * t)
        w, v = np.linalg.eigh(h[1:3, 1:3])
        u[1:3, 1:3] = (v * np.exp(-1j * w * t)) @ v.conj().T
        return u
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T
