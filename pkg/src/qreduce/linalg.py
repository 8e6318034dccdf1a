"""Dense complex matrix arithmetic: anticommutator, Hermitian eigensolver,
matrix exponential, Frobenius distance.

The eigensolver is an in-house cyclic Jacobi routine (deterministic rotation
order, fixed eigenvector phase convention) so that repeated runs give
bit-identical output.  The compiled kernel is preferred; set
``QREDUCE_PURE_PYTHON=1`` before import to force the numpy fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError

if os.environ.get("QREDUCE_PURE_PYTHON") == "1":
    from . import _jacobi_py as _kernel

    HAVE_COMPILED_KERNEL = False
else:
    try:
        from . import _jacobi as _kernel  # type: ignore[attr-defined]

        HAVE_COMPILED_KERNEL = True
    except ImportError:
        from . import _jacobi_py as _kernel

        HAVE_COMPILED_KERNEL = False

DEFAULT_TOL = 1e-10

_JACOBI_TARGET = 1e-14  # off-norm target relative to the input Frobenius norm
_MAX_SWEEPS = 60


def backend_name() -> str:
    """Name of the eigensolver kernel in use: 'compiled' or 'python'."""
    return "compiled" if HAVE_COMPILED_KERNEL else "python"


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a C-contiguous complex128 square matrix with finite entries."""
    a = np.ascontiguousarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise ValueError("matrix has non-finite entries")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def is_hermitian(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True when max|M - M^dagger| <= tol."""
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def anticommutator(a, b) -> np.ndarray:
    """AB + BA."""
    a = as_square_matrix(a)
    b = as_square_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b + b @ a


def frobenius_norm(m) -> float:
    """sqrt(sum |m_ij|^2)."""
    return float(np.linalg.norm(np.asarray(m)))


def frobenius_distance(a, b) -> float:
    """Frobenius norm of A - B."""
    a = as_square_matrix(a)
    b = as_square_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.linalg.norm(a - b))


@dataclass(frozen=True)
class EigenSystem:
    """Spectral decomposition H = V diag(w) V^dagger.

    ``eigenvalues`` ascending; ``eigenvectors`` holds the matching
    orthonormal eigenvectors in columns, phase-fixed so the first
    nonzero component of each column is real positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        """V diag(w) V^dagger."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _fix_phase(column: np.ndarray) -> np.ndarray:
    """Rotate a vector's global phase so its first nonzero entry is real > 0."""
    nz = np.flatnonzero(np.abs(column) > 1e-12 * max(np.max(np.abs(column)), 1e-300))
    if nz.size == 0:
        return column
    pivot = column[nz[0]]
    return column * (np.conj(pivot) / abs(pivot))


def hermitian_eigensystem(h, tol: float = DEFAULT_TOL) -> EigenSystem:
    """Eigen-decompose a Hermitian matrix with deterministic output order.

    Eigenvalues ascending; exact ties broken by lexicographic order of the
    phase-normalized eigenvector entries.  Raises ValueError for
    non-Hermitian input and ConvergenceError if the Jacobi sweeps fail to
    reach the off-diagonal target (numerical pathology).
    """
    h = as_square_matrix(h)
    if not is_hermitian(h, tol):
        raise ValueError("matrix is not Hermitian within tolerance")

    w, v, converged = _kernel.jacobi_eigh(h, _JACOBI_TARGET, _MAX_SWEEPS)
    if not converged:
        raise ConvergenceError(
            f"Jacobi solver failed to converge in {_MAX_SWEEPS} sweeps (dim {h.shape[0]})"
        )

    v = np.stack([_fix_phase(v[:, i]) for i in range(v.shape[1])], axis=1)

    def sort_key(i: int):
        col = v[:, i]
        return (w[i],) + tuple(x for entry in col for x in (entry.real, entry.imag))

    order = sorted(range(w.shape[0]), key=sort_key)
    return EigenSystem(eigenvalues=w[order].copy(), eigenvectors=v[:, order].copy())


def unitary_exp(h, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """exp(-i H t) for Hermitian H, via the spectral decomposition."""
    es = hermitian_eigensystem(h, tol)
    v = es.eigenvectors
    phases = np.exp(-1j * es.eigenvalues * t)
    return (v * phases) @ v.conj().T
