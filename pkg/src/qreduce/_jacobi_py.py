"""Cyclic Jacobi eigensolver for complex Hermitian matrices, pure numpy.

Fallback used when the compiled extension (``qreduce._jacobi``) is not
available.  Same rotation sequence as the compiled kernel: row-major cyclic
sweeps over the strict upper triangle, each pivot annihilated by the unitary

    J[p,p] = c   J[p,q] = s
    J[q,p] = -conj(w)*s   J[q,q] = conj(w)*c

with w = H[p,q]/|H[p,q]| and (c, s) the classic symmetric Jacobi pair for
the phase-stripped 2x2 block.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _off_norm(h: np.ndarray) -> float:
    # Summing only the off-diagonal entries avoids the catastrophic
    # cancellation of ||H||^2 - ||diag||^2 near convergence.
    stripped = h.copy()
    np.fill_diagonal(stripped, 0.0)
    return float(np.linalg.norm(stripped))


def jacobi_eigh(matrix: np.ndarray, tol: float, max_sweeps: int):
    """Diagonalize a Hermitian matrix in place by cyclic Jacobi rotations.

    Returns ``(eigenvalues, vectors, converged)`` with unsorted eigenvalues
    and the accumulated unitary in columns.  ``converged`` is False when the
    off-diagonal Frobenius norm is still above ``tol * ||matrix||_F`` after
    ``max_sweeps`` sweeps.
    """
    h = np.array(matrix, dtype=np.complex128, order="C")
    d = h.shape[0]
    v = np.eye(d, dtype=np.complex128)
    if d == 1:
        return h.real.diagonal().copy(), v, True

    scale = np.linalg.norm(h)
    if scale == 0.0:
        return np.zeros(d), v, True
    threshold = tol * scale

    converged = False
    for _ in range(max_sweeps):
        if _off_norm(h) <= threshold:
            converged = True
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                b = h[p, q]
                absb = abs(b)
                if absb == 0.0:
                    continue
                w = b / absb
                app = h[p, p].real
                aqq = h[q, q].real
                tau = (aqq - app) / (2.0 * absb)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ws = np.conj(w) * s
                wc = np.conj(w) * c

                # H <- J^dagger H J, touching only rows/columns p and q.
                col_p = h[:, p].copy()
                col_q = h[:, q].copy()
                h[:, p] = c * col_p - ws * col_q
                h[:, q] = s * col_p + wc * col_q
                row_p = h[p, :].copy()
                row_q = h[q, :].copy()
                h[p, :] = c * row_p - np.conj(ws) * row_q
                h[q, :] = s * row_p + np.conj(wc) * row_q

                # Pivot entries have closed forms; set exactly.
                h[p, p] = app - t * absb
                h[q, q] = aqq + t * absb
                h[p, q] = 0.0
                h[q, p] = 0.0

                col_p = v[:, p].copy()
                col_q = v[:, q].copy()
                v[:, p] = c * col_p - ws * col_q
                v[:, q] = s * col_p + wc * col_q

    if not converged:
        converged = _off_norm(h) <= threshold
    return h.diagonal().real.copy(), v, converged
