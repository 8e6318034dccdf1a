# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Cyclic Jacobi eigensolver for complex Hermitian matrices, compiled kernel.

Mirrors qreduce._jacobi_py rotation for rotation; see that module for the
conventions.  This version runs the O(d^3)-per-sweep inner loops in C.
"""

import numpy as np

from libc.math cimport fabs, hypot, sqrt

BACKEND = "compiled"


def jacobi_eigh(matrix, double tol, int max_sweeps):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, vectors, converged)``; eigenvalues unsorted,
    eigenvectors in columns of the accumulated unitary.
    """
    h_arr = np.array(matrix, dtype=np.complex128, order="C")
    cdef Py_ssize_t d = h_arr.shape[0]
    v_arr = np.eye(d, dtype=np.complex128)
    cdef double complex[:, ::1] h = h_arr
    cdef double complex[:, ::1] v = v_arr

    if d == 1:
        return h_arr.real.diagonal().copy(), v_arr, True

    cdef double scale = _fro_norm(h, d)
    if scale == 0.0:
        return np.zeros(d), v_arr, True
    cdef double threshold = tol * scale

    cdef bint converged = False
    cdef Py_ssize_t sweep, p, q, i
    cdef double complex b, w, ws, wc, col_p, col_q, row_p, row_q
    cdef double absb, app, aqq, tau, t, c, s

    for sweep in range(max_sweeps):
        if _off_norm(h, d) <= threshold:
            converged = True
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                b = h[p, q]
                absb = hypot(b.real, b.imag)
                if absb == 0.0:
                    continue
                w = b / absb
                app = h[p, p].real
                aqq = h[q, q].real
                tau = (aqq - app) / (2.0 * absb)
                if tau >= 0.0:
                    t = 1.0 / (tau + hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + hypot(1.0, tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                ws = w.conjugate() * s
                wc = w.conjugate() * c

                # Columns p, q of H.
                for i in range(d):
                    col_p = h[i, p]
                    col_q = h[i, q]
                    h[i, p] = c * col_p - ws * col_q
                    h[i, q] = s * col_p + wc * col_q
                # Rows p, q of H.
                for i in range(d):
                    row_p = h[p, i]
                    row_q = h[q, i]
                    h[p, i] = c * row_p - ws.conjugate() * row_q
                    h[q, i] = s * row_p + wc.conjugate() * row_q

                # Pivot entries have closed forms; set exactly.
                h[p, p] = app - t * absb
                h[q, q] = aqq + t * absb
                h[p, q] = 0.0
                h[q, p] = 0.0

                for i in range(d):
                    col_p = v[i, p]
                    col_q = v[i, q]
                    v[i, p] = c * col_p - ws * col_q
                    v[i, q] = s * col_p + wc * col_q

    if not converged:
        converged = _off_norm(h, d) <= threshold
    return h_arr.diagonal().real.copy(), v_arr, converged


cdef double _fro_norm(double complex[:, ::1] h, Py_ssize_t d) nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(d):
        for j in range(d):
            acc += h[i, j].real * h[i, j].real + h[i, j].imag * h[i, j].imag
    return sqrt(acc)


cdef double _off_norm(double complex[:, ::1] h, Py_ssize_t d) nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(d):
        for j in range(d):
            if i != j:
                acc += h[i, j].real * h[i, j].real + h[i, j].imag * h[i, j].imag
    return sqrt(acc)
