# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: power-series recursion and fixed-step RK4.

Signatures mirror ``dlscatter._kernels_py`` exactly; the active backend is
chosen in ``dlscatter._backend``.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


cdef inline double _poly(const double[:] w, double x) noexcept:
    cdef Py_ssize_t m = w.shape[0] - 1
    cdef double r = w[m]
    while m > 0:
        m -= 1
        r = r * x + w[m]
    return r


def series_coeffs(const double[:] w, double eps, int T):
    """Coefficients c_0..c_T of the series solution with c_0=0, c_1=1.

    Recursion: (j+2)(j+1) c_{j+2} = sum_m w_m c_{j-m} - eps c_j.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.zeros(T + 1)
    cdef double[:] c = out
    cdef Py_ssize_t M = w.shape[0] - 1
    cdef Py_ssize_t j, m, top
    cdef double s
    c[1] = 1.0
    for j in range(T - 1):
        s = -eps * c[j]
        top = j if j < M else M
        for m in range(top + 1):
            s += w[m] * c[j - m]
        c[j + 2] = s / ((j + 2) * (j + 1))
    return out


def rk4_boundary(const double[:] w, double eps, long n_steps):
    """Integrate y'' = (v - eps) y on [0, 1] from y(0)=0, y'(0)=1.

    Classical fixed-step RK4; returns (y(1), y'(1)).
    """
    cdef double h = 1.0 / n_steps
    cdef double x = 0.0, y = 0.0, yp = 1.0
    cdef double q1, q2, q3, q4
    cdef double k1y, k1p, k2y, k2p, k3y, k3p, k4y, k4p
    cdef long i
    for i in range(n_steps):
        x = i * h
        q1 = _poly(w, x) - eps
        q2 = _poly(w, x + 0.5 * h) - eps
        q3 = q2
        q4 = _poly(w, x + h) - eps
        k1y = yp
        k1p = q1 * y
        k2y = yp + 0.5 * h * k1p
        k2p = q2 * (y + 0.5 * h * k1y)
        k3y = yp + 0.5 * h * k2p
        k3p = q3 * (y + 0.5 * h * k2y)
        k4y = yp + h * k3p
        k4p = q4 * (y + h * k3y)
        y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        yp += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
    return y, yp
