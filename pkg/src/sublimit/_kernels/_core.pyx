# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: fused interpolation reduction and explicit
G-heat stepping.  Import through ``sublimit._kernels`` which falls back to
the numpy reference implementations when this module is not built."""

import numpy as np

cimport numpy as cnp
from libc.math cimport floor

cnp.import_array()


def weighted_interp_sum(double x0, double dx, double[::1] values,
                        double[:, ::1] positions, double[::1] weights):
    cdef Py_ssize_t n_atoms = positions.shape[0]
    cdef Py_ssize_t m = positions.shape[1]
    cdef Py_ssize_t last = values.shape[0] - 2
    cdef Py_ssize_t a, j, i
    cdef double w, t, fr, v0
    out_arr = np.zeros(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    for a in range(n_atoms):
        w = weights[a]
        for j in range(m):
            t = (positions[a, j] - x0) / dx
            i = <Py_ssize_t>floor(t)
            if i < 0:
                i = 0
            elif i > last:
                i = last
            fr = t - i
            v0 = values[i]
            out[j] += w * (v0 + fr * (values[i + 1] - v0))
    return out_arr


def gheat_steps(double[::1] u, double dx, double dt, Py_ssize_t nsteps,
                double half_up2, double half_lo2):
    cdef Py_ssize_t m = u.shape[0]
    cdef double inv = 1.0 / (dx * dx)
    cdef Py_ssize_t step, j
    cdef double d2, g
    buf_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] buf = buf_arr
    cdef double[::1] cur = u
    cdef double[::1] nxt = buf
    cdef double[::1] tmp
    for step in range(nsteps):
        nxt[0] = cur[0]
        nxt[m - 1] = cur[m - 1]
        for j in range(1, m - 1):
            d2 = (cur[j + 1] - 2.0 * cur[j] + cur[j - 1]) * inv
            if d2 >= 0.0:
                g = half_up2 * d2
            else:
                g = half_lo2 * d2
            nxt[j] = cur[j] + dt * g
        tmp = cur
        cur = nxt
        nxt = tmp
    if nsteps % 2 == 1:
        # result sits in the scratch buffer; copy back into u
        for j in range(m):
            nxt[j] = cur[j]
    return None
