# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kick-drift-kick kernel for u_tt = k u_xx - alpha sin u - beta cos u.

Mirrors ``_kernels_py`` operation for operation; see that module for the
array conventions.
"""
from libc.math cimport sin, cos


cdef void _accel(const double[::1] u, double[::1] a, double k_dx2,
                 double alpha, double beta, bint periodic) noexcept nogil:
    cdef Py_ssize_t n = u.shape[0]
    cdef Py_ssize_t i
    cdef double ui
    for i in range(1, n - 1):
        ui = u[i]
        a[i] = k_dx2 * (u[i + 1] - 2.0 * ui + u[i - 1]) - alpha * sin(ui) - beta * cos(ui)
    if periodic:
        ui = u[0]
        a[0] = k_dx2 * (u[1] - 2.0 * ui + u[n - 1]) - alpha * sin(ui) - beta * cos(ui)
        ui = u[n - 1]
        a[n - 1] = k_dx2 * (u[0] - 2.0 * ui + u[n - 2]) - alpha * sin(ui) - beta * cos(ui)
    else:
        a[0] = 0.0
        a[n - 1] = 0.0


def accel(double[::1] u, double[::1] a, double k_dx2, double alpha, double beta,
          bint periodic):
    with nogil:
        _accel(u, a, k_dx2, alpha, beta, periodic)


def kdk(double[::1] u, double[::1] v, double[::1] a, double dt, long steps,
        double k_dx2, double alpha, double beta, bint periodic):
    """Advance ``steps`` kick-drift-kick steps in place.

    ``a`` must hold the acceleration of the incoming ``u`` and holds that of
    the outgoing ``u`` on return.
    """
    cdef Py_ssize_t n = u.shape[0]
    cdef Py_ssize_t i
    cdef long s
    cdef double h = 0.5 * dt
    with nogil:
        for s in range(steps):
            for i in range(n):
                v[i] = v[i] + h * a[i]
            for i in range(n):
                u[i] = u[i] + dt * v[i]
            _accel(u, a, k_dx2, alpha, beta, periodic)
            for i in range(n):
                v[i] = v[i] + h * a[i]
