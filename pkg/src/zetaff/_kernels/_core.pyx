# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled root-side kernel: symmetric power sums over a root ladder.

Scalar C loop with Kahan compensated accumulation; matches the NumPy
fallback in zetaff._kernels._purepy to near machine precision.
"""

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double creal(double complex)
    double cimag(double complex)


def power_sum_symmetric(a, C, mu, k):
    """Return sum over j in [-k, k] of (a - i*C*j)^(-mu), principal branch."""
    cdef double complex ca = a
    cdef double cC = C
    cdef double cmu = mu
    cdef long n = k
    cdef long j
    cdef double complex w, t
    cdef double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0
    cdef double yr, yi, tr, ti
    with nogil:
        for j in range(-n, n + 1):
            w = ca - 1j * cC * j
            t = cexp(-cmu * clog(w))
            # Kahan accumulation, componentwise
            yr = creal(t) - cr
            tr = sr + yr
            cr = (tr - sr) - yr
            sr = tr
            yi = cimag(t) - ci
            ti = si + yi
            ci = (ti - si) - yi
            si = ti
    return complex(sr, si)
