"""NumPy implementation of the hot root-side kernel.

The symmetric power sum sum_{j=-k..k} (a - i*C*j)^(-mu) is evaluated in
blocks; block partial sums are combined with math.fsum per component so the
accumulated rounding error stays far below the 1e-8 relative budget even at
k = 10^7.
"""

from __future__ import annotations

import math

import numpy as np

_BLOCK = 1 << 20


def power_sum_symmetric(a, C, mu, k) -> complex:
    """Return sum over j in [-k, k] of (a - i*C*j)^(-mu), principal branch."""
    a = complex(a)
    C = float(C)
    mu = float(mu)
    k = int(k)
    re_parts = []
    im_parts = []
    lo = -k
    while lo <= k:
        hi = min(lo + _BLOCK, k + 1)
        j = np.arange(lo, hi, dtype=np.float64)
        w = a - 1j * C * j
        t = w ** (-mu)
        re_parts.append(float(np.sum(t.real)))
        im_parts.append(float(np.sum(t.imag)))
        lo = hi
    return complex(math.fsum(re_parts), math.fsum(im_parts))
