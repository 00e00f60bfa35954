"""Kernel backend selection.

The compiled Cython kernel is preferred when its extension module built;
otherwise the NumPy implementation is used.  Set ZETAFF_PURE_PYTHON=1 to
force the fallback (useful for benchmarking and debugging).
"""

import os

from ._purepy import power_sum_symmetric as _numpy_power_sum_symmetric

BACKEND = "numpy"
power_sum_symmetric = _numpy_power_sum_symmetric

if not os.environ.get("ZETAFF_PURE_PYTHON"):
    try:
        from ._core import power_sum_symmetric as _core_power_sum_symmetric
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        power_sum_symmetric = _core_power_sum_symmetric

__all__ = ["power_sum_symmetric", "BACKEND"]
