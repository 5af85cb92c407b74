"""Shannon-entropy building blocks with the 0*log(0) = 0 convention."""

from __future__ import annotations

import numpy as np


def xlogx(x):
    """Elementwise x*ln(x), continued by its limit value 0 at x = 0.

    Accepts scalars or arrays; returns an ndarray (0-d for scalar input).
    """
    arr = np.asarray(x, dtype=float)
    safe = np.where(arr > 0.0, arr, 1.0)
    return np.where(arr > 0.0, arr * np.log(safe), 0.0)
