"""
Soft vectors of posterior differences y_i = 2 Pr{c_i = +1 | x_i} - 1.
"""

from typing import Optional, Tuple

import numpy as np

from rm_code.errors import LengthMismatchError

# |y| is kept below 1 so that 1 + y'y_hat never vanishes and log((1 +/- y)/2) stays finite
EPS_CLAMP = 1e-12
_LOG_HALF = np.log(0.5)


def clamp(y: np.ndarray) -> np.ndarray:
    """Clip entries into [-1 + EPS_CLAMP, 1 - EPS_CLAMP]."""
    return np.clip(np.asarray(y, dtype=np.float64), -1.0 + EPS_CLAMP, 1.0 - EPS_CLAMP)


def as_soft_vector(y, n: Optional[int] = None) -> np.ndarray:
    """
    Validate and clamp a soft vector.

    Args:
        y: Sequence of reals in [-1, 1]
        n: Required length, if any

    Returns:
        Clamped float64 array

    Raises:
        LengthMismatchError: If the length is wrong or not a power of two
        ValueError: If an entry is not finite or lies outside [-1, 1]
    """
    y = np.asarray(y, dtype=np.float64).ravel()
    if n is not None and y.size != n:
        raise LengthMismatchError(f"Soft vector has length {y.size}, expected {n}")
    if y.size == 0 or y.size & (y.size - 1):
        raise LengthMismatchError(f"Soft vector length must be a power of two, got {y.size}")
    if not np.all(np.isfinite(y)):
        raise ValueError("Soft vector contains non-finite entries")
    if np.any(np.abs(y) > 1.0):
        raise ValueError("Soft vector entries must lie in [-1, 1]")
    return clamp(y)


def log_prob_terms(y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Per-symbol log-probabilities of +1 and -1.

    Returns:
        (log((1 + y)/2), log((1 - y)/2)) for the clamped input
    """
    y = clamp(y)
    return np.log1p(y) + _LOG_HALF, np.log1p(-y) + _LOG_HALF
