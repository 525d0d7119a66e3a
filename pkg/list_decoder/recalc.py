"""
Recalculation of posterior differences along the Plotkin split.

For a node with halves y' and y'' the v-component sees y^v = y' y'' and,
once v_hat is decided, the u-component sees
y^u = (y' + y_hat) / (1 + y' y_hat) with y_hat = y'' v_hat.
"""

from enum import Enum
from typing import Optional

import numpy as np

from rm_code.errors import LengthMismatchError
from soft_metrics.soft_vector import clamp, log_prob_terms
from .flops import FlopCounter


class RecalcRule(Enum):
    """Rule used for the u-component."""
    EXACT = "exact"
    SIMPLIFIED = "simplified"  # y^u = (y' + y_hat) / 2


def _check_lengths(*vectors):
    sizes = {np.asarray(v).size for v in vectors}
    if len(sizes) != 1:
        raise LengthMismatchError(f"Recalculation inputs differ in length: {sorted(sizes)}")


def recalc_v(y_left, y_right, counter: Optional[FlopCounter] = None) -> np.ndarray:
    """y^v_i = y'_i y''_i."""
    _check_lengths(y_left, y_right)
    out = np.asarray(y_left, dtype=np.float64) * np.asarray(y_right, dtype=np.float64)
    if counter is not None:
        counter.add('recalc_v', out.size)
    return out


def recalc_u(y_left, y_right, v_hat, counter: Optional[FlopCounter] = None) -> np.ndarray:
    """y^u_i = (y'_i + y_hat_i) / (1 + y'_i y_hat_i), clamped."""
    _check_lengths(y_left, y_right, v_hat)
    a = clamp(y_left)
    y_hat = clamp(y_right) * np.asarray(v_hat, dtype=np.float64)
    out = clamp((a + y_hat) / (1.0 + a * y_hat))
    if counter is not None:
        counter.add('recalc_u', 5 * out.size)
    return out


def recalc_u_simplified(y_left, y_right, v_hat, counter: Optional[FlopCounter] = None) -> np.ndarray:
    """y^u_i = (y'_i + y_hat_i) / 2."""
    _check_lengths(y_left, y_right, v_hat)
    y_hat = clamp(y_right) * np.asarray(v_hat, dtype=np.float64)
    out = clamp((clamp(y_left) + y_hat) / 2.0)
    if counter is not None:
        counter.add('recalc_u', 3 * out.size)
    return out


U_RULES = {
    RecalcRule.EXACT: recalc_u,
    RecalcRule.SIMPLIFIED: recalc_u_simplified,
}


def cost_extend(log_cost: float, y_leaf, c_leaf) -> float:
    """
    Extend a log-cost by the leaf probability of ``c_leaf``.

    Returns:
        log_cost + sum_i log((1 + c_i y_i) / 2)
    """
    _check_lengths(y_leaf, c_leaf)
    lp, lm = log_prob_terms(y_leaf)
    return float(log_cost + np.where(np.asarray(c_leaf) < 0, lm, lp).sum())


def codeword_log_posterior(y, codeword) -> float:
    """log P(c | y) = sum_i log((1 + c_i y_i) / 2) over the whole block."""
    return cost_extend(0.0, y, codeword)
