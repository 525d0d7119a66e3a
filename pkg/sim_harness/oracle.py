"""
Brute-force maximum-likelihood decoding by enumerating every codeword.
"""

from typing import NamedTuple, Optional

import numpy as np

from rm_code.code_spec import CodeSpec
from rm_code.encoder import generator_matrix, to_symbols
from rm_code.errors import DimensionTooLargeError
from rm_code.frozen_mask import FrozenMask
from list_decoder.recalc import codeword_log_posterior
from soft_metrics.soft_vector import as_soft_vector, log_prob_terms

MAX_ORACLE_DIM = 20

# codewords scored per chunk times block length
_CHUNK_BUDGET = 1 << 22


class OracleResult(NamedTuple):
    """Most probable codeword."""
    info: np.ndarray
    codeword: np.ndarray
    log_cost: float


def ml_bruteforce(spec: CodeSpec, mask: Optional[FrozenMask], y) -> OracleResult:
    """
    Exhaustive argmax of log P(c | y) over all 2^k_sub codewords.

    Information blocks are enumerated in lexicographic order and the first
    maximizer wins.

    Args:
        spec: Code parameters
        mask: Frozen-bit mask, or None for the full code
        y: Posterior differences, length n

    Returns:
        OracleResult(info, codeword, log_cost) with info of length k_sub

    Raises:
        DimensionTooLargeError: If k_sub exceeds MAX_ORACLE_DIM
    """
    y = as_soft_vector(y, spec.n)
    if mask is not None:
        mask.check_spec(spec)
        rows = generator_matrix(spec)[mask.free_indices]
    else:
        rows = generator_matrix(spec)

    k_sub = rows.shape[0]
    if k_sub > MAX_ORACLE_DIM:
        raise DimensionTooLargeError(
            f"Brute-force ML needs 2^{k_sub} codewords; limit is 2^{MAX_ORACLE_DIM}"
        )

    lp, lm = log_prob_terms(y)
    delta = lm - lp
    base = lp.sum()
    G = rows.astype(np.int64)
    shifts = np.arange(k_sub - 1, -1, -1)
    chunk = max(1, _CHUNK_BUDGET // spec.n)

    best_value, best_index = -np.inf, 0
    for start in range(0, 1 << k_sub, chunk):
        values = np.arange(start, min(start + chunk, 1 << k_sub), dtype=np.int64)
        infos = (values[:, None] >> shifts) & 1
        words = (infos @ G) % 2
        costs = words @ delta + base
        j = int(np.argmax(costs))
        if costs[j] > best_value:
            best_value, best_index = costs[j], int(values[j])

    info = ((best_index >> shifts) & 1).astype(np.uint8)
    codeword = to_symbols((info.astype(np.int64) @ G) % 2)
    return OracleResult(info, codeword, codeword_log_posterior(y, codeword))
