"""
Recursive Decoder - the basic soft-decision decoder of {m, r}.

The received vector is split into halves (y', y''). The v-component
{m-1, r-1} is decoded first from y' y''; its decision v_hat then feeds the
u-component {m-1, r}. Repetition codes and full spaces at the ends of the
recursion are decoded by maximum likelihood. The output codeword is
(u_hat, u_hat v_hat).
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

import numpy as np

from rm_code.code_spec import CodeSpec, LeafPath
from rm_code.errors import ParameterError
from rm_code.frozen_mask import FrozenMask
from soft_metrics.leaf_ml import leaf_candidates
from soft_metrics.soft_vector import as_soft_vector
from .base import BaseDecoder, DecodeResult
from .flops import FlopCounter
from .recalc import RecalcRule, U_RULES, recalc_v
from .record import Record

logger = logging.getLogger(__name__)


@dataclass
class _Trace:
    """Decisions accumulated while walking the leaves."""
    log_cost: float = 0.0
    info: List[int] = field(default_factory=list)


class RecursiveDecoder(BaseDecoder):
    """
    Basic recursive decoder (a single decision at every leaf).

    Leaf words are ranked exactly as the list decoder ranks them, so a list
    of size one makes the same decisions.
    """

    def __init__(
        self,
        spec: CodeSpec,
        mask: Optional[FrozenMask] = None,
        branch: int = 4,
        recalc: RecalcRule = RecalcRule.EXACT,
    ):
        """
        Initialize the decoder.

        Args:
            spec: Code parameters
            mask: Frozen-bit mask of a subcode, or None
            branch: Leaf words considered at a full-space leaf
            recalc: Rule for the u-component recalculation
        """
        super().__init__(spec, mask)
        if branch < 1:
            raise ParameterError(f"branch must be >= 1, got {branch}")
        self.branch = branch
        self.recalc = RecalcRule(recalc)
        self._u_rule = U_RULES[self.recalc]

    def decode(self, y) -> DecodeResult:
        y = as_soft_vector(y, self.spec.n)
        counter = FlopCounter()
        trace = _Trace()

        codeword = self._psi(y, self.spec.m, self.spec.r, iter(self.spec.paths), trace, counter)

        info = tuple(trace.info)
        record = Record(info, trace.log_cost, (y,), (None,), codeword=codeword)
        return DecodeResult(
            best_info=self.output_info(info),
            best_codeword=codeword,
            best_log_cost=trace.log_cost,
            records=[record],
            flops=counter.total,
            flop_breakdown=counter.breakdown(),
        )

    def _psi(
        self,
        y: np.ndarray,
        m: int,
        r: int,
        paths: Iterator[LeafPath],
        trace: _Trace,
        counter: FlopCounter,
    ) -> np.ndarray:
        if r == 0 or r == m:
            return self._leaf(y, next(paths), trace, counter)

        half = y.size // 2
        y_left, y_right = y[:half], y[half:]

        v_hat = self._psi(recalc_v(y_left, y_right, counter), m - 1, r - 1, paths, trace, counter)
        y_u = self._u_rule(y_left, y_right, v_hat, counter)
        u_hat = self._psi(y_u, m - 1, r, paths, trace, counter)

        return np.concatenate([u_hat, u_hat * v_hat])

    def _leaf(self, y: np.ndarray, path: LeafPath, trace: _Trace, counter: FlopCounter) -> np.ndarray:
        candidates = leaf_candidates(y, path, self.leaf_frozen(path), self.branch)
        counter.add('leaf', y.size)

        best = min(candidates, key=lambda c: (-(trace.log_cost + c.log_cost), c.info))
        trace.log_cost = trace.log_cost + best.log_cost
        trace.info.extend(best.info)
        return best.codeword


def decode_basic(
    spec: CodeSpec,
    mask: Optional[FrozenMask],
    y,
    recalc: RecalcRule = RecalcRule.EXACT,
    branch: int = 4,
) -> DecodeResult:
    """
    Decode ``y`` with the basic recursive decoder.

    Args:
        spec: Code parameters
        mask: Frozen-bit mask, or None for the full code
        y: Posterior differences, length n
        recalc: u-recalculation rule
        branch: Leaf words considered at a full-space leaf

    Returns:
        DecodeResult holding a single record
    """
    return RecursiveDecoder(spec, mask, branch=branch, recalc=recalc).decode(y)
