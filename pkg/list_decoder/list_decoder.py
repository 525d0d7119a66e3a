"""
List Decoder - recursive decoding that keeps the L most probable records.

Leaf paths are processed in decoding order. At every leaf each record is
extended by the candidate words of the leaf code (both bits at a left end,
the ``branch`` best words at a right end, fewer when bits are frozen), the
cost of every extension is multiplied by the leaf posterior and the L best
extensions survive. The cost of a complete record equals the posterior
probability of its codeword, so the first record of the final list is the
decoder's choice.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from rm_code.code_spec import CodeSpec, LeafPath
from rm_code.errors import ParameterError
from rm_code.frozen_mask import FrozenMask
from soft_metrics.leaf_ml import LeafCandidate, leaf_candidates
from soft_metrics.soft_vector import as_soft_vector
from .base import BaseDecoder, DecodeResult
from .flops import FlopCounter
from .recalc import RecalcRule, U_RULES, recalc_v
from .record import Record

logger = logging.getLogger(__name__)

# (extended log-cost, parent record, leaf word)
Candidate = Tuple[float, Record, LeafCandidate]


def candidate_key(candidate: Candidate):
    """Sort key: larger cost first, then lower branch, then smaller prefix."""
    cost, record, leaf = candidate
    return (-cost, record.branch, record.info + leaf.info)


class ListDecoder(BaseDecoder):
    """
    List decoder with list size L.

    Records keep the soft vectors of the nodes on their current path and the
    decided v-codewords of those nodes, so truncating the list never forces
    recomputation.
    """

    def __init__(
        self,
        spec: CodeSpec,
        mask: Optional[FrozenMask] = None,
        list_size: int = 16,
        branch: int = 4,
        recalc: RecalcRule = RecalcRule.EXACT,
    ):
        """
        Initialize the decoder.

        Args:
            spec: Code parameters
            mask: Frozen-bit mask of a subcode, or None
            list_size: Maximum number of records kept after every leaf
            branch: Leaf words tried per record at a full-space leaf
            recalc: Rule for the u-component recalculation
        """
        super().__init__(spec, mask)
        if list_size < 1:
            raise ParameterError(f"List size must be >= 1, got {list_size}")
        if branch < 1:
            raise ParameterError(f"branch must be >= 1, got {branch}")
        self.list_size = list_size
        self.branch = branch
        self.recalc = RecalcRule(recalc)
        self._u_rule = U_RULES[self.recalc]

    def decode(self, y) -> DecodeResult:
        y = as_soft_vector(y, self.spec.n)
        counter = FlopCounter()

        records = self._initial_records(y)
        for path in self.spec.paths:
            candidates = self._extend_all(records, path, counter)
            survivors = self._select(candidates, counter)
            records = [self._advance(record, leaf, cost, path) for cost, record, leaf in survivors]
            logger.debug(f"{path.label()}: {len(candidates)} candidates, {len(records)} kept")

        return self._finish(records, counter)

    def _initial_records(self, y: np.ndarray) -> List[Record]:
        return [Record.initial(y)]

    def _descend(self, record: Record, path: LeafPath, counter: FlopCounter) -> Record:
        """Recalculate the soft vectors from the record's node down to the leaf of ``path``."""
        y_stack = list(record.y_stack)
        v_hats = list(record.v_hats)

        for depth in range(record.depth, len(path.bits)):
            y = y_stack[depth]
            half = y.size // 2
            if path.bits[depth] == 0:
                child = recalc_v(y[:half], y[half:], counter)
            else:
                child = self._u_rule(y[:half], y[half:], v_hats[depth], counter)
            y_stack.append(child)
            v_hats.append(None)

        return Record(record.info, record.log_cost, tuple(y_stack), tuple(v_hats), branch=record.branch)

    def _extend_all(self, records: List[Record], path: LeafPath, counter: FlopCounter) -> List[Candidate]:
        frozen = self.leaf_frozen(path)
        candidates: List[Candidate] = []

        for record in records:
            at_leaf = self._descend(record, path, counter)
            y_leaf = at_leaf.y_stack[-1]
            counter.add('leaf', y_leaf.size)
            for leaf in leaf_candidates(y_leaf, path, frozen, self.branch):
                candidates.append((at_leaf.log_cost + leaf.log_cost, at_leaf, leaf))

        return candidates

    def _select(self, candidates: List[Candidate], counter: FlopCounter) -> List[Candidate]:
        """Keep the ``list_size`` best candidates (all of them when fewer)."""
        if len(candidates) > self.list_size:
            counter.add('select', len(candidates) - 1)
        return sorted(candidates, key=candidate_key)[:self.list_size]

    @staticmethod
    def _advance(record: Record, leaf: LeafCandidate, cost: float, path: LeafPath) -> Record:
        """Attach a leaf word and climb back to the next node with an undecided u-branch."""
        codeword = leaf.codeword
        depth = len(path.bits) - 1
        while depth >= 0 and path.bits[depth] == 1:
            codeword = np.concatenate([codeword, codeword * record.v_hats[depth]])
            depth -= 1

        info = record.info + leaf.info
        if depth < 0:
            return Record(info, cost, record.y_stack[:1], (None,), codeword=codeword, branch=record.branch)

        v_hats = record.v_hats[:depth] + (codeword,)
        return Record(info, cost, record.y_stack[:depth + 1], v_hats, branch=record.branch)

    def _finish(self, records: List[Record], counter: FlopCounter) -> DecodeResult:
        best = records[0]
        return DecodeResult(
            best_info=self.output_info(best.info),
            best_codeword=best.codeword,
            best_log_cost=best.log_cost,
            records=records,
            flops=counter.total,
            flop_breakdown=counter.breakdown(),
        )

    def __repr__(self) -> str:
        return (f"{self.__class__.__name__}(m={self.spec.m}, r={self.spec.r}, "
                f"L={self.list_size}, branch={self.branch}, recalc={self.recalc.value})")


def decode_list(
    spec: CodeSpec,
    mask: Optional[FrozenMask],
    y,
    L: int,
    branch: int = 4,
    recalc: RecalcRule = RecalcRule.EXACT,
) -> DecodeResult:
    """
    Decode ``y`` with a list of size ``L``.

    Args:
        spec: Code parameters
        mask: Frozen-bit mask, or None for the full code
        y: Posterior differences, length n
        L: List size
        branch: Leaf words tried per record at a full-space leaf
        recalc: u-recalculation rule

    Returns:
        DecodeResult with the surviving records, best first
    """
    return ListDecoder(spec, mask, list_size=L, branch=branch, recalc=recalc).decode(y)
