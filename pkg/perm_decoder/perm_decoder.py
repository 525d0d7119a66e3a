"""
Permutation Decoder - list decoding over a set of axis permutations.

Every representative permutation of the received vector starts one record.
All branches advance leaf by leaf in lockstep; after each leaf the union of
their extensions is cleared of entries that describe the same decided
information bits in original coordinates, and the best l survive.
"""

import logging
from typing import List, Optional

import numpy as np

from list_decoder.base import DecodeResult
from list_decoder.flops import FlopCounter
from list_decoder.list_decoder import Candidate, ListDecoder, candidate_key
from list_decoder.recalc import RecalcRule
from list_decoder.record import Record
from rm_code.code_spec import CodeSpec
from rm_code.errors import ParameterError
from .axis_perm import Direction, PermSet, build_perm_set, permute_soft

logger = logging.getLogger(__name__)


class PermutationDecoder(ListDecoder):
    """
    List decoder run on all representatives of a permutation set.

    Subcodes are not supported: the mask of a subcode is not preserved by
    the permutations.
    """

    def __init__(
        self,
        spec: CodeSpec,
        list_size: int = 16,
        perms: Optional[PermSet] = None,
        branch: int = 4,
        recalc: RecalcRule = RecalcRule.EXACT,
    ):
        """
        Initialize the decoder.

        Args:
            spec: Code parameters, 0 < r < m
            list_size: Records kept after every leaf over all branches
            perms: Permutation set (default: the full representative set)
            branch: Leaf words tried per record at a full-space leaf
            recalc: Rule for the u-component recalculation
        """
        super().__init__(spec, None, list_size=list_size, branch=branch, recalc=recalc)
        perms = perms if perms is not None else build_perm_set(spec.m, spec.r)
        if perms.m != spec.m or perms.size == 0:
            raise ParameterError(f"Permutation set for m={perms.m} cannot decode {spec!r}")
        self.perms = perms
        self._info_maps = [perm.info_map(spec.r) for perm in perms]

    def _initial_records(self, y: np.ndarray) -> List[Record]:
        return [
            Record.initial(permute_soft(y, perm, Direction.FORWARD), branch=b)
            for b, perm in enumerate(self.perms)
        ]

    def _dedup_key(self, candidate: Candidate) -> frozenset:
        """Decided information bits of a candidate in original indices."""
        _, record, leaf = candidate
        info_map = self._info_maps[record.branch]
        bits = record.info + leaf.info
        return frozenset((int(info_map[p]), bit) for p, bit in enumerate(bits))

    def _select(self, candidates: List[Candidate], counter: FlopCounter) -> List[Candidate]:
        counter.add('dedup', len(candidates))
        seen = set()
        unique: List[Candidate] = []
        for candidate in sorted(candidates, key=candidate_key):
            key = self._dedup_key(candidate)
            if key not in seen:
                seen.add(key)
                unique.append(candidate)

        if len(unique) < len(candidates):
            logger.debug(f"Removed {len(candidates) - len(unique)} duplicate candidates")

        if len(unique) > self.list_size:
            counter.add('select', len(unique) - 1)
        return unique[:self.list_size]

    def _finish(self, records: List[Record], counter: FlopCounter) -> DecodeResult:
        best = records[0]
        perm = self.perms[best.branch]

        codeword = permute_soft(best.codeword, perm, Direction.INVERSE)
        info = np.zeros(self.spec.k, dtype=np.uint8)
        info[self._info_maps[best.branch]] = np.asarray(best.info, dtype=np.uint8)

        return DecodeResult(
            best_info=info,
            best_codeword=codeword,
            best_log_cost=best.log_cost,
            records=records,
            flops=counter.total,
            flop_breakdown=counter.breakdown(),
        )

    def __repr__(self) -> str:
        return (f"PermutationDecoder(m={self.spec.m}, r={self.spec.r}, l={self.list_size}, "
                f"perms={self.perms.size}, branch={self.branch})")


def decode_perm(
    spec: CodeSpec,
    y,
    l: int,
    perms: Optional[PermSet] = None,
    branch: int = 4,
    recalc: RecalcRule = RecalcRule.EXACT,
) -> DecodeResult:
    """
    Decode ``y`` with the permutation decoder.

    Args:
        spec: Code parameters, 0 < r < m
        y: Posterior differences, length n
        l: Records kept after every leaf
        perms: Permutation set (default: all C(m, r) representatives)
        branch: Leaf words tried per record at a full-space leaf
        recalc: u-recalculation rule

    Returns:
        DecodeResult in original coordinates
    """
    return PermutationDecoder(spec, list_size=l, perms=perms, branch=branch, recalc=recalc).decode(y)
