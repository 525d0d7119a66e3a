"""
Base Decoder - abstract interface for all soft-decision decoders.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from rm_code.code_spec import CodeSpec
from rm_code.encoder import pack_hex
from rm_code.frozen_mask import FrozenMask
from .record import Record


@dataclass
class DecodeResult:
    """
    Outcome of one decoding call.

    Fields:
        best_info: Information block of the best record (k_sub bits)
        best_codeword: +1/-1 codeword of the best record
        best_log_cost: log rho of the best record
        records: Surviving records, best first
        flops: Operations counted during the call
        flop_breakdown: Operations per category
    """

    best_info: np.ndarray
    best_codeword: np.ndarray
    best_log_cost: float
    records: List[Record] = field(repr=False)
    flops: int = 0
    flop_breakdown: Dict[str, int] = field(default_factory=dict, repr=False)

    @property
    def info_hex(self) -> str:
        """Best information block in hexadecimal, first bit most significant."""
        return pack_hex(self.best_info)

    def to_dict(self) -> Dict:
        """Convert result to dictionary."""
        return {
            'best_info': "".join(str(int(b)) for b in self.best_info),
            'best_info_hex': self.info_hex,
            'best_log_cost': self.best_log_cost,
            'list_size': len(self.records),
            'flops': self.flops,
            'flop_breakdown': self.flop_breakdown,
        }


class BaseDecoder(ABC):
    """
    Abstract base class for decoders of a (sub)code of {m, r}.

    All decoders take a soft vector of posterior differences and return a
    DecodeResult. A decoder instance holds only configuration, so one
    instance can serve concurrent calls.
    """

    def __init__(self, spec: CodeSpec, mask: Optional[FrozenMask] = None):
        """
        Initialize the decoder.

        Args:
            spec: Code parameters
            mask: Frozen-bit mask of a subcode, or None for the full code
        """
        if mask is not None:
            mask.check_spec(spec)
            if mask.is_empty:
                mask = None
        self.spec = spec
        self.mask = mask

    @abstractmethod
    def decode(self, y) -> DecodeResult:
        """
        Decode a soft vector.

        Args:
            y: Posterior differences, length n

        Returns:
            DecodeResult with the best information block and codeword
        """
        pass

    def leaf_frozen(self, path):
        """Frozen flags of a leaf, or None for the full code."""
        return self.mask.leaf_frozen(path) if self.mask is not None else None

    def output_info(self, full_info) -> np.ndarray:
        """Reduce a full k-bit block to the k_sub bits exposed to callers."""
        full = np.asarray(full_info, dtype=np.uint8)
        return self.mask.restrict(full) if self.mask is not None else full

    def __repr__(self) -> str:
        k = self.mask.k_sub if self.mask is not None else self.spec.k
        return f"{self.__class__.__name__}(m={self.spec.m}, r={self.spec.r}, k={k})"
