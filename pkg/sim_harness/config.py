"""
Simulation configuration.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from list_decoder.base import BaseDecoder
from list_decoder.list_decoder import ListDecoder
from list_decoder.recalc import RecalcRule
from list_decoder.recursive_decoder import RecursiveDecoder
from perm_decoder.perm_decoder import PermutationDecoder
from rm_code.code_spec import CodeSpec
from rm_code.errors import ConfigError, ParameterError
from rm_code.frozen_mask import FrozenMask
from soft_metrics.channel import ChannelKind, ChannelModel, make_channel


class DecoderKind(Enum):
    """Decoder families."""
    BASIC = "basic"
    LIST = "list"
    PERM = "perm"


@dataclass
class DecoderConfig:
    """
    Decoder selection.

    Fields:
        kind: BASIC, LIST or PERM
        list_size: L for the list decoder, l for the permutation decoder
        branch: Leaf words tried at a full-space leaf
        recalc: u-recalculation rule
    """

    kind: DecoderKind = DecoderKind.LIST
    list_size: int = 16
    branch: int = 4
    recalc: RecalcRule = RecalcRule.EXACT

    def __post_init__(self):
        """Validate decoder parameters."""
        if isinstance(self.kind, str):
            self.kind = DecoderKind(self.kind.lower())
        if isinstance(self.recalc, str):
            self.recalc = RecalcRule(self.recalc.lower())

        if self.list_size < 1:
            raise ParameterError(f"List size must be >= 1, got {self.list_size}")
        if self.branch < 1:
            raise ParameterError(f"branch must be >= 1, got {self.branch}")

    def build(self, spec: CodeSpec, mask: Optional[FrozenMask] = None) -> BaseDecoder:
        """Instantiate the configured decoder for a code."""
        if self.kind is DecoderKind.BASIC:
            return RecursiveDecoder(spec, mask, branch=self.branch, recalc=self.recalc)
        if self.kind is DecoderKind.LIST:
            return ListDecoder(spec, mask, list_size=self.list_size, branch=self.branch, recalc=self.recalc)

        if mask is not None and not mask.is_empty:
            raise ConfigError("Permutation decoding of subcodes is not supported")
        return PermutationDecoder(spec, list_size=self.list_size, branch=self.branch, recalc=self.recalc)

    def label(self) -> str:
        if self.kind is DecoderKind.BASIC:
            return "basic"
        name = "L" if self.kind is DecoderKind.LIST else "l"
        return f"{self.kind.value}({name}={self.list_size})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'list_size': self.list_size,
            'branch': self.branch,
            'recalc': self.recalc.value,
        }


@dataclass
class ChannelConfig:
    """
    Channel family; the noise level follows from each SNR point.

    Fields:
        kind: AWGN or BSC
    """

    kind: ChannelKind = ChannelKind.AWGN

    def __post_init__(self):
        if isinstance(self.kind, str):
            self.kind = ChannelKind(self.kind.lower())

    def make(self, snr_db: float, rate: float) -> ChannelModel:
        """Channel at E_b/N_0 = ``snr_db`` for a code of rate ``rate``."""
        return make_channel(self.kind, snr_db, rate)

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value}


@dataclass
class StopRule:
    """
    When to stop collecting trials at one SNR point.

    Fields:
        min_word_errors: Stop once this many word errors were seen
        max_trials: Stop after this many trials regardless
    """

    min_word_errors: int = 100
    max_trials: int = 1_000_000

    def __post_init__(self):
        if self.min_word_errors < 1:
            raise ParameterError(f"min_word_errors must be >= 1, got {self.min_word_errors}")
        if self.max_trials < 1:
            raise ParameterError(f"max_trials must be >= 1, got {self.max_trials}")

    def reached(self, trials: int, word_errors: int) -> bool:
        return word_errors >= self.min_word_errors or trials >= self.max_trials

    def to_dict(self) -> Dict[str, Any]:
        return {'min_word_errors': self.min_word_errors, 'max_trials': self.max_trials}


@dataclass
class SimConfig:
    """
    Complete description of a simulation sweep.

    Essential Fields:
        spec: Code parameters
        mask: Frozen-bit mask of a subcode, or None
        decoder: Decoder selection
        channel: Channel family
        snr_points_db: E_b/N_0 values per information bit
        stop_rule: Per-point stopping rule
        seed: Root of all random streams, 0 <= seed < 2^64

    Additional Fields:
        workers: Worker processes (1 runs in-process)
        oracle: Also run the brute-force ML decoder on every trial
        batch_size: Trials handed out per scheduling round
    """

    spec: CodeSpec
    mask: Optional[FrozenMask] = None
    decoder: DecoderConfig = field(default_factory=DecoderConfig)
    channel: ChannelConfig = field(default_factory=ChannelConfig)
    snr_points_db: List[float] = field(default_factory=list)
    stop_rule: StopRule = field(default_factory=StopRule)
    seed: int = 0

    workers: int = 1
    oracle: bool = False
    batch_size: int = 256

    def __post_init__(self):
        """Validate the sweep."""
        if not self.snr_points_db:
            raise ConfigError("snr list must not be empty")
        self.snr_points_db = [float(s) for s in self.snr_points_db]

        if self.mask is not None:
            self.mask.check_spec(self.spec)
        if not (0 <= self.seed < 2 ** 64):
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.decoder.kind is DecoderKind.PERM and self.mask is not None and not self.mask.is_empty:
            raise ConfigError("Permutation decoding of subcodes is not supported")

    @property
    def k_sub(self) -> int:
        return self.mask.k_sub if self.mask is not None else self.spec.k

    @property
    def rate(self) -> float:
        """Transmission rate k_sub / n used for the SNR normalization."""
        return self.k_sub / self.spec.n

    def to_dict(self) -> Dict[str, Any]:
        """Configuration echo for result files and manifests."""
        return {
            'code': {
                'm': self.spec.m,
                'r': self.spec.r,
                'n': self.spec.n,
                'k': self.spec.k,
                'k_sub': self.k_sub,
                'frozen': sorted(self.mask.frozen) if self.mask is not None else [],
            },
            'decoder': self.decoder.to_dict(),
            'channel': self.channel.to_dict(),
            'snr_points_db': list(self.snr_points_db),
            'stop_rule': self.stop_rule.to_dict(),
            'seed': self.seed,
            'workers': self.workers,
            'oracle': self.oracle,
            'batch_size': self.batch_size,
        }
