"""
Channel models - AWGN and BSC with BPSK mapping a -> (-1)^a.

SNR values are E_b/N_0 per information bit in dB. With unit symbol energy
and code rate R the AWGN noise variance is sigma^2 = 1 / (2 R 10^(SNR/10)).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Union

import numpy as np
from scipy.special import erfc

from rm_code.errors import ParameterError
from .base import BaseChannel
from .soft_vector import clamp


class ChannelKind(Enum):
    """Supported channel models."""
    AWGN = "awgn"
    BSC = "bsc"


def sigma2_from_snr(snr_db: float, rate: float) -> float:
    """Noise variance per +1/-1 symbol for E_b/N_0 = ``snr_db`` at code rate ``rate``."""
    if not (0 < rate <= 1):
        raise ParameterError(f"Code rate must lie in (0, 1], got {rate}")
    return 1.0 / (2.0 * rate * 10.0 ** (snr_db / 10.0))


@dataclass(frozen=True)
class AWGNChannel(BaseChannel):
    """
    Additive white Gaussian noise channel.

    Fields:
        sigma2: Noise variance per +1/-1 symbol
    """

    sigma2: float

    def __post_init__(self):
        """Validate noise variance."""
        if not (self.sigma2 > 0 and np.isfinite(self.sigma2)):
            raise ParameterError(f"AWGN noise variance must be positive, got {self.sigma2}")

    @classmethod
    def from_snr(cls, snr_db: float, rate: float) -> 'AWGNChannel':
        """Channel at E_b/N_0 = ``snr_db`` for a code of rate ``rate``."""
        return cls(sigma2_from_snr(snr_db, rate))

    def snr_db(self, rate: float) -> float:
        """E_b/N_0 per information bit for a code of rate ``rate``."""
        return float(10.0 * np.log10(1.0 / (2.0 * rate * self.sigma2)))

    def transmit(self, codeword: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """x_i = c_i + N(0, sigma2)."""
        c = np.asarray(codeword, dtype=np.float64)
        return c + rng.normal(0.0, np.sqrt(self.sigma2), size=c.shape)

    def posteriors(self, x: np.ndarray) -> np.ndarray:
        """y_i = tanh(x_i / sigma2), the Bayes posterior difference for equiprobable inputs."""
        return clamp(np.tanh(np.asarray(x, dtype=np.float64) / self.sigma2))

    def to_dict(self) -> Dict:
        return {'kind': ChannelKind.AWGN.value, 'sigma2': self.sigma2}


@dataclass(frozen=True)
class BSCChannel(BaseChannel):
    """
    Binary symmetric channel.

    Fields:
        p: Crossover probability, 0 < p < 1/2
    """

    p: float

    def __post_init__(self):
        """Validate crossover probability."""
        if not (0 < self.p < 0.5):
            raise ParameterError(f"BSC crossover must satisfy 0 < p < 1/2, got {self.p}")

    @classmethod
    def from_snr(cls, snr_db: float, rate: float) -> 'BSCChannel':
        """Hard-decision BPSK: p = Q(sqrt(2 R E_b/N_0)) = erfc(sqrt(R E_b/N_0)) / 2."""
        if not (0 < rate <= 1):
            raise ParameterError(f"Code rate must lie in (0, 1], got {rate}")
        return cls(float(0.5 * erfc(np.sqrt(rate * 10.0 ** (snr_db / 10.0)))))

    def transmit(self, codeword: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """Flip every symbol independently with probability p."""
        c = np.asarray(codeword, dtype=np.float64)
        flips = rng.random(c.shape) < self.p
        return np.where(flips, -c, c)

    def posteriors(self, x: np.ndarray) -> np.ndarray:
        """y_i = +/-(1 - 2p) following the received hard symbol."""
        x = np.asarray(x, dtype=np.float64)
        return clamp(np.where(x < 0, -1.0, 1.0) * (1.0 - 2.0 * self.p))

    def to_dict(self) -> Dict:
        return {'kind': ChannelKind.BSC.value, 'p': self.p}


ChannelModel = Union[AWGNChannel, BSCChannel]


def make_channel(kind: ChannelKind, snr_db: float, rate: float) -> ChannelModel:
    """Build a channel of the given kind at E_b/N_0 = ``snr_db``."""
    if kind is ChannelKind.AWGN:
        return AWGNChannel.from_snr(snr_db, rate)
    if kind is ChannelKind.BSC:
        return BSCChannel.from_snr(snr_db, rate)
    raise ParameterError(f"Unknown channel kind: {kind}")


def transmit(codeword: np.ndarray, channel: BaseChannel, rng: np.random.Generator) -> np.ndarray:
    """Pass ``codeword`` through ``channel`` using the caller's random stream."""
    return channel.transmit(codeword, rng)


def posteriors(x: np.ndarray, channel: BaseChannel) -> np.ndarray:
    """Posterior differences of channel output ``x``."""
    return channel.posteriors(x)
