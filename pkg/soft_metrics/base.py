"""
Base classes and abstract interfaces for channel models.
"""

from abc import ABC, abstractmethod
from typing import Dict

import numpy as np


class BaseChannel(ABC):
    """Abstract base class for memoryless binary-input channels."""

    @abstractmethod
    def transmit(self, codeword: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """
        Pass a +1/-1 codeword through the channel.

        Args:
            codeword: Transmitted symbols
            rng: Random stream owned by the caller

        Returns:
            Real-valued channel output of the same length
        """
        pass

    @abstractmethod
    def posteriors(self, x: np.ndarray) -> np.ndarray:
        """
        Convert channel output to posterior differences.

        Args:
            x: Channel output

        Returns:
            Clamped soft vector y with y_i = 2 Pr{c_i = +1 | x_i} - 1
        """
        pass

    @abstractmethod
    def to_dict(self) -> Dict:
        """Describe the channel for result manifests."""
        pass
