"""
Shared fixtures: seeded random streams and noisy codewords.
"""

import numpy as np
import pytest

from rm_code import code_params, encode
from soft_metrics import AWGNChannel


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def noisy_word(rng):
    """Factory returning (info, codeword, y) for a random block sent over AWGN."""

    def make(spec, sigma2, mask=None):
        k = mask.k_sub if mask is not None else spec.k
        info = rng.integers(0, 2, size=k, dtype=np.uint8)
        codeword = encode(spec, mask, info)
        channel = AWGNChannel(sigma2)
        y = channel.posteriors(channel.transmit(codeword, rng))
        return info, codeword, y

    return make


@pytest.fixture(params=[(3, 1), (4, 1), (4, 2), (4, 3)], ids=lambda p: f"rm{p[0]}{p[1]}")
def small_spec(request):
    return code_params(*request.param)
