"""
Soft Metrics Package

Channel simulation, posterior-difference vectors and ML decoding at the
leaf codes.
"""

from .base import BaseChannel
from .soft_vector import EPS_CLAMP, as_soft_vector, clamp, log_prob_terms
from .channel import (
    AWGNChannel,
    BSCChannel,
    ChannelKind,
    ChannelModel,
    make_channel,
    posteriors,
    sigma2_from_snr,
    transmit,
)
from .leaf_ml import (
    LeafCandidate,
    leaf_candidates,
    leaf_ml_fullspace,
    leaf_ml_parity_trellis,
    leaf_ml_repetition,
    leaf_ml_restricted,
)

__all__ = [
    'BaseChannel',
    'EPS_CLAMP',
    'as_soft_vector',
    'clamp',
    'log_prob_terms',
    'AWGNChannel',
    'BSCChannel',
    'ChannelKind',
    'ChannelModel',
    'make_channel',
    'posteriors',
    'sigma2_from_snr',
    'transmit',
    'LeafCandidate',
    'leaf_candidates',
    'leaf_ml_fullspace',
    'leaf_ml_parity_trellis',
    'leaf_ml_repetition',
    'leaf_ml_restricted',
]
