"""
Permutation Decoder Package

Axis permutations of the positions and list decoding over a
representative permutation set.
"""

from .axis_perm import (
    AxisPerm,
    Direction,
    PermSet,
    build_perm_set,
    identity_perm_set,
    permute_soft,
)
from .perm_decoder import PermutationDecoder, decode_perm

__all__ = [
    'AxisPerm',
    'Direction',
    'PermSet',
    'build_perm_set',
    'identity_perm_set',
    'permute_soft',
    'PermutationDecoder',
    'decode_perm',
]
