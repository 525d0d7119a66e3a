"""
RM Code Package

Reed-Muller code parameters, the recursive path decomposition, encoding and
subcode masks.
"""

from .errors import (
    ParameterError,
    LengthMismatchError,
    DimensionTooLargeError,
    ConfigError,
    ResultsWriteError,
)
from .code_spec import CodeSpec, LeafKind, LeafPath, code_params, enumerate_paths
from .frozen_mask import FrozenMask, default_pruning_order, pruning_order
from .encoder import (
    encode,
    encode_batch,
    generator_matrix,
    info_monomials,
    full_space_generator,
    full_space_inverse,
    full_space_monomials,
    pack_hex,
    to_bits,
    to_symbols,
    unpack_hex,
)

__all__ = [
    'ParameterError',
    'LengthMismatchError',
    'DimensionTooLargeError',
    'ConfigError',
    'ResultsWriteError',
    'CodeSpec',
    'LeafKind',
    'LeafPath',
    'code_params',
    'enumerate_paths',
    'FrozenMask',
    'default_pruning_order',
    'pruning_order',
    'encode',
    'encode_batch',
    'generator_matrix',
    'info_monomials',
    'full_space_generator',
    'full_space_inverse',
    'full_space_monomials',
    'pack_hex',
    'to_bits',
    'to_symbols',
    'unpack_hex',
]
