"""
List Decoder Package

Recursive decoding of Reed-Muller codes and subcodes: posterior
recalculation, the basic recursive decoder and the list decoder.
"""

from .base import BaseDecoder, DecodeResult
from .flops import FlopCounter
from .list_decoder import ListDecoder, candidate_key, decode_list
from .recalc import (
    RecalcRule,
    codeword_log_posterior,
    cost_extend,
    recalc_u,
    recalc_u_simplified,
    recalc_v,
)
from .record import Record
from .recursive_decoder import RecursiveDecoder, decode_basic

__all__ = [
    'BaseDecoder',
    'DecodeResult',
    'FlopCounter',
    'ListDecoder',
    'RecursiveDecoder',
    'Record',
    'RecalcRule',
    'candidate_key',
    'codeword_log_posterior',
    'cost_extend',
    'decode_basic',
    'decode_list',
    'recalc_u',
    'recalc_u_simplified',
    'recalc_v',
]
