"""
Operation counts of the instrumented decoders.
"""

from typing import Dict

from list_decoder.base import DecodeResult


def basic_flop_bound(m: int, r: int) -> int:
    """Upper bound 6 n min(r, m - r) + n on the basic decoder's operation count."""
    n = 1 << m
    return 6 * n * min(r, m - r) + n


def list_flop_bound(m: int, r: int, list_size: int, overhead: float = 1.25) -> float:
    """Bound on the list decoder's count: L times the basic bound plus selection overhead."""
    return list_size * basic_flop_bound(m, r) * overhead


def flop_report(result: DecodeResult) -> int:
    """Operations counted during one decoding call."""
    return result.flops


def flop_breakdown(result: DecodeResult) -> Dict[str, int]:
    return dict(result.flop_breakdown)
