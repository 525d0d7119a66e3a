"""
Operation counter for the instrumented decoders.

Counting convention:
    v-recalculation        1 op per output symbol
    exact u-recalculation  5 ops per output symbol
    simplified u-rule      3 ops per output symbol
    leaf decision          1 op per leaf symbol per record
    list selection         candidates - 1 comparisons when the list overflows
    permutation dedup      1 comparison per candidate
Clamping and products of hard +1/-1 decisions are not counted.
"""

from collections import defaultdict
from typing import Dict


class FlopCounter:
    """Per-call tally of floating point operations, split by category."""

    def __init__(self):
        self._counts: Dict[str, int] = defaultdict(int)

    def add(self, category: str, count: int):
        """Add ``count`` operations to ``category``."""
        self._counts[category] += int(count)

    @property
    def total(self) -> int:
        """Total operations over all categories."""
        return sum(self._counts.values())

    def breakdown(self) -> Dict[str, int]:
        """Copy of the per-category counts."""
        return dict(self._counts)

    def __repr__(self) -> str:
        return f"FlopCounter(total={self.total}, {self.breakdown()})"
